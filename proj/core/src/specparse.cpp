#include <cctype>
#include <sstream>

#include "codegree/builders.hpp"
#include "codegree/errors.hpp"
#include "codegree/gf.hpp"

namespace codegree {

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw SpecParseError(msg, i); }
  void expect(char c) {
    ws();
    if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  }
  bool peek_is(char c) {
    ws();
    return i < s.size() && s[i] == c;
  }
  uint64_t integer() {
    ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail("expected an integer");
    uint64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > (1ull << 40)) fail("integer parameter too large");
      ++i;
    }
    return v;
  }
  std::string name() {
    ws();
    size_t start = i;
    while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("expected a constructor name");
    return s.substr(start, i - start);
  }

  std::string cycle_text() {
    // one generator: a maximal run of parenthesized cycles
    ws();
    size_t arg_pos = i;
    std::string text;
    bool any = false;
    while (peek_is('(')) {
      size_t start = i;
      int depth = 0;
      do {
        if (i >= s.size()) fail("unterminated cycle");
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        ++i;
      } while (depth > 0);
      text += s.substr(start, i - start);
      any = true;
    }
    if (!any) {
      i = arg_pos;
      fail("expected a cycle expression");
    }
    return text;
  }

  GroupSpec spec() {
    ws();
    size_t name_pos = i;
    std::string nm = name();
    GroupSpec g;
    if (nm == "DP" || nm == "Wr") {
      g.kind = (nm == "DP") ? GroupSpec::Kind::DP : GroupSpec::Kind::Wr;
      expect('(');
      g.args.push_back(spec());
      expect(',');
      g.args.push_back(spec());
      expect(')');
      return g;
    }
    if (nm == "Perm") {
      g.kind = GroupSpec::Kind::Perm;
      expect('(');
      size_t deg_pos = i;
      uint64_t d = integer();
      if (d < 1 || d > 4096) {
        i = deg_pos;
        fail("permutation degree out of range");
      }
      g.perm_degree = static_cast<uint32_t>(d);
      expect(';');
      while (true) {
        size_t gen_pos = i;
        std::string text = cycle_text();
        try {
          g.perm_cycles.push_back(Perm::from_cycles(g.perm_degree, text).cycles());
        } catch (const DomainError& e) {
          i = gen_pos;
          fail(e.what());
        }
        if (peek_is(',')) {
          expect(',');
          continue;
        }
        break;
      }
      expect(')');
      return g;
    }
    static const std::pair<const char*, GroupSpec::Kind> atomic[] = {
        {"Sym", GroupSpec::Kind::Sym},   {"Alt", GroupSpec::Kind::Alt},
        {"Cyc", GroupSpec::Kind::Cyc},   {"Dih", GroupSpec::Kind::Dih},
        {"PSL2", GroupSpec::Kind::PSL2}, {"PGL2", GroupSpec::Kind::PGL2},
        {"PGammaL2", GroupSpec::Kind::PGammaL2},
        {"SL2", GroupSpec::Kind::SL2},   {"PSL3", GroupSpec::Kind::PSL3},
    };
    for (const auto& [aname, kind] : atomic) {
      if (nm == aname) {
        g.kind = kind;
        expect('(');
        size_t arg_pos = i;
        g.n = integer();
        expect(')');
        validate_atomic(g, arg_pos);
        return g;
      }
    }
    i = name_pos;
    fail("unknown constructor '" + nm + "'");
  }

  void validate_atomic(const GroupSpec& g, size_t arg_pos) {
    auto bad = [&](const std::string& msg) {
      i = arg_pos;
      fail(msg);
    };
    switch (g.kind) {
      case GroupSpec::Kind::Sym:
      case GroupSpec::Kind::Alt:
      case GroupSpec::Kind::Cyc:
        if (g.n < 1) bad("parameter must be >= 1");
        break;
      case GroupSpec::Kind::Dih:
        if (g.n < 3) bad("Dih(n) needs n >= 3");
        break;
      case GroupSpec::Kind::PSL2:
      case GroupSpec::Kind::PGL2:
      case GroupSpec::Kind::PGammaL2: {
        if (!GF::is_prime_power(g.n))
          bad(std::to_string(g.n) + " is not a prime power");
        if (g.n > 65536) bad("field parameter exceeds 2^16");
        break;
      }
      case GroupSpec::Kind::SL2: {
        uint64_t p = 0;
        uint32_t f = 0;
        if (!GF::is_prime_power(g.n, &p, &f) || p != 2)
          bad("SL2(q) requires q = 2^f");
        break;
      }
      case GroupSpec::Kind::PSL3:
        if (g.n != 2 && g.n != 3) bad("PSL3(q) supports q in {2, 3}");
        break;
      default:
        break;
    }
  }
};

}  // namespace

GroupSpec parse_spec(const std::string& text) {
  Parser p{text};
  GroupSpec g = p.spec();
  p.ws();
  if (p.i != text.size()) p.fail("trailing input after spec");
  return g;
}

std::string GroupSpec::str() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Sym: out << "Sym(" << n << ")"; break;
    case Kind::Alt: out << "Alt(" << n << ")"; break;
    case Kind::Cyc: out << "Cyc(" << n << ")"; break;
    case Kind::Dih: out << "Dih(" << n << ")"; break;
    case Kind::PSL2: out << "PSL2(" << n << ")"; break;
    case Kind::PGL2: out << "PGL2(" << n << ")"; break;
    case Kind::PGammaL2: out << "PGammaL2(" << n << ")"; break;
    case Kind::SL2: out << "SL2(" << n << ")"; break;
    case Kind::PSL3: out << "PSL3(" << n << ")"; break;
    case Kind::DP:
      out << "DP(" << args[0].str() << "," << args[1].str() << ")";
      break;
    case Kind::Wr:
      out << "Wr(" << args[0].str() << "," << args[1].str() << ")";
      break;
    case Kind::Perm: {
      out << "Perm(" << perm_degree << ";";
      for (size_t k = 0; k < perm_cycles.size(); ++k) {
        if (k) out << ",";
        out << perm_cycles[k];
      }
      out << ")";
      break;
    }
  }
  return out.str();
}

}  // namespace codegree
