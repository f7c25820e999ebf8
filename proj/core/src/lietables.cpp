#include "codegree/lietables.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "codegree/cyclo.hpp"
#include "codegree/errors.hpp"
#include "codegree/gf.hpp"

namespace codegree {

namespace {

using nlohmann::json;

LieExpr parse_expr(const json& j) {
  LieExpr e;
  if (j.is_number_integer()) {
    e.op = LieExpr::Op::Int;
    e.value = j.get<long long>();
    return e;
  }
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "q") e.op = LieExpr::Op::Q;
    else if (s == "n") e.op = LieExpr::Op::N;
    else if (s == "p") e.op = LieExpr::Op::P;
    else if (s == "i") e.op = LieExpr::Op::I;
    else throw Error("unknown symbol in lie table expression: " + s);
    return e;
  }
  if (!j.is_array() || j.empty() || !j[0].is_string())
    throw Error("malformed lie table expression");
  std::string op = j[0].get<std::string>();
  auto rest = [&](size_t expect = 0) {
    if (expect && j.size() != expect + 1) throw Error("bad arity in lie expression: " + op);
    for (size_t k = 1; k < j.size(); ++k) e.args.push_back(parse_expr(j[k]));
  };
  if (op == "+") { e.op = LieExpr::Op::Add; rest(); }
  else if (op == "-") { e.op = LieExpr::Op::Sub; rest(2); }
  else if (op == "*") { e.op = LieExpr::Op::Mul; rest(); }
  else if (op == "div") { e.op = LieExpr::Op::Div; rest(2); }
  else if (op == "pow") { e.op = LieExpr::Op::Pow; rest(2); }
  else if (op == "phi") { e.op = LieExpr::Op::Phi; rest(1); }
  else if (op == "prod") { e.op = LieExpr::Op::Prod; rest(3); }
  else if (op == "gcd") { e.op = LieExpr::Op::Gcd; rest(2); }
  else if (op == "neg1pow") { e.op = LieExpr::Op::Neg1Pow; rest(1); }
  else if (op == "sqrtq") {
    e.op = LieExpr::Op::SqrtQ;
    if (j.size() != 2 || !j[1].is_number_integer()) throw Error("sqrtq needs a characteristic");
    e.value = j[1].get<long long>();
  } else {
    throw Error("unknown lie expression operator: " + op);
  }
  if (e.args.empty() && (e.op == LieExpr::Op::Add || e.op == LieExpr::Op::Mul))
    throw Error("empty operand list in lie expression");
  return e;
}

struct Env {
  mpz_class q;
  uint64_t n = 0;
  uint64_t p = 0;
  mpz_class i;
};

mpz_class eval(const LieExpr& e, const Env& env) {
  switch (e.op) {
    case LieExpr::Op::Int: return mpz_class(static_cast<long>(e.value));
    case LieExpr::Op::Q: return env.q;
    case LieExpr::Op::N: return mpz_class(static_cast<unsigned long>(env.n));
    case LieExpr::Op::P: return mpz_class(static_cast<unsigned long>(env.p));
    case LieExpr::Op::I: return env.i;
    case LieExpr::Op::Add: {
      mpz_class a = 0;
      for (const LieExpr& x : e.args) a += eval(x, env);
      return a;
    }
    case LieExpr::Op::Sub: return eval(e.args[0], env) - eval(e.args[1], env);
    case LieExpr::Op::Mul: {
      mpz_class a = 1;
      for (const LieExpr& x : e.args) a *= eval(x, env);
      return a;
    }
    case LieExpr::Op::Div: {
      mpz_class num = eval(e.args[0], env);
      mpz_class den = eval(e.args[1], env);
      if (den == 0 || num % den != 0)
        throw TableError("table-integrity failure: non-integral evaluation");
      return num / den;
    }
    case LieExpr::Op::Pow: {
      mpz_class base = eval(e.args[0], env);
      mpz_class ex = eval(e.args[1], env);
      if (ex < 0) throw TableError("negative exponent in lie formula");
      mpz_class out;
      mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), ex.get_ui());
      return out;
    }
    case LieExpr::Op::Phi: {
      mpz_class idx = eval(e.args[0], env);
      return eval_phi(idx.get_ui(), env.q);
    }
    case LieExpr::Op::Prod: {
      mpz_class from = eval(e.args[0], env);
      mpz_class to = eval(e.args[1], env);
      mpz_class acc = 1;
      Env inner = env;
      for (mpz_class i = from; i <= to; ++i) {
        inner.i = i;
        acc *= eval(e.args[2], inner);
      }
      return acc;
    }
    case LieExpr::Op::Gcd: {
      mpz_class a = eval(e.args[0], env), b = eval(e.args[1], env);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      return g;
    }
    case LieExpr::Op::Neg1Pow: {
      mpz_class ex = eval(e.args[0], env);
      return (ex % 2 == 0) ? mpz_class(1) : mpz_class(-1);
    }
    case LieExpr::Op::SqrtQ: {
      // sqrt(q / p) for q = p^(2f+1): equals p^f
      uint64_t p = static_cast<uint64_t>(e.value);
      mpz_class q = env.q;
      uint64_t f2 = 0;
      while (q % static_cast<unsigned long>(p) == 0) {
        q /= static_cast<unsigned long>(p);
        ++f2;
      }
      if (q != 1 || f2 % 2 == 0)
        throw TableError("sqrt(q/p) requires q to be an odd power of p");
      mpz_class out;
      mpz_ui_pow_ui(out.get_mpz_t(), p, (f2 - 1) / 2);
      return out;
    }
  }
  throw Error("unhandled lie expression node");
}

bool q_admissible(const std::string& constraint, uint64_t q, uint64_t* p_out) {
  uint64_t p = 0;
  uint32_t f = 0;
  if (!GF::is_prime_power(q, &p, &f)) return false;
  if (p_out) *p_out = p;
  if (constraint == "char23") return p == 2 || p == 3;
  if (constraint == "pow2-odd-exp-ge8") return p == 2 && f % 2 == 1 && q >= 8;
  if (constraint == "p23-even-exp") return (p == 2 || p == 3) && f % 2 == 0;
  if (constraint == "pow3-odd-exp-ge27") return p == 3 && f % 2 == 1 && q >= 27;
  throw Error("unknown q constraint: " + constraint);
}

}  // namespace

LieQuery parse_family(const std::string& token) {
  LieQuery qy;
  size_t i = 0;
  if (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) {
    qy.twist = token[i] - '0';
    ++i;
    if (qy.twist != 2 && qy.twist != 3)
      throw DomainError("bad twist prefix in family token: " + token);
  }
  if (i >= token.size() || !std::isupper(static_cast<unsigned char>(token[i])))
    throw DomainError("bad family token: " + token);
  qy.series = token[i];
  ++i;
  if (i >= token.size()) throw DomainError("family token missing rank: " + token);
  uint64_t rank = 0;
  for (; i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i])))
      throw DomainError("bad family token: " + token);
    rank = rank * 10 + (token[i] - '0');
  }
  if (rank < 1 || rank > 64) throw DomainError("family rank out of range: " + token);
  qy.rank = static_cast<uint32_t>(rank);
  return qy;
}

LieTables LieTables::parse(const std::string& text) {
  json j = json::parse(text);
  LieTables t;
  t.version_ = j.at("version").get<uint32_t>();
  for (const json& row : j.at("rows")) {
    LieFamilyEntry e;
    e.id = row.at("id").get<std::string>();
    e.isomorphism = row.at("isomorphism").get<std::string>();
    e.twist = row.at("twist").get<uint32_t>();
    e.series = row.at("series").get<std::string>();
    if (row.contains("rank")) e.rank = row.at("rank").get<uint32_t>();
    if (row.contains("rank_min")) e.rank_min = row.at("rank_min").get<uint32_t>();
    e.q_constraint = row.at("q_constraint").get<std::string>();
    e.order = parse_expr(row.at("order"));
    e.alpha = parse_expr(row.at("alpha"));
    e.beta = parse_expr(row.at("beta"));
    e.alpha_label = row.at("alpha_label").get<std::string>();
    e.beta_label = row.at("beta_label").get<std::string>();
    if (!row.at("sylow").is_null()) {
      LieSylow s;
      const json& sj = row.at("sylow");
      if (sj.contains("exact_by_p"))
        for (auto it = sj["exact_by_p"].begin(); it != sj["exact_by_p"].end(); ++it)
          s.exact_by_p[std::stoull(it.key())] = it.value().get<uint64_t>();
      if (sj.contains("bound_linear_c")) s.bound_linear_c = parse_expr(sj["bound_linear_c"]);
      e.sylow = std::move(s);
    }
    t.rows_.push_back(std::move(e));
  }
  return t;
}

const LieTables& LieTables::builtin() {
  static LieTables t = LieTables::parse(kLieTablesJson);
  return t;
}

LieTables LieTables::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lie table file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const LieFamilyEntry& LieTables::find(const std::string& family, uint64_t q) const {
  LieQuery qy = parse_family(family);
  const LieFamilyEntry* hit = nullptr;
  bool family_exists = false;
  for (const LieFamilyEntry& e : rows_) {
    if (e.twist != qy.twist) continue;
    bool series_ok = e.series.find(qy.series) != std::string::npos;
    if (!series_ok) continue;
    bool rank_ok = e.rank ? (e.rank == qy.rank) : (qy.rank >= e.rank_min);
    if (!rank_ok) continue;
    family_exists = true;
    if (!q_admissible(e.q_constraint, q, nullptr)) continue;
    if (hit) throw Error("ambiguous lie row match for " + family);
    hit = &e;
  }
  if (!hit) {
    if (family_exists)
      throw DomainError("q = " + std::to_string(q) + " is inadmissible for family " + family +
                        " (wrong characteristic, parity, or range)");
    throw DomainError("unknown family token: " + family);
  }
  return *hit;
}

namespace {

Env make_env(const LieFamilyEntry& row, const LieQuery& qy, uint64_t q) {
  Env env;
  env.q = static_cast<unsigned long>(q);
  env.n = row.rank ? row.rank : qy.rank;
  uint64_t p = 0;
  GF::is_prime_power(q, &p, nullptr);
  env.p = p;
  return env;
}

mpz_class p_part_of(const mpz_class& value, uint64_t p) {
  mpz_class part = 1;
  mpz_class rest = value;
  while (rest % static_cast<unsigned long>(p) == 0) {
    rest /= static_cast<unsigned long>(p);
    part *= static_cast<unsigned long>(p);
  }
  return part;
}

}  // namespace

mpz_class LieTables::order_of(const std::string& family, uint64_t q) const {
  const LieFamilyEntry& row = find(family, q);
  return eval(row.order, make_env(row, parse_family(family), q));
}

mpz_class LieTables::alpha_degree(const std::string& family, uint64_t q) const {
  const LieFamilyEntry& row = find(family, q);
  return eval(row.alpha, make_env(row, parse_family(family), q));
}

mpz_class LieTables::beta_degree(const std::string& family, uint64_t q) const {
  const LieFamilyEntry& row = find(family, q);
  return eval(row.beta, make_env(row, parse_family(family), q));
}

LieCheckResult LieTables::divisibility_check(const std::string& family, uint64_t q,
                                             const LieGroupData* gd) const {
  const LieFamilyEntry& row = find(family, q);
  LieQuery qy = parse_family(family);
  Env env = make_env(row, qy, q);
  LieCheckResult res;
  res.row_id = row.id;
  res.q = q;
  res.characteristic = env.p;
  res.order = eval(row.order, env);
  res.alpha = eval(row.alpha, env);
  res.beta = eval(row.beta, env);
  if (res.order <= 0 || res.alpha <= 0 || res.beta <= 0)
    throw TableError("table-integrity failure: non-positive evaluation");
  if (res.order % res.alpha != 0 || res.order % res.beta != 0)
    throw TableError("table-integrity failure: degree does not divide the order");
  res.p_part = p_part_of(res.order, env.p);
  res.beta_is_p_part = (res.beta == res.p_part);
  res.product = (res.order / res.alpha) * (res.order / res.beta);

  if (row.sylow) {
    mpz_class p_prime_part = res.order / res.p_part;
    mpz_class sylow_value;
    if (!row.sylow->exact_by_p.empty()) {
      auto it = row.sylow->exact_by_p.find(env.p);
      if (it == row.sylow->exact_by_p.end())
        throw DomainError("no exact Sylow exponent recorded for characteristic " +
                          std::to_string(env.p));
      sylow_value = static_cast<unsigned long>(it->second);
      res.notes.push_back("sylow-exponent-exact:" + sylow_value.get_str());
    } else {
      sylow_value = eval(*row.sylow->bound_linear_c, env) * static_cast<unsigned long>(env.p);
      res.notes.push_back("sylow-exponent-bound:" + sylow_value.get_str());
    }
    res.required = p_prime_part * sylow_value;
    res.arithmetic_pass = res.product % res.required == 0;
  } else {
    // both alpha and beta are explicit: the order itself must divide
    res.required = res.order;
    res.arithmetic_pass = res.product % res.required == 0;
    res.notes.push_back("order-divides-product");
  }
  res.pass = res.arithmetic_pass;

  if (gd) {
    if (gd->exponent) {
      bool ok = res.product % static_cast<unsigned long>(*gd->exponent) == 0;
      res.true_exponent_divides = ok;
      res.pass = res.pass && ok;
    }
    if (gd->sylow_p_exponent && row.sylow) {
      mpz_class limit;
      if (!row.sylow->exact_by_p.empty())
        limit = static_cast<unsigned long>(row.sylow->exact_by_p.at(env.p));
      else
        limit = eval(*row.sylow->bound_linear_c, env) * static_cast<unsigned long>(env.p);
      bool ok = mpz_class(static_cast<unsigned long>(*gd->sylow_p_exponent)) <= limit;
      res.sylow_exponent_within_bound = ok;
      res.pass = res.pass && ok;
    }
    if (gd->degrees) {
      bool ok = false;
      for (uint64_t d : *gd->degrees)
        if (res.alpha == static_cast<unsigned long>(d)) ok = true;
      res.alpha_among_degrees = ok;
      res.pass = res.pass && ok;
    }
    if (gd->bsgs_order) {
      bool ok = res.order == *gd->bsgs_order;
      res.order_matches_group = ok;
      res.pass = res.pass && ok;
    }
  }
  return res;
}

}  // namespace codegree
