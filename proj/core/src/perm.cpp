#include "codegree/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "codegree/errors.hpp"

namespace codegree {

Perm::Perm(std::vector<uint32_t> images) : img_(std::move(images)) {
  if (img_.empty()) throw DomainError("permutation degree must be >= 1");
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t x : img_) {
    if (x >= img_.size() || seen[x]) throw DomainError("image array is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(uint32_t degree) {
  if (degree == 0) throw DomainError("permutation degree must be >= 1");
  std::vector<uint32_t> v(degree);
  std::iota(v.begin(), v.end(), 0u);
  Perm p;
  p.img_ = std::move(v);
  return p;
}

Perm Perm::from_cycles(uint32_t degree, const std::string& text) {
  Perm p = identity(degree);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw DomainError("expected '(' in cycle string: " + text);
    ++i;
    std::vector<uint32_t> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[i])))
        throw DomainError("expected point number in cycle string: " + text);
      uint64_t v = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v >= degree) throw DomainError("cycle point out of range in: " + text);
      cyc.push_back(static_cast<uint32_t>(v));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i == text.size()) throw DomainError("unterminated cycle in: " + text);
    ++i;  // ')'
    for (size_t k = 0; k + 1 < cyc.size(); ++k) {
      if (p.img_[cyc[k]] != cyc[k]) throw DomainError("point repeated across cycles in: " + text);
      p.img_[cyc[k]] = cyc[k + 1];
    }
    if (cyc.size() >= 2) {
      if (p.img_[cyc.back()] != cyc.back())
        throw DomainError("point repeated across cycles in: " + text);
      p.img_[cyc.back()] = cyc.front();
    }
    skip_ws();
  }
  // Validate bijectivity (repeated first points inside one cycle).
  std::vector<bool> seen(degree, false);
  for (uint32_t x : p.img_) {
    if (seen[x]) throw DomainError("cycle string is not a permutation: " + text);
    seen[x] = true;
  }
  return p;
}

bool Perm::is_identity() const {
  for (uint32_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<uint32_t> v(img_.size());
  for (uint32_t x = 0; x < img_.size(); ++x) v[img_[x]] = x;
  Perm p;
  p.img_ = std::move(v);
  return p;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw DomainError("degree mismatch in composition");
  std::vector<uint32_t> v(p.img_.size());
  for (uint32_t x = 0; x < p.img_.size(); ++x) v[x] = q.img_[p.img_[x]];
  Perm r;
  r.img_ = std::move(v);
  return r;
}

Perm compose(const Perm& p, const Perm& q) { return p * q; }

Perm conjugate(const Perm& g, const Perm& h) { return h.inverse() * g * h; }

Perm Perm::pow(int64_t k) const {
  uint64_t n = order();
  int64_t r = k % static_cast<int64_t>(n);
  if (r < 0) r += static_cast<int64_t>(n);
  Perm acc = identity(degree());
  Perm base = *this;
  uint64_t e = static_cast<uint64_t>(r);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

uint64_t Perm::order() const {
  std::vector<bool> seen(img_.size(), false);
  uint64_t ord = 1;
  for (uint32_t x = 0; x < img_.size(); ++x) {
    if (seen[x]) continue;
    uint64_t len = 0;
    uint32_t y = x;
    do {
      seen[y] = true;
      y = img_[y];
      ++len;
    } while (y != x);
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (uint32_t x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == x) {
      seen[x] = true;
      continue;
    }
    any = true;
    out << '(';
    uint32_t y = x;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << y;
      seen[y] = true;
      y = img_[y];
      first = false;
    } while (y != x);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image words.
  uint64_t h = 1469598103934665603ull;
  for (uint32_t x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

}  // namespace codegree
