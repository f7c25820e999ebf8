#include "codegree/gf.hpp"

#include <numeric>

#include "codegree/errors.hpp"

namespace codegree {

namespace {

// Dense polynomials over F_p, ascending coefficients.
using Poly = std::vector<uint64_t>;

Poly poly_mod(Poly a, const Poly& m, uint64_t p) {
  // m monic
  while (a.size() >= m.size()) {
    uint64_t lead = a.back();
    if (lead != 0) {
      size_t shift = a.size() - m.size();
      for (size_t i = 0; i < m.size(); ++i) {
        uint64_t sub = (lead * m[i]) % p;
        a[shift + i] = (a[shift + i] + p * p - sub) % p;
      }
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(prod), m, p);
}

Poly poly_powmod_xq(uint64_t e, const Poly& m, uint64_t p) {
  // x^(p^e) mod m via repeated p-th powering
  Poly x = {0, 1};
  x = poly_mod(std::move(x), m, p);
  Poly acc = x;
  for (uint64_t step = 0; step < e; ++step) {
    // acc = acc^p
    Poly r = {1};
    Poly base = acc;
    uint64_t k = p;
    while (k) {
      if (k & 1) r = poly_mulmod(r, base, m, p);
      base = poly_mulmod(base, base, m, p);
      k >>= 1;
    }
    acc = std::move(r);
  }
  return acc;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
  auto inv_mod = [&](uint64_t x) {
    uint64_t r = 1, e = p - 2, base = x % p;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  while (!b.empty()) {
    // normalize b monic
    uint64_t il = inv_mod(b.back());
    for (uint64_t& c : b) c = c * il % p;
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const Poly& m, uint64_t p, uint32_t f) {
  // x^(p^f) == x mod m, and gcd(x^(p^(f/l)) - x, m) = 1 for primes l | f
  Poly xq = poly_powmod_xq(f, m, p);
  Poly x = poly_mod({0, 1}, m, p);
  if (xq != x) return false;
  for (uint32_t l = 2; l <= f; ++l) {
    if (f % l != 0) continue;
    bool prime = true;
    for (uint32_t d = 2; d * d <= l; ++d)
      if (l % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    Poly xe = poly_powmod_xq(f / l, m, p);
    // xe - x
    Poly diff = xe;
    diff.resize(std::max(diff.size(), x.size()), 0);
    for (size_t i = 0; i < x.size(); ++i) diff[i] = (diff[i] + p - x[i]) % p;
    while (!diff.empty() && diff.back() == 0) diff.pop_back();
    Poly g = poly_gcd(m, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

// Lexicographically least monic irreducible of degree f over F_p.
Poly canonical_irreducible(uint64_t p, uint32_t f) {
  Poly m(f + 1, 0);
  m[f] = 1;
  // iterate low coefficients as base-p counter
  uint64_t total = 1;
  for (uint32_t i = 0; i < f; ++i) total *= p;
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t c = code;
    for (uint32_t i = 0; i < f; ++i) {
      m[i] = c % p;
      c /= p;
    }
    if (m[0] == 0) continue;  // reducible (root 0)
    if (is_irreducible(m, p, f)) return m;
  }
  throw Error("no irreducible polynomial found");  // unreachable
}

}  // namespace

bool GF::is_prime_power(uint64_t q, uint64_t* p_out, uint32_t* f_out) {
  if (q < 2) return false;
  uint64_t n = q;
  uint64_t p = 0;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = n;
  uint32_t f = 0;
  while (n % p == 0) {
    n /= p;
    ++f;
  }
  if (n != 1) return false;
  if (p_out) *p_out = p;
  if (f_out) *f_out = f;
  return true;
}

GF::GF(uint64_t q) : q_(q) {
  if (q > 65536) throw DomainError("field size exceeds 2^16");
  if (!is_prime_power(q, &p_, &f_)) throw DomainError(std::to_string(q) + " is not a prime power");
  Poly irred = canonical_irreducible(p_, f_);

  // element index <-> coefficient tuple, base p
  auto mul_raw = [&](uint64_t a, uint64_t b) -> uint64_t {
    Poly pa, pb;
    for (uint64_t x = a; x; x /= p_) pa.push_back(x % p_);
    for (uint64_t x = b; x; x /= p_) pb.push_back(x % p_);
    Poly prod = poly_mulmod(pa, pb, irred, p_);
    uint64_t idx = 0;
    for (size_t i = prod.size(); i-- > 0;) idx = idx * p_ + prod[i];
    return idx;
  };

  // find a primitive element
  std::vector<uint64_t> prime_factors;
  uint64_t n = q_ - 1;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      prime_factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) prime_factors.push_back(n);
  auto pow_raw = [&](uint64_t a, uint64_t e) {
    uint64_t acc = 1;
    while (e) {
      if (e & 1) acc = mul_raw(acc, a);
      a = mul_raw(a, a);
      e >>= 1;
    }
    return acc;
  };
  gen_ = 0;
  for (uint64_t g = 2; g < q_; ++g) {
    bool ok = true;
    for (uint64_t pf : prime_factors)
      if (pow_raw(g, (q_ - 1) / pf) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen_ = g;
      break;
    }
  }
  if (gen_ == 0) {
    if (q_ == 2)
      gen_ = 1;
    else
      throw Error("no primitive element found");
  }

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  uint64_t cur = 1;
  for (uint64_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = static_cast<uint32_t>(cur);
    log_[cur] = static_cast<uint32_t>(i);
    cur = mul_raw(cur, gen_);
  }
}

uint64_t GF::add(uint64_t a, uint64_t b) const {
  uint64_t out = 0, mult = 1;
  while (a || b) {
    uint64_t d = (a % p_ + b % p_) % p_;
    out += d * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

uint64_t GF::neg(uint64_t a) const {
  uint64_t out = 0, mult = 1;
  while (a) {
    uint64_t d = (p_ - a % p_) % p_;
    out += d * mult;
    mult *= p_;
    a /= p_;
  }
  return out;
}

uint64_t GF::sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }

uint64_t GF::mul(uint64_t a, uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  uint64_t l = (static_cast<uint64_t>(log_[a]) + log_[b]) % (q_ - 1);
  return exp_[l];
}

uint64_t GF::inv(uint64_t a) const {
  if (a == 0) throw DomainError("division by zero in GF");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

uint64_t GF::frobenius(uint64_t a) const {
  if (a == 0) return 0;
  uint64_t l = (static_cast<uint64_t>(log_[a]) * p_) % (q_ - 1);
  return exp_[l];
}

}  // namespace codegree
