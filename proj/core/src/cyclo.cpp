#include "codegree/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "codegree/errors.hpp"

namespace codegree {

uint64_t euler_phi(uint64_t n) {
  uint64_t result = n;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<uint64_t> divisors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Exact division of a by b over Z[x]; b monic.
std::vector<mpz_class> poly_divide_exact(std::vector<mpz_class> a,
                                         const std::vector<mpz_class>& b) {
  if (a.size() < b.size()) throw Error("polynomial division underflow");
  std::vector<mpz_class> q(a.size() - b.size() + 1, mpz_class(0));
  for (size_t i = a.size(); i-- >= b.size();) {
    mpz_class c = a[i];
    if (c == 0) {
      if (i + 1 == b.size()) break;
      continue;
    }
    size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    if (i + 1 == b.size()) break;
  }
  for (size_t j = 0; j + 1 < b.size(); ++j)
    if (a[j] != 0) throw Error("polynomial division not exact");
  return q;
}

std::map<uint64_t, CycloPoly>& phi_cache() {
  static std::map<uint64_t, CycloPoly> cache;
  return cache;
}
std::mutex phi_mutex;

CycloPoly compute_cyclotomic(uint64_t n);

const CycloPoly& cyclotomic_locked(uint64_t n) {
  auto it = phi_cache().find(n);
  if (it != phi_cache().end()) return it->second;
  CycloPoly p = compute_cyclotomic(n);
  return phi_cache().emplace(n, std::move(p)).first->second;
}

CycloPoly compute_cyclotomic(uint64_t n) {
  CycloPoly out;
  out.n = n;
  if (n == 1) {
    out.coeffs = {mpz_class(-1), mpz_class(1)};
    return out;
  }
  // (x^n - 1) / prod_{d|n, d<n} Phi_d
  std::vector<mpz_class> num(n + 1, mpz_class(0));
  num[0] = -1;
  num[n] = 1;
  for (uint64_t d : divisors(n)) {
    if (d == n) continue;
    num = poly_divide_exact(std::move(num), cyclotomic_locked(d).coeffs);
  }
  out.coeffs = std::move(num);
  return out;
}

}  // namespace

const CycloPoly& cyclotomic_poly(uint64_t n) {
  if (n < 1) throw DomainError("cyclotomic polynomial index must be >= 1");
  std::lock_guard<std::mutex> lock(phi_mutex);
  return cyclotomic_locked(n);
}

mpz_class eval_phi(uint64_t n, const mpz_class& q) {
  if (q < 2) throw DomainError("eval_phi requires q >= 2");
  const CycloPoly& p = cyclotomic_poly(n);
  mpz_class acc = 0;
  for (size_t i = p.coeffs.size(); i-- > 0;) acc = acc * q + p.coeffs[i];
  return acc;
}

namespace {

std::map<uint32_t, std::shared_ptr<const CycloBasis>>& basis_cache() {
  static std::map<uint32_t, std::shared_ptr<const CycloBasis>> cache;
  return cache;
}
std::mutex basis_mutex;

}  // namespace

std::shared_ptr<const CycloBasis> cyclo_basis(uint32_t e) {
  if (e < 1) throw DomainError("conductor must be >= 1");
  {
    std::lock_guard<std::mutex> lock(basis_mutex);
    auto it = basis_cache().find(e);
    if (it != basis_cache().end()) return it->second;
  }
  auto b = std::make_shared<CycloBasis>();
  b->conductor = e;
  b->phi = static_cast<uint32_t>(euler_phi(e));
  const CycloPoly& f = cyclotomic_poly(e);
  size_t max_power = std::max<size_t>(e, 2 * static_cast<size_t>(b->phi) - 1);
  b->rows.reserve(max_power);
  // x^t mod Phi_e, iteratively: x^(t+1) = shift, then reduce the top
  // coefficient using x^phi = -(lower part of Phi).
  std::vector<mpz_class> cur(b->phi, mpz_class(0));
  cur[0] = 1;
  for (size_t t = 0; t < max_power; ++t) {
    b->rows.push_back(cur);
    // multiply by x
    mpz_class top = cur[b->phi - 1];
    for (size_t i = b->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (size_t i = 0; i < b->phi; ++i) cur[i] -= top * f.coeffs[i];
  }
  mpz_class maxabs = 1;
  for (const auto& row : b->rows)
    for (const mpz_class& c : row) {
      mpz_class a = abs(c);
      if (a > maxabs) maxabs = a;
    }
  b->rows_fit_int64 = maxabs.fits_slong_p();
  if (b->rows_fit_int64) {
    b->max_abs_row_coeff = static_cast<int64_t>(maxabs.get_si());
    b->rows64.reserve(b->rows.size());
    for (const auto& row : b->rows) {
      std::vector<int64_t> r64(row.size());
      for (size_t i = 0; i < row.size(); ++i) r64[i] = row[i].get_si();
      b->rows64.push_back(std::move(r64));
    }
  }
  std::lock_guard<std::mutex> lock(basis_mutex);
  auto [it, inserted] = basis_cache().emplace(e, b);
  return it->second;
}

namespace {

// Reduce a dense exponent vector (length <= basis.rows.size()) into
// power-basis coordinates.
std::vector<mpq_class> reduce_dense(uint32_t e, const std::vector<mpq_class>& dense) {
  auto basis = cyclo_basis(e);
  std::vector<mpq_class> out(basis->phi, mpq_class(0));
  for (size_t t = 0; t < dense.size(); ++t) {
    if (dense[t] == 0) continue;
    if (t < basis->phi) {
      out[t] += dense[t];
    } else {
      const auto& row = basis->rows.at(t);
      for (size_t i = 0; i < basis->phi; ++i)
        if (row[i] != 0) out[i] += dense[t] * mpq_class(row[i]);
    }
  }
  for (mpq_class& c : out) c.canonicalize();
  return out;
}

}  // namespace

CycloNum CycloNum::integer(const mpz_class& v) {
  CycloNum x;
  x.c_[0] = mpq_class(v);
  return x;
}

CycloNum CycloNum::rational(const mpq_class& v) {
  CycloNum x;
  x.c_[0] = v;
  x.c_[0].canonicalize();
  return x;
}

CycloNum CycloNum::root_of_unity(uint32_t e, uint64_t k) {
  std::vector<mpq_class> dense(e, mpq_class(0));
  dense[k % e] = 1;
  CycloNum x;
  x.e_ = e;
  x.c_ = reduce_dense(e, dense);
  return x;
}

CycloNum CycloNum::from_exponent_coeffs(uint32_t e, const std::vector<mpz_class>& m) {
  if (m.size() > e) throw DomainError("exponent vector longer than conductor");
  std::vector<mpq_class> dense(e, mpq_class(0));
  for (size_t k = 0; k < m.size(); ++k) dense[k] = mpq_class(m[k]);
  CycloNum x;
  x.e_ = e;
  x.c_ = reduce_dense(e, dense);
  return x;
}

CycloNum CycloNum::from_coeffs(uint32_t e, std::vector<mpq_class> coeffs) {
  if (coeffs.size() != euler_phi(e))
    throw DomainError("coefficient vector length must be phi(conductor)");
  CycloNum x;
  x.e_ = e;
  for (mpq_class& c : coeffs) c.canonicalize();
  x.c_ = std::move(coeffs);
  return x;
}

bool CycloNum::is_zero() const {
  for (const mpq_class& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycloNum::is_integral() const {
  for (const mpq_class& c : c_)
    if (c.get_den() != 1) return false;
  return true;
}

CycloNum CycloNum::coerced(uint32_t L) const {
  if (L == e_) return *this;
  if (L % e_ != 0) throw DomainError("coercion target conductor must be a multiple");
  uint64_t q = L / e_;
  std::vector<mpq_class> dense(L, mpq_class(0));
  for (size_t t = 0; t < c_.size(); ++t) dense[t * q] = c_[t];
  CycloNum x;
  x.e_ = L;
  x.c_ = reduce_dense(L, dense);
  return x;
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
  uint32_t L = static_cast<uint32_t>(std::lcm<uint64_t>(a.e_, b.e_));
  CycloNum x = a.coerced(L);
  CycloNum y = b.coerced(L);
  for (size_t i = 0; i < x.c_.size(); ++i) {
    x.c_[i] += y.c_[i];
    x.c_[i].canonicalize();
  }
  return x;
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) { return a + (-b); }

CycloNum CycloNum::operator-() const {
  CycloNum x = *this;
  for (mpq_class& c : x.c_) c = -c;
  return x;
}

CycloNum CycloNum::scaled(const mpq_class& s) const {
  CycloNum x = *this;
  for (mpq_class& c : x.c_) {
    c *= s;
    c.canonicalize();
  }
  return x;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  uint32_t L = static_cast<uint32_t>(std::lcm<uint64_t>(a.e_, b.e_));
  CycloNum x = a.coerced(L);
  CycloNum y = b.coerced(L);
  size_t phi = x.c_.size();
  std::vector<mpq_class> dense(2 * phi - 1, mpq_class(0));
  for (size_t i = 0; i < phi; ++i) {
    if (x.c_[i] == 0) continue;
    for (size_t j = 0; j < phi; ++j) {
      if (y.c_[j] == 0) continue;
      dense[i + j] += x.c_[i] * y.c_[j];
    }
  }
  CycloNum r;
  r.e_ = L;
  r.c_ = reduce_dense(L, dense);
  return r;
}

CycloNum CycloNum::conjugated() const {
  if (e_ <= 2) return *this;
  return galois(e_ - 1);
}

CycloNum CycloNum::galois(uint64_t k) const {
  k %= e_;
  if (std::gcd<uint64_t>(k, e_) != 1)
    throw DomainError("galois exponent must be coprime to the conductor");
  std::vector<mpq_class> dense(e_, mpq_class(0));
  for (size_t t = 0; t < c_.size(); ++t) {
    if (c_[t] == 0) continue;
    dense[(t * k) % e_] += c_[t];
  }
  CycloNum x;
  x.e_ = e_;
  x.c_ = reduce_dense(e_, dense);
  return x;
}

std::optional<mpq_class> CycloNum::to_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_[0];
}

std::optional<mpz_class> CycloNum::to_rational_integer() const {
  auto r = to_rational();
  if (!r || r->get_den() != 1) return std::nullopt;
  return r->get_num();
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.e_ == b.e_) return a.c_ == b.c_;
  uint32_t L = static_cast<uint32_t>(std::lcm<uint64_t>(a.e_, b.e_));
  return a.coerced(L).c_ == b.coerced(L).c_;
}

int CycloNum::lex_compare(const CycloNum& a, const CycloNum& b) {
  uint32_t L = static_cast<uint32_t>(std::lcm<uint64_t>(a.e_, b.e_));
  CycloNum x = a.coerced(L);
  CycloNum y = b.coerced(L);
  for (size_t i = 0; i < x.c_.size(); ++i) {
    int c = cmp(x.c_[i], y.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string CycloNum::str() const {
  std::ostringstream out;
  bool first = true;
  for (size_t t = 0; t < c_.size(); ++t) {
    if (c_[t] == 0) continue;
    mpq_class c = c_[t];
    if (first) {
      if (c < 0) {
        out << '-';
        c = -c;
      }
    } else {
      out << (c < 0 ? '-' : '+');
      if (c < 0) c = -c;
    }
    bool unit = (c == 1);
    if (t == 0 || !unit) out << c.get_str();
    if (t > 0) {
      if (!unit) out << '*';
      out << 'z' << e_;
      if (t > 1) out << '^' << t;
    }
    first = false;
  }
  if (first) return "0";
  return out.str();
}

std::complex<double> CycloNum::approx() const {
  std::complex<double> acc(0.0, 0.0);
  const double tau = 6.283185307179586476925287;
  for (size_t t = 0; t < c_.size(); ++t) {
    if (c_[t] == 0) continue;
    double arg = tau * static_cast<double>(t) / static_cast<double>(e_);
    acc += c_[t].get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return acc;
}

}  // namespace codegree
