#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace codegree {

uint64_t euler_phi(uint64_t n);
std::vector<uint64_t> divisors(uint64_t n);

/// The n-th cyclotomic polynomial, monic with integer coefficients,
/// coefficient vector in ascending degree order.
struct CycloPoly {
  uint64_t n = 1;
  std::vector<mpz_class> coeffs;
  size_t degree() const { return coeffs.size() - 1; }
};

const CycloPoly& cyclotomic_poly(uint64_t n);

/// Phi_n(q) for integers q >= 2, exact.
mpz_class eval_phi(uint64_t n, const mpz_class& q);

/// Precomputed reduction data for one conductor: x^t mod Phi_e for all
/// exponents that products and Galois maps can produce.
struct CycloBasis {
  uint32_t conductor = 1;
  uint32_t phi = 1;
  std::vector<std::vector<mpz_class>> rows;  // rows[t] = x^t mod Phi_e, t < max_power
  bool rows_fit_int64 = true;
  int64_t max_abs_row_coeff = 1;
  std::vector<std::vector<int64_t>> rows64;  // only valid when rows_fit_int64
};

std::shared_ptr<const CycloBasis> cyclo_basis(uint32_t conductor);

/// An exact element of Q(zeta_e) over the power basis
/// {zeta_e^k : 0 <= k < phi(e)}, always reduced mod Phi_e. Mixed
/// conductors coerce to the lcm; no smaller field of definition is
/// ever detected.
class CycloNum {
 public:
  CycloNum() : e_(1), c_(1, mpq_class(0)) {}

  static CycloNum integer(const mpz_class& v);
  static CycloNum rational(const mpq_class& v);
  /// zeta_e^k.
  static CycloNum root_of_unity(uint32_t e, uint64_t k);
  /// sum_k m[k] * zeta_e^k with k running over m's indices.
  static CycloNum from_exponent_coeffs(uint32_t e, const std::vector<mpz_class>& m);
  static CycloNum from_coeffs(uint32_t e, std::vector<mpq_class> coeffs);

  uint32_t conductor() const { return e_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_integral() const;  // all denominators 1

  CycloNum coerced(uint32_t L) const;  // e_ must divide L

  friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  CycloNum operator-() const;
  CycloNum scaled(const mpq_class& s) const;

  CycloNum conjugated() const;
  /// Sends zeta_e to zeta_e^k; k must be coprime to the conductor.
  CycloNum galois(uint64_t k) const;

  /// The value as a rational integer, if all non-constant coordinates
  /// vanish and the constant is an integer. Never rounds.
  std::optional<mpz_class> to_rational_integer() const;
  std::optional<mpq_class> to_rational() const;

  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  /// Total order used for canonical row sorting: coefficient vectors at
  /// the common conductor, compared lexicographically.
  static int lex_compare(const CycloNum& a, const CycloNum& b);

  /// Polynomial rendering in z<e>, e.g. "-z5^2-z5^3" or "1/2".
  std::string str() const;
  /// Display-only complex embedding (zeta_e -> exp(2*pi*i/e)); never
  /// used in any predicate.
  std::complex<double> approx() const;

 private:
  uint32_t e_;
  std::vector<mpq_class> c_;  // size phi(e_)
};

}  // namespace codegree
