#pragma once

#include <cstdint>
#include <vector>

namespace codegree {

/// Arithmetic in F_p for word-sized primes.
struct Fp {
  uint64_t p;

  uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
  uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b) % p; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  }
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t inv(uint64_t a) const { return pow(a % p, p - 2); }
  uint64_t neg(uint64_t a) const { return a ? p - a : 0; }
  /// Square root mod p via Tonelli-Shanks; returns the root <= p/2.
  /// Throws TableError if a is a non-residue.
  uint64_t sqrt(uint64_t a) const;
  /// Smallest primitive root mod p.
  uint64_t primitive_root() const;
};

bool is_prime_u64(uint64_t n);

using VecFp = std::vector<uint64_t>;
using MatFp = std::vector<VecFp>;  // row-major, square in our uses

/// Characteristic polynomial of a (small) square matrix over F_p,
/// ascending coefficient order, monic. Uses determinant interpolation;
/// requires p > dimension.
std::vector<uint64_t> char_poly(const Fp& F, const MatFp& m);

/// det(m) over F_p (destroys a copy).
uint64_t det(const Fp& F, MatFp m);

/// All roots of the polynomial in F_p, ascending. Scans the whole
/// field; intended for the small primes used by the table builder.
std::vector<uint64_t> poly_roots(const Fp& F, const std::vector<uint64_t>& poly);

/// Basis of the nullspace of m (not necessarily square: rows x cols).
std::vector<VecFp> nullspace(const Fp& F, MatFp m, size_t cols);

/// Solves basis * x = target where basis columns are independent;
/// throws TableError when unsolvable.
VecFp solve_in_span(const Fp& F, const std::vector<VecFp>& basis_vectors, const VecFp& target);

}  // namespace codegree
