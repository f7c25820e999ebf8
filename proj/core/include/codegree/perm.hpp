#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace codegree {

/// A permutation of {0, ..., degree-1}, stored as its image array.
/// Composition is left-to-right: (p * q)(x) = q(p(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<uint32_t> images);
  static Perm identity(uint32_t degree);

  /// Parses disjoint-cycle notation, e.g. "(0 1)(2 3)" or "()".
  /// Points must be < degree.
  static Perm from_cycles(uint32_t degree, const std::string& cycles);

  uint32_t degree() const { return static_cast<uint32_t>(img_.size()); }
  uint32_t apply(uint32_t x) const { return img_[x]; }
  uint32_t operator[](uint32_t x) const { return img_[x]; }

  bool is_identity() const;
  Perm inverse() const;
  Perm pow(int64_t k) const;
  /// Least k >= 1 with p^k = identity (lcm of cycle lengths).
  uint64_t order() const;

  /// Canonical cycle string: cycles sorted by least moved point,
  /// each starting at its least point; identity prints as "()".
  std::string cycles() const;

  const std::vector<uint32_t>& images() const { return img_; }

  friend Perm operator*(const Perm& p, const Perm& q);  // apply p, then q
  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
  /// Lexicographic order on image arrays (used for canonical class reps).
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

 private:
  std::vector<uint32_t> img_;
};

/// h^{-1} * g * h.
Perm conjugate(const Perm& g, const Perm& h);

/// x -> q(p(x)); degrees must agree.
Perm compose(const Perm& p, const Perm& q);

struct PermHash {
  size_t operator()(const Perm& p) const;
};

}  // namespace codegree
