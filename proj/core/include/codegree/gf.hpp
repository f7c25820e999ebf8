#pragma once

#include <cstdint>
#include <vector>

namespace codegree {

/// GF(p^f) for q <= 2^16, with exp/log tables over a primitive
/// element. Elements are indexed 0..q-1 by their coefficient tuple in
/// base p over the canonical irreducible polynomial (the
/// lexicographically least monic irreducible of degree f).
class GF {
 public:
  explicit GF(uint64_t q);

  static bool is_prime_power(uint64_t q, uint64_t* p_out = nullptr, uint32_t* f_out = nullptr);

  uint64_t q() const { return q_; }
  uint64_t p() const { return p_; }
  uint32_t f() const { return f_; }

  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t sub(uint64_t a, uint64_t b) const;
  uint64_t neg(uint64_t a) const;
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t inv(uint64_t a) const;
  /// Frobenius x -> x^p.
  uint64_t frobenius(uint64_t a) const;
  /// A fixed primitive element.
  uint64_t generator() const { return gen_; }

 private:
  uint64_t q_, p_;
  uint32_t f_;
  uint64_t gen_;
  std::vector<uint32_t> exp_;  // exp_[i] = gen^i, length q-1
  std::vector<uint32_t> log_;  // log_[x] for x != 0
};

}  // namespace codegree
