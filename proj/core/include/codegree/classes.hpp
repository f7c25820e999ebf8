#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "codegree/config.hpp"
#include "codegree/group.hpp"
#include "codegree/perm.hpp"

namespace codegree {

/// Conjugacy-class data of a fully enumerated group, in canonical order:
/// identity class first, then ascending (element order, class size,
/// lexicographic least class member). Class representatives are the
/// lexicographically least members, so the layout is reproducible.
class Classes {
 public:
  static Classes compute(const PermGroup& G, const Config& cfg = Config::defaults());

  uint32_t count() const { return static_cast<uint32_t>(reps_.size()); }
  const Perm& rep(uint32_t i) const { return reps_[i]; }
  uint64_t size(uint32_t i) const { return sizes_[i]; }
  uint64_t element_order(uint32_t i) const { return orders_[i]; }
  uint32_t inverse_class(uint32_t i) const { return inverse_[i]; }
  /// Class of rep(i)^k for any k >= 0 (power rows are periodic in the
  /// element order, so all 0 <= k < exponent are answerable).
  uint32_t power_class(uint32_t i, uint64_t k) const {
    return power_rows_[i][k % orders_[i]];
  }

  uint64_t group_order() const { return group_order_; }
  uint64_t exponent() const { return exponent_; }

  bool has(const Perm& p) const { return lookup_.find(p) != lookup_.end(); }
  uint32_t class_of(const Perm& p) const;

  /// All group elements grouped by class; class i occupies
  /// [offsets_[i], offsets_[i+1]) in the arena.
  const std::vector<Perm>& arena() const { return arena_; }
  std::pair<size_t, size_t> class_range(uint32_t i) const {
    return {offsets_[i], offsets_[i + 1]};
  }

  const PermGroup& group() const { return *group_; }

 private:
  const PermGroup* group_ = nullptr;
  std::vector<Perm> reps_;
  std::vector<uint64_t> sizes_;
  std::vector<uint64_t> orders_;
  std::vector<uint32_t> inverse_;
  std::vector<std::vector<uint32_t>> power_rows_;
  uint64_t group_order_ = 0;
  uint64_t exponent_ = 1;
  std::vector<Perm> arena_;
  std::vector<size_t> offsets_;
  std::unordered_map<Perm, uint32_t, PermHash> lookup_;
};

/// Plain breadth-first closure enumeration, capped.
std::vector<Perm> enumerate_elements(const PermGroup& G, uint64_t cap);

}  // namespace codegree
