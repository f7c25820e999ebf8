#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "codegree/perm.hpp"

namespace codegree {

/// A permutation group given by generators, with a base and strong
/// generating set built by deterministic Schreier-Sims. Treat as
/// immutable once fully constructed; add_generator exists for the
/// closure algorithms that build groups incrementally.
class PermGroup {
 public:
  PermGroup() = default;
  explicit PermGroup(std::vector<Perm> generators);

  uint32_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const mpz_class& order() const { return order_; }
  /// order() as uint64_t; throws CapError if it does not fit.
  uint64_t order_u64() const;
  bool trivial() const { return order_ == 1; }

  bool contains(const Perm& p) const;
  /// Extends the BSGS with a new generator (no-op if already a member).
  void add_generator(const Perm& g);

  std::vector<uint32_t> base_points() const;

 private:
  struct Level {
    uint32_t base = 0;
    std::vector<Perm> gens;
    // orbit of base in discovery order; transversal[i] maps base to orbit[i]
    std::vector<uint32_t> orbit;
    std::vector<Perm> transversal;
    std::vector<int32_t> where;  // point -> index into orbit, or -1
  };

  uint32_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Level> chain_;
  mpz_class order_ = 1;

  void insert(const Perm& g);
  void rebuild_orbit(size_t level);
  std::pair<size_t, Perm> strip(Perm g, size_t from) const;
  void recompute_order();
};

/// A subgroup tracked together with its parent group.
struct SubgroupHandle {
  const PermGroup* parent = nullptr;
  PermGroup group;
};

/// Validates membership of every generator in parent.
SubgroupHandle make_subgroup(const PermGroup& parent, std::vector<Perm> gens);

/// Orbit of an abstract point under a right action of the group
/// generators, with transversal elements and Schreier generators for
/// the stabilizer of the seed.
struct ActionOrbit {
  std::vector<uint32_t> points;      // points[0] == seed
  std::vector<Perm> transversal;     // seed acted by transversal[i] == points[i]
  std::vector<Perm> stabilizer_gens; // may contain duplicates / identities
};

ActionOrbit orbit_stabilizer(
    const std::vector<Perm>& gens, uint32_t seed, uint32_t identity_degree,
    const std::function<uint32_t(uint32_t, const Perm&)>& act);

}  // namespace codegree
