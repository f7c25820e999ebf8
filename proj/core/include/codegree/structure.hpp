#pragma once

#include <vector>

#include "codegree/classes.hpp"
#include "codegree/group.hpp"

namespace codegree {

/// Smallest normal subgroup of G containing the seed elements.
SubgroupHandle normal_closure(const PermGroup& G, const std::vector<Perm>& seed);

/// [H, H] as a group in its own right.
PermGroup derived_subgroup(const PermGroup& H);

/// Lower central series reaches the trivial group.
bool is_nilpotent(const PermGroup& H);

/// Derived series reaches the trivial group.
bool is_solvable(const PermGroup& H);

bool is_normal(const PermGroup& G, const PermGroup& H);

/// Largest nilpotent normal subgroup, generated by the class
/// representatives whose normal closure is nilpotent.
SubgroupHandle fitting_subgroup(const PermGroup& G, const Classes& cls);

/// All minimal normal subgroups, as inclusion-minimal normal closures
/// of prime-order class representatives.
std::vector<SubgroupHandle> minimal_normal_subgroups(const PermGroup& G, const Classes& cls);

struct SocleInfo {
  std::vector<mpz_class> minimal_normal_orders;
  std::vector<bool> minimal_normal_solvable;
  mpz_class socle_order;
  bool socle_solvable = true;  // vacuously for the trivial group
};

SocleInfo socle_info(const PermGroup& G, const Classes& cls);

}  // namespace codegree
