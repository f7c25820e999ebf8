#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "codegree/classes.hpp"
#include "codegree/config.hpp"
#include "codegree/cyclo.hpp"
#include "codegree/group.hpp"

namespace codegree {

struct ClassMeta {
  std::string rep_cycles;
  uint64_t size = 0;
  uint64_t element_order = 0;
};

/// Exact irreducible character table in canonical order: columns follow
/// the canonical class order, rows sorted by degree and then by value
/// columns (descending coefficient-lex), so the principal character is
/// always row 0. Values in column i live at conductor element_order(i).
struct CharacterTable {
  std::string spec;  // canonical builder spec when known
  mpz_class order;
  uint64_t exponent = 1;
  std::vector<ClassMeta> class_meta;
  std::vector<std::vector<CycloNum>> rows;
  std::vector<uint64_t> degrees;
  uint64_t dixon_prime = 0;

  /// Live class data; present for freshly computed tables, absent for
  /// tables deserialized from cache.
  std::shared_ptr<const Classes> classes;

  uint32_t num_classes() const { return static_cast<uint32_t>(class_meta.size()); }
  uint32_t num_chars() const { return static_cast<uint32_t>(rows.size()); }
};

struct CodegreeRecord {
  uint32_t char_index = 0;
  std::vector<uint32_t> kernel_classes;
  mpz_class kernel_order;
  mpz_class codegree;
};

/// Class-algebra structure constants for class i: entry (j, k) is
/// a_{ijk}, the number of ways a fixed element of class k factors as
/// x*y with x in class i and y in class j.
std::vector<std::vector<uint64_t>> class_matrix(const Classes& cls, uint32_t i);

/// Dixon-Schneider. Throws CapError/TableError per the documented
/// failure modes; never returns a partial table.
CharacterTable character_table(const PermGroup& G, const Config& cfg = Config::defaults(),
                               std::shared_ptr<const Classes> cls = nullptr);

/// Exact check of the five table invariants; collects human-readable
/// failure notes instead of throwing.
struct TableCheck {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};
TableCheck validate_table(const CharacterTable& T);

/// (1/|G|) sum_i |C_i| f(g_i) h(g_i^{-1}); must come out a non-negative
/// rational integer for characters, and throws TableError otherwise.
mpz_class inner_product(const Classes& cls, const std::vector<CycloNum>& f,
                        const std::vector<CycloNum>& h);

std::vector<CodegreeRecord> codegrees(const CharacterTable& T);

/// Map from the classes of a subgroup into the classes of the parent.
struct ClassFusion {
  std::vector<uint32_t> map;  // H-class index -> G-class index
};
ClassFusion class_fusion(const Classes& H, const Classes& G);

std::vector<CycloNum> restrict_class_function(const std::vector<CycloNum>& chi,
                                              const ClassFusion& fusion);
std::vector<CycloNum> induce_class_function(const std::vector<CycloNum>& theta,
                                            const Classes& H, const Classes& G,
                                            const ClassFusion& fusion);

/// Row permutation induced by an automorphism of the group realized by
/// conjugation with `a` inside `overgroup`; result[i] is the row index
/// of chi_i composed with the automorphism.
std::vector<uint32_t> aut_action(const CharacterTable& T, const Perm& a,
                                 const PermGroup& overgroup);

struct InertiaResult {
  SubgroupHandle inertia;          // subgroup of G
  std::vector<uint32_t> orbit;     // row indices of Irr(M) in the G-orbit of lambda
};

/// Stabilizer of Irr(M) row `lambda_row` under conjugation by G; M must
/// be the (normal) group of `TM` embedded in G.
InertiaResult inertia_group(const PermGroup& G, const CharacterTable& TM, uint32_t lambda_row);

struct ExtensionWitness {
  bool found = false;
  uint32_t char_index = 0;
  uint64_t degree = 0;
};

/// Searches Irr(I) for an extension of Irr(M) row `lambda_row`
/// (candidates prefiltered to chi(1) == lambda(1)).
ExtensionWitness has_extension(const CharacterTable& TI, const CharacterTable& TM,
                               uint32_t lambda_row);

}  // namespace codegree
