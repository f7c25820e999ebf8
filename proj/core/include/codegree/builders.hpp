#pragma once

#include <optional>
#include <string>
#include <vector>

#include "codegree/classes.hpp"
#include "codegree/group.hpp"

namespace codegree {

/// Abstract syntax of the group-spec DSL.
struct GroupSpec {
  enum class Kind { Sym, Alt, Cyc, Dih, PSL2, PGL2, PGammaL2, SL2, PSL3, DP, Wr, Perm };
  Kind kind = Kind::Sym;
  uint64_t n = 0;                        // atomic constructors
  std::vector<GroupSpec> args;           // DP / Wr
  uint32_t perm_degree = 0;              // Perm
  std::vector<std::string> perm_cycles;  // Perm generator cycle strings

  /// Canonical printer; parse_spec is its inverse.
  std::string str() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.str() == b.str();
  }
};

/// Whitespace-insensitive parser with position-annotated errors.
GroupSpec parse_spec(const std::string& text);

struct BuildResult {
  PermGroup group;
  /// Labeled outer-coset generators when the construction realizes
  /// automorphisms ("delta" for the diagonal one, "frob" for the field
  /// one, "graph" for the PSL3 duality); identity coset reps omitted.
  std::vector<std::pair<std::string, Perm>> outer_generators;
  /// For overgroup constructions, generators of the naturally embedded
  /// simple subgroup (PSL2 inside PGL2/PGammaL2, PSL3 inside its
  /// duality extension).
  std::vector<Perm> embedded_simple_gens;
};

BuildResult build(const GroupSpec& spec);
PermGroup build_group(const GroupSpec& spec);
PermGroup build_group(const std::string& spec_text);

/// PSL3(q) extended by the graph (inverse-transpose) automorphism,
/// acting on points plus lines of the projective plane; q in {2, 3}.
BuildResult build_psl3_aut(uint64_t q);

/// Decomposition data of a monolithic group with non-solvable socle
/// M = S_1 x ... x S_n: every generator g factors through the
/// embedding g -> (g_1, ..., g_n) sigma_g with g_i = t_i g t_{sigma(i)}^{-1}
/// in N = N_G(S_1).
struct WreathEmbedding {
  uint32_t n = 1;
  std::vector<SubgroupHandle> factors;  // reindexed so t_i maps S_1 to S_i
  std::vector<Perm> transversal;        // t_1 = identity
  PermGroup normalizer;                 // N_G(S_1)
  struct GeneratorImage {
    Perm top;                     // sigma_g as a permutation of n points
    std::vector<Perm> components; // g_i, each a member of N
  };
  std::vector<GeneratorImage> images;  // aligned with G.generators()
};

WreathEmbedding wreath_embedding(const PermGroup& G, const Classes& cls);

/// Realizes the embedding images inside N wr Sym(n) acting on
/// n * degree(G) points; generating a group of order |G| certifies the
/// embedding is injective.
std::vector<Perm> wreath_embedding_images(const PermGroup& G, const WreathEmbedding& emb);

}  // namespace codegree
