#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace codegree {

/// Expression tree for the order/degree formulas; rows are data, one
/// evaluator serves all of them.
struct LieExpr {
  enum class Op { Int, Q, N, P, I, Add, Sub, Mul, Div, Pow, Phi, Prod, Gcd, Neg1Pow, SqrtQ };
  Op op = Op::Int;
  long long value = 0;  // Int literal; SqrtQ characteristic
  std::vector<LieExpr> args;
};

struct LieSylow {
  std::map<uint64_t, uint64_t> exact_by_p;  // characteristic -> exact exponent
  std::optional<LieExpr> bound_linear_c;    // exponent <= c(n) * p
};

struct LieFamilyEntry {
  std::string id;
  std::string isomorphism;
  uint32_t twist = 1;
  std::string series;    // "A", "BC", "D", "E", "F", "G", "B"
  uint32_t rank = 0;     // fixed rank, or 0 when variable
  uint32_t rank_min = 0; // variable-rank rows
  std::string q_constraint;
  LieExpr order, alpha, beta;
  std::string alpha_label, beta_label;
  std::optional<LieSylow> sylow;

  bool beta_is_steinberg() const { return beta_label == "St"; }
};

struct LieQuery {
  uint32_t twist = 1;
  char series = 'A';
  uint32_t rank = 1;
};

/// Parses family tokens like "A1", "2A3", "B4", "3D4", "2B2", "G2".
LieQuery parse_family(const std::string& token);

struct LieCheckResult {
  std::string row_id;
  uint64_t q = 0;
  uint64_t characteristic = 0;
  mpz_class order, alpha, beta;
  mpz_class p_part;        // p-part of the order
  bool beta_is_p_part = false;
  mpz_class product;       // (order/alpha) * (order/beta)
  mpz_class required;      // divisor demanded by the arithmetic check
  bool arithmetic_pass = false;
  // group-derived refinements, when the instance is constructible
  std::optional<bool> true_exponent_divides;
  std::optional<bool> sylow_exponent_within_bound;
  std::optional<bool> alpha_among_degrees;
  std::optional<bool> order_matches_group;
  bool pass = false;
  std::vector<std::string> notes;
};

/// Group-derived inputs for the strengthened check.
struct LieGroupData {
  std::optional<uint64_t> exponent;         // exponent of the built group
  std::optional<uint64_t> sylow_p_exponent; // largest p-power element order
  std::optional<std::vector<uint64_t>> degrees;
  std::optional<mpz_class> bsgs_order;
};

class LieTables {
 public:
  /// Built-in copy of the shipped row data.
  static const LieTables& builtin();
  static LieTables parse(const std::string& json_text);
  static LieTables load_file(const std::string& path);

  uint32_t version() const { return version_; }
  const std::vector<LieFamilyEntry>& rows() const { return rows_; }

  /// The unique admissible row for the family token and q; throws
  /// DomainError when parameters are inadmissible for every row.
  const LieFamilyEntry& find(const std::string& family, uint64_t q) const;

  mpz_class order_of(const std::string& family, uint64_t q) const;
  mpz_class alpha_degree(const std::string& family, uint64_t q) const;
  mpz_class beta_degree(const std::string& family, uint64_t q) const;

  LieCheckResult divisibility_check(const std::string& family, uint64_t q,
                                    const LieGroupData* group_data = nullptr) const;

 private:
  uint32_t version_ = 0;
  std::vector<LieFamilyEntry> rows_;
};

/// Raw JSON text of the embedded row data (generated at configure time
/// from core/data/lie_tables.json).
extern const char* const kLieTablesJson;

}  // namespace codegree
