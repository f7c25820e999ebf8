#include <cstdint>

#include "codegree/chartab.hpp"
#include "codegree/errors.hpp"

namespace codegree {

namespace {

// A table value flattened into zeta_e exponent space: the power-basis
// coordinate t at conductor o becomes exponent t*(e/o).
struct SparseVal {
  std::vector<uint32_t> exps;
  std::vector<mpz_class> coeffs;
  std::vector<int64_t> coeffs64;
  bool fits64 = true;
  mpz_class abs_sum;
};

SparseVal flatten(const CycloNum& v, uint64_t e) {
  SparseVal s;
  uint64_t stride = e / v.conductor();
  const auto& c = v.coeffs();
  for (size_t t = 0; t < c.size(); ++t) {
    if (c[t] == 0) continue;
    if (c[t].get_den() != 1) throw TableError("non-integral character value coordinate");
    mpz_class num = c[t].get_num();
    s.exps.push_back(static_cast<uint32_t>((t * stride) % e));
    s.coeffs.push_back(num);
    if (num.fits_slong_p())
      s.coeffs64.push_back(static_cast<int64_t>(num.get_si()));
    else
      s.fits64 = false;
    s.abs_sum += abs(num);
  }
  return s;
}

// One orthogonality accumulator: dense in exponent space, folded into
// the power basis at the end and compared against a rational constant.
template <typename Acc>
class PairSum {
 public:
  PairSum(uint64_t e, std::shared_ptr<const CycloBasis> basis)
      : e_(e), basis_(std::move(basis)), dense_(e, Acc(0)) {}

  void add_product(const SparseVal& a, const SparseVal& b, uint64_t scale) {
    for (size_t i = 0; i < a.exps.size(); ++i)
      for (size_t j = 0; j < b.exps.size(); ++j) {
        uint32_t t = a.exps[i] + b.exps[j];
        if (t >= e_) t -= static_cast<uint32_t>(e_);
        if constexpr (std::is_same_v<Acc, int64_t>)
          dense_[t] += a.coeffs64[i] * b.coeffs64[j] * static_cast<int64_t>(scale);
        else
          dense_[t] += a.coeffs[i] * b.coeffs[j] * static_cast<unsigned long>(scale);
      }
  }

  /// True iff the accumulated element equals the rational integer c.
  bool equals_integer(const mpz_class& c) const {
    uint32_t phi = basis_->phi;
    if constexpr (std::is_same_v<Acc, int64_t>) {
      std::vector<__int128> folded(phi, 0);
      for (uint32_t t = 0; t < e_; ++t) {
        if (dense_[t] == 0) continue;
        if (t < phi) {
          folded[t] += dense_[t];
        } else {
          const auto& row = basis_->rows64[t];
          for (uint32_t i = 0; i < phi; ++i)
            if (row[i]) folded[i] += static_cast<__int128>(dense_[t]) * row[i];
        }
      }
      if (!c.fits_slong_p()) return false;
      __int128 expect = static_cast<int64_t>(c.get_si());
      if (folded[0] != expect) return false;
      for (uint32_t i = 1; i < phi; ++i)
        if (folded[i] != 0) return false;
      return true;
    } else {
      std::vector<mpz_class> folded(phi, mpz_class(0));
      for (uint32_t t = 0; t < e_; ++t) {
        if (dense_[t] == 0) continue;
        if (t < phi) {
          folded[t] += dense_[t];
        } else {
          const auto& row = basis_->rows[t];
          for (uint32_t i = 0; i < phi; ++i)
            if (row[i] != 0) folded[i] += dense_[t] * row[i];
        }
      }
      if (folded[0] != c) return false;
      for (uint32_t i = 1; i < phi; ++i)
        if (folded[i] != 0) return false;
      return true;
    }
  }

 private:
  uint64_t e_;
  std::shared_ptr<const CycloBasis> basis_;
  std::vector<Acc> dense_;
};

}  // namespace

TableCheck validate_table(const CharacterTable& T) {
  TableCheck out;
  if (!T.classes) throw DomainError("validate_table requires live class data");
  const Classes& cls = *T.classes;
  uint32_t r = cls.count();
  mpz_class n = T.order;

  if (T.rows.size() != r)
    out.fail("number of irreducibles (" + std::to_string(T.rows.size()) +
             ") != number of classes (" + std::to_string(r) + ")");
  if (!out.ok) return out;

  mpz_class dsq = 0;
  for (uint64_t d : T.degrees) dsq += mpz_class(static_cast<unsigned long>(d)) * d;
  if (dsq != n) out.fail("sum of squared degrees " + dsq.get_str() + " != |G| " + n.get_str());

  for (uint64_t d : T.degrees)
    if (!mpz_divisible_ui_p(n.get_mpz_t(), d))
      out.fail("degree " + std::to_string(d) + " does not divide |G|");

  for (uint32_t s = 0; s < r; ++s) {
    auto d0 = T.rows[s][0].to_rational_integer();
    if (!d0 || *d0 != static_cast<long>(T.degrees[s]))
      out.fail("row " + std::to_string(s) + " column 0 disagrees with its degree");
  }
  if (!out.ok) return out;

  uint64_t e = T.exponent;
  auto basis = cyclo_basis(static_cast<uint32_t>(e));

  std::vector<std::vector<SparseVal>> flat(r);
  bool all64 = basis->rows_fit_int64;
  for (uint32_t s = 0; s < r; ++s) {
    flat[s].reserve(r);
    for (uint32_t i = 0; i < r; ++i) {
      flat[s].push_back(flatten(T.rows[s][i], e));
      if (!flat[s].back().fits64) all64 = false;
    }
  }

  // Conservative magnitude bound deciding the int64 fast path.
  mpz_class max_abs = 0;
  for (uint32_t s = 0; s < r; ++s)
    for (uint32_t i = 0; i < r; ++i)
      if (flat[s][i].abs_sum > max_abs) max_abs = flat[s][i].abs_sum;
  mpz_class bound = max_abs * max_abs * r;
  {
    uint64_t max_size = 0;
    for (uint32_t i = 0; i < r; ++i) max_size = std::max(max_size, cls.size(i));
    bound *= static_cast<unsigned long>(max_size);
  }
  bool fast = all64 && bound.fits_slong_p() &&
              bound.get_si() < (int64_t{1} << 62) / std::max<int64_t>(1, basis->max_abs_row_coeff);

  auto check_pairs = [&](auto acc_tag) {
    using Acc = decltype(acc_tag);
    // Row orthogonality: sum_c |C_c| chi(g_c) psi(g_c^{-1}) = delta |G|.
    for (uint32_t s1 = 0; s1 < r && out.ok; ++s1)
      for (uint32_t s2 = s1; s2 < r; ++s2) {
        PairSum<Acc> sum(e, basis);
        for (uint32_t c = 0; c < r; ++c)
          sum.add_product(flat[s1][c], flat[s2][cls.inverse_class(c)],
                          cls.size(c));
        if (!sum.equals_integer(s1 == s2 ? n : mpz_class(0))) {
          out.fail("row orthogonality fails for rows " + std::to_string(s1) + "," +
                   std::to_string(s2));
          break;
        }
      }
    // Column orthogonality: sum_chi chi(g_i) conj(chi(g_j)) =
    // delta |G|/|C_i|.
    for (uint32_t i = 0; i < r && out.ok; ++i) {
      if (n % static_cast<unsigned long>(cls.size(i)) != 0) {
        out.fail("class size does not divide |G| at class " + std::to_string(i));
        break;
      }
      for (uint32_t j = i; j < r; ++j) {
        PairSum<Acc> sum(e, basis);
        for (uint32_t s = 0; s < r; ++s)
          sum.add_product(flat[s][i], flat[s][cls.inverse_class(j)], 1);
        mpz_class expect = (i == j) ? mpz_class(n / static_cast<unsigned long>(cls.size(i)))
                                    : mpz_class(0);
        if (!sum.equals_integer(expect)) {
          out.fail("column orthogonality fails for classes " + std::to_string(i) + "," +
                   std::to_string(j));
          break;
        }
      }
    }
  };

  if (fast)
    check_pairs(int64_t{0});
  else
    check_pairs(mpz_class{0});
  return out;
}

}  // namespace codegree
