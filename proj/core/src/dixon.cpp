#include <algorithm>
#include <cmath>
#include <numeric>

#include "codegree/chartab.hpp"
#include "codegree/errors.hpp"
#include "codegree/modp.hpp"

namespace codegree {

std::vector<std::vector<uint64_t>> class_matrix(const Classes& cls, uint32_t i) {
  uint32_t r = cls.count();
  std::vector<std::vector<uint64_t>> m(r, std::vector<uint64_t>(r, 0));
  auto [lo, hi] = cls.class_range(i);
  for (size_t idx = lo; idx < hi; ++idx) {
    Perm xinv = cls.arena()[idx].inverse();
    for (uint32_t k = 0; k < r; ++k) {
      Perm y = xinv * cls.rep(k);
      m[cls.class_of(y)][k] += 1;
    }
  }
  return m;
}

namespace {

uint64_t dixon_prime(uint64_t group_order, uint64_t exponent, const Config& cfg) {
  uint64_t low = 2 * static_cast<uint64_t>(
                         std::ceil(std::sqrt(static_cast<double>(group_order))));
  uint32_t skip = cfg.prime_index;
  for (uint64_t p = exponent + 1;; p += exponent) {
    if (p > cfg.prime_bound)
      throw TableError("no suitable prime found below the configured bound");
    if (p > low && is_prime_u64(p)) {
      if (skip == 0) return p;
      --skip;
    }
  }
}

struct Subspace {
  std::vector<VecFp> basis;  // vectors in F_p^r
};

// B with act * basis[j] = sum_t B[t][j] * basis[t]; the subspace must be
// invariant.
MatFp restrict_to(const Fp& F, const MatFp& act, const std::vector<VecFp>& basis) {
  size_t r = act.size();
  size_t d = basis.size();
  MatFp B(d, VecFp(d, 0));
  for (size_t j = 0; j < d; ++j) {
    VecFp w(r, 0);
    for (size_t row = 0; row < r; ++row) {
      uint64_t acc = 0;
      for (size_t col = 0; col < r; ++col)
        if (act[row][col] && basis[j][col])
          acc = F.add(acc, F.mul(act[row][col], basis[j][col]));
      w[row] = acc;
    }
    VecFp x = solve_in_span(F, basis, w);
    for (size_t t = 0; t < d; ++t) B[t][j] = x[t];
  }
  return B;
}

}  // namespace

CharacterTable character_table(const PermGroup& G, const Config& cfg,
                               std::shared_ptr<const Classes> cls_in) {
  std::shared_ptr<const Classes> cls = cls_in;
  if (!cls) cls = std::make_shared<Classes>(Classes::compute(G, cfg));
  uint32_t r = cls->count();
  if (r > cfg.max_classes)
    throw CapError("class count " + std::to_string(r) + " exceeds configured limit");
  uint64_t n = cls->group_order();
  uint64_t e = cls->exponent();

  uint64_t p = dixon_prime(n, e, cfg);
  Fp F{p};

  // Refine the common eigenspaces of the class-algebra action matrices,
  // taking class matrices in increasing class-size order.
  std::vector<uint32_t> order_by_size(r);
  std::iota(order_by_size.begin(), order_by_size.end(), 0u);
  std::sort(order_by_size.begin(), order_by_size.end(), [&](uint32_t a, uint32_t b) {
    if (cls->size(a) != cls->size(b)) return cls->size(a) < cls->size(b);
    return a < b;
  });

  std::vector<Subspace> spaces(1);
  spaces[0].basis.resize(r);
  for (uint32_t i = 0; i < r; ++i) {
    spaces[0].basis[i].assign(r, 0);
    spaces[0].basis[i][i] = 1;
  }

  auto all_split = [&] {
    for (const Subspace& s : spaces)
      if (s.basis.size() > 1) return false;
    return true;
  };

  for (uint32_t ci : order_by_size) {
    if (ci == 0) continue;  // identity class acts as a scalar
    if (all_split()) break;
    std::vector<std::vector<uint64_t>> m = class_matrix(*cls, ci);
    MatFp act(r, VecFp(r, 0));
    for (uint32_t j = 0; j < r; ++j)
      for (uint32_t k = 0; k < r; ++k) act[k][j] = m[j][k] % p;
    std::vector<Subspace> next;
    for (Subspace& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      MatFp B = restrict_to(F, act, s.basis);
      std::vector<uint64_t> cp = char_poly(F, B);
      std::vector<uint64_t> roots = poly_roots(F, cp);
      size_t covered = 0;
      for (uint64_t lambda : roots) {
        MatFp shifted = B;
        for (size_t t = 0; t < shifted.size(); ++t)
          shifted[t][t] = F.sub(shifted[t][t], lambda);
        std::vector<VecFp> null = nullspace(F, std::move(shifted), B.size());
        if (null.empty()) continue;
        Subspace sub;
        for (const VecFp& u : null) {
          VecFp v(r, 0);
          for (size_t t = 0; t < u.size(); ++t) {
            if (u[t] == 0) continue;
            for (size_t col = 0; col < r; ++col)
              v[col] = F.add(v[col], F.mul(u[t], s.basis[t][col]));
          }
          sub.basis.push_back(std::move(v));
        }
        covered += sub.basis.size();
        next.push_back(std::move(sub));
      }
      if (covered != s.basis.size())
        throw TableError("eigenspace splitting failed to refine (class " +
                         std::to_string(ci) + ", prime " + std::to_string(p) + ")");
    }
    spaces = std::move(next);
  }
  if (!all_split())
    throw TableError("eigenspace refinement incomplete after all class matrices (prime " +
                     std::to_string(p) + ")");

  // Central character values from the eigenvectors: the common
  // eigenvector is proportional to (chi(g_j^{-1}))_j.
  uint64_t inv_n = F.inv(n % p);
  std::vector<std::vector<uint64_t>> chi_p(r, std::vector<uint64_t>(r, 0));
  std::vector<uint64_t> degs(r, 0);
  for (uint32_t s = 0; s < r; ++s) {
    const VecFp& v = spaces[s].basis[0];
    if (v[0] == 0) throw TableError("degenerate eigenvector (zero identity coordinate)");
    uint64_t inv_v0 = F.inv(v[0]);
    // |G| / chi(1)^2 = sum_i size_i v_i v_{i'} / v_0^2
    uint64_t acc = 0;
    for (uint32_t i = 0; i < r; ++i)
      acc = F.add(acc, F.mul(cls->size(i) % p, F.mul(v[i], v[cls->inverse_class(i)])));
    acc = F.mul(acc, F.mul(inv_v0, inv_v0));
    if (acc == 0) throw TableError("vanishing norm in degree computation");
    uint64_t dsq = F.mul(n % p, F.inv(acc));
    uint64_t d = F.sqrt(dsq);
    degs[s] = d;
    for (uint32_t i = 0; i < r; ++i)
      chi_p[s][i] = F.mul(d, F.mul(v[cls->inverse_class(i)], inv_v0));
    if (chi_p[s][0] != d) throw TableError("inconsistent degree column");
  }
  uint64_t degree_sq_sum = 0;
  for (uint32_t s = 0; s < r; ++s) {
    if (degs[s] == 0 || degs[s] * degs[s] > n)
      throw TableError("character degree out of range");
    degree_sq_sum += degs[s] * degs[s];
  }
  if (degree_sq_sum != n) throw TableError("degree squares do not sum to the group order");

  // Lift values: chi(g) is a sum of o(g)-th roots of unity whose
  // multiplicities are recovered by Fourier inversion over F_p.
  uint64_t theta = F.primitive_root();
  uint64_t omega_e = F.pow(theta, (p - 1) / e);
  std::vector<std::vector<CycloNum>> rows(r);
  for (uint32_t s = 0; s < r; ++s) {
    rows[s].resize(r);
    for (uint32_t i = 0; i < r; ++i) {
      uint64_t o = cls->element_order(i);
      uint64_t omega = F.pow(omega_e, e / o);
      uint64_t inv_o = F.inv(o % p);
      std::vector<mpz_class> m(o);
      for (uint64_t k = 0; k < o; ++k) {
        uint64_t acc = 0;
        for (uint64_t j = 0; j < o; ++j) {
          uint64_t w = F.pow(omega, (o - (j * k) % o) % o);
          acc = F.add(acc, F.mul(chi_p[s][cls->power_class(i, j)], w));
        }
        uint64_t mk = F.mul(acc, inv_o);
        if (mk > degs[s])
          throw TableError("eigenvalue multiplicity exceeds the degree (lift failure)");
        m[k] = static_cast<unsigned long>(mk);
      }
      rows[s][i] = CycloNum::from_exponent_coeffs(static_cast<uint32_t>(o), m);
    }
  }

  // Canonical row order: ascending degree, then descending
  // coefficient-lex down the value columns (principal character first).
  std::vector<uint32_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](uint32_t a, uint32_t b) {
    if (degs[a] != degs[b]) return degs[a] < degs[b];
    for (uint32_t i = 1; i < r; ++i) {
      int c = CycloNum::lex_compare(rows[a][i], rows[b][i]);
      if (c != 0) return c > 0;
    }
    return false;
  });

  CharacterTable T;
  T.order = static_cast<unsigned long>(n);
  T.exponent = e;
  T.dixon_prime = p;
  T.classes = cls;
  T.class_meta.reserve(r);
  for (uint32_t i = 0; i < r; ++i)
    T.class_meta.push_back({cls->rep(i).cycles(), cls->size(i), cls->element_order(i)});
  T.rows.reserve(r);
  T.degrees.reserve(r);
  for (uint32_t s : idx) {
    T.rows.push_back(std::move(rows[s]));
    T.degrees.push_back(degs[s]);
  }

  TableCheck check = validate_table(T);
  if (!check.ok) {
    std::string msg = "character table failed exact validation:";
    for (const std::string& f : check.failures) msg += "\n  " + f;
    throw TableError(msg);
  }
  return T;
}

}  // namespace codegree
