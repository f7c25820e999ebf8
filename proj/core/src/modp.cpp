#include "codegree/modp.hpp"

#include <algorithm>

#include "codegree/errors.hpp"

namespace codegree {

uint64_t Fp::pow(uint64_t a, uint64_t e) const {
  a %= p;
  uint64_t acc = 1;
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Fp F{n};
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = F.pow(a, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = F.mul(x, x);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

uint64_t Fp::sqrt(uint64_t a) const {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (pow(a, (p - 1) / 2) != 1) throw TableError("square root of non-residue mod p");
  uint64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  uint64_t root;
  if (s == 1) {
    root = pow(a, (p + 1) / 4);
  } else {
    uint64_t z = 2;
    while (pow(z, (p - 1) / 2) == 1) ++z;
    uint64_t m = static_cast<uint64_t>(s);
    uint64_t c = pow(z, q);
    uint64_t t = pow(a, q);
    uint64_t r = pow(a, (q + 1) / 2);
    while (t != 1) {
      uint64_t i = 0;
      uint64_t tt = t;
      while (tt != 1) {
        tt = mul(tt, tt);
        ++i;
      }
      uint64_t b = c;
      for (uint64_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
      m = i;
      c = mul(b, b);
      t = mul(t, c);
      r = mul(r, b);
    }
    root = r;
  }
  return std::min(root, p - root);
}

uint64_t Fp::primitive_root() const {
  if (p == 2) return 1;
  std::vector<uint64_t> prime_factors;
  uint64_t n = p - 1;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      prime_factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) prime_factors.push_back(n);
  for (uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (uint64_t q : prime_factors)
      if (pow(g, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw TableError("no primitive root found");  // unreachable for prime p
}

uint64_t det(const Fp& F, MatFp m) {
  size_t n = m.size();
  uint64_t d = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      d = F.neg(d);
    }
    d = F.mul(d, m[col][col]);
    uint64_t inv = F.inv(m[col][col]);
    for (size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      uint64_t f = F.mul(m[row][col], inv);
      for (size_t j = col; j < n; ++j) m[row][j] = F.sub(m[row][j], F.mul(f, m[col][j]));
    }
  }
  return d;
}

std::vector<uint64_t> char_poly(const Fp& F, const MatFp& m) {
  size_t n = m.size();
  if (n == 0) return {1};
  if (F.p <= n) throw TableError("prime too small for characteristic polynomial interpolation");
  // Evaluate det(xI - m) at x = 0..n and interpolate (Lagrange).
  std::vector<uint64_t> xs(n + 1), ys(n + 1);
  for (size_t k = 0; k <= n; ++k) {
    xs[k] = k;
    MatFp a = m;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) a[i][j] = (i == j) ? F.sub(k, a[i][j]) : F.neg(a[i][j]);
    ys[k] = det(F, std::move(a));
  }
  // Newton form, then expand.
  std::vector<uint64_t> coef(ys);
  for (size_t level = 1; level <= n; ++level)
    for (size_t k = n; k >= level; --k) {
      uint64_t num = F.sub(coef[k], coef[k - 1]);
      uint64_t den = F.sub(xs[k], xs[k - level]);
      coef[k] = F.mul(num, F.inv(den));
      if (k == level) break;
    }
  std::vector<uint64_t> poly{coef[n]};
  for (size_t k = n; k-- > 0;) {
    // poly = poly*(x - xs[k]) + coef[k]
    poly.insert(poly.begin(), 0);
    for (size_t i = 0; i + 1 < poly.size(); ++i)
      poly[i] = F.sub(poly[i], F.mul(xs[k], poly[i + 1]));
    poly[0] = F.add(poly[0], coef[k]);
  }
  return poly;
}

std::vector<uint64_t> poly_roots(const Fp& F, const std::vector<uint64_t>& poly) {
  std::vector<uint64_t> roots;
  for (uint64_t x = 0; x < F.p; ++x) {
    uint64_t acc = 0;
    for (size_t i = poly.size(); i-- > 0;) acc = F.add(F.mul(acc, x), poly[i]);
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

std::vector<VecFp> nullspace(const Fp& F, MatFp m, size_t cols) {
  size_t rows = m.size();
  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    uint64_t inv = F.inv(m[rank][col]);
    for (size_t j = 0; j < cols; ++j) m[rank][j] = F.mul(m[rank][j], inv);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      uint64_t f = m[r][col];
      for (size_t j = 0; j < cols; ++j) m[r][j] = F.sub(m[r][j], F.mul(f, m[rank][j]));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  std::vector<VecFp> basis;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    VecFp v(cols, 0);
    v[free_col] = 1;
    for (size_t r = 0; r < rank; ++r)
      v[pivot_col[r]] = F.neg(m[r][free_col]);
    basis.push_back(std::move(v));
  }
  return basis;
}

VecFp solve_in_span(const Fp& F, const std::vector<VecFp>& basis_vectors, const VecFp& target) {
  size_t dim = target.size();
  size_t k = basis_vectors.size();
  // Augmented system: columns are basis vectors, last column target.
  MatFp aug(dim, VecFp(k + 1, 0));
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < dim; ++i) aug[i][j] = basis_vectors[j][i];
  for (size_t i = 0; i < dim; ++i) aug[i][k] = target[i];
  VecFp x(k, 0);
  size_t rank = 0;
  std::vector<size_t> pivot_col;
  for (size_t col = 0; col < k && rank < dim; ++col) {
    size_t piv = rank;
    while (piv < dim && aug[piv][col] == 0) ++piv;
    if (piv == dim) continue;
    std::swap(aug[piv], aug[rank]);
    uint64_t inv = F.inv(aug[rank][col]);
    for (size_t j = 0; j <= k; ++j) aug[rank][j] = F.mul(aug[rank][j], inv);
    for (size_t r = 0; r < dim; ++r) {
      if (r == rank || aug[r][col] == 0) continue;
      uint64_t f = aug[r][col];
      for (size_t j = 0; j <= k; ++j) aug[r][j] = F.sub(aug[r][j], F.mul(f, aug[rank][j]));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (size_t r = rank; r < dim; ++r) {
    bool zero_row = true;
    for (size_t j = 0; j < k; ++j)
      if (aug[r][j] != 0) {
        zero_row = false;
        break;
      }
    if (zero_row && aug[r][k] != 0) throw TableError("vector not in span");
  }
  for (size_t r = 0; r < rank; ++r) x[pivot_col[r]] = aug[r][k];
  return x;
}

}  // namespace codegree
