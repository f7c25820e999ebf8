#include "codegree/builders.hpp"

#include <algorithm>
#include <numeric>

#include "codegree/errors.hpp"
#include "codegree/gf.hpp"
#include "codegree/structure.hpp"

namespace codegree {

namespace {

PermGroup sym_group(uint64_t n) {
  if (n < 1) throw DomainError("Sym(n) needs n >= 1");
  uint32_t d = static_cast<uint32_t>(n);
  if (n <= 1) return PermGroup({Perm::identity(std::max<uint32_t>(d, 1))});
  std::vector<Perm> gens;
  gens.push_back(Perm::from_cycles(d, "(0 1)"));
  if (n > 2) {
    std::vector<uint32_t> img(d);
    for (uint32_t i = 0; i < d; ++i) img[i] = (i + 1) % d;
    gens.push_back(Perm(img));
  }
  return PermGroup(std::move(gens));
}

PermGroup alt_group(uint64_t n) {
  if (n < 1) throw DomainError("Alt(n) needs n >= 1");
  uint32_t d = static_cast<uint32_t>(n);
  if (n <= 2) return PermGroup({Perm::identity(std::max<uint32_t>(d, 1))});
  std::vector<Perm> gens;
  gens.push_back(Perm::from_cycles(d, "(0 1 2)"));
  if (n >= 4) {
    std::vector<uint32_t> img(d);
    std::iota(img.begin(), img.end(), 0u);
    if (n % 2 == 1) {
      for (uint32_t i = 0; i < d; ++i) img[i] = (i + 1) % d;
    } else {
      for (uint32_t i = 1; i < d; ++i) img[i] = 1 + (i % (d - 1));
    }
    gens.push_back(Perm(img));
  }
  return PermGroup(std::move(gens));
}

PermGroup cyc_group(uint64_t n) {
  if (n < 1) throw DomainError("Cyc(n) needs n >= 1");
  uint32_t d = static_cast<uint32_t>(n);
  if (n == 1) return PermGroup({Perm::identity(1)});
  std::vector<uint32_t> img(d);
  for (uint32_t i = 0; i < d; ++i) img[i] = (i + 1) % d;
  return PermGroup({Perm(img)});
}

PermGroup dih_group(uint64_t n) {
  if (n < 3) throw DomainError("Dih(n) needs n >= 3");
  uint32_t d = static_cast<uint32_t>(n);
  std::vector<uint32_t> rot(d), refl(d);
  for (uint32_t i = 0; i < d; ++i) {
    rot[i] = (i + 1) % d;
    refl[i] = (d - i) % d;
  }
  return PermGroup({Perm(rot), Perm(refl)});
}

// Projective line of GF(q): points 0..q-1 are [x : 1], point q is [1 : 0].
Perm perm_of_mat2(const GF& F, uint64_t a, uint64_t b, uint64_t c, uint64_t d) {
  uint32_t q = static_cast<uint32_t>(F.q());
  std::vector<uint32_t> img(q + 1);
  for (uint32_t x = 0; x <= q; ++x) {
    uint64_t u, v;  // column vector (u, v)
    if (x < q) {
      u = F.add(F.mul(a, x), b);
      v = F.add(F.mul(c, x), d);
    } else {
      u = a;
      v = c;
    }
    if (v != 0)
      img[x] = static_cast<uint32_t>(F.mul(u, F.inv(v)));
    else
      img[x] = q;
  }
  return Perm(img);
}

Perm frobenius_perm2(const GF& F) {
  uint32_t q = static_cast<uint32_t>(F.q());
  std::vector<uint32_t> img(q + 1);
  for (uint32_t x = 0; x < q; ++x) img[x] = static_cast<uint32_t>(F.frobenius(x));
  img[q] = q;
  return Perm(img);
}

std::vector<Perm> psl2_gens(const GF& F) {
  std::vector<Perm> gens;
  gens.push_back(perm_of_mat2(F, 1, 1, 0, 1));  // upper transvection
  gens.push_back(perm_of_mat2(F, 1, 0, 1, 1));  // lower transvection
  if (F.q() > 3) {
    uint64_t w = F.generator();
    gens.push_back(perm_of_mat2(F, w, 0, 0, F.inv(w)));
  }
  return gens;
}

BuildResult psl2(uint64_t q) {
  GF F(q);
  BuildResult r;
  r.group = PermGroup(psl2_gens(F));
  return r;
}

BuildResult pgl2(uint64_t q, bool with_frobenius) {
  GF F(q);
  std::vector<Perm> gens = psl2_gens(F);
  BuildResult r;
  r.embedded_simple_gens = gens;
  Perm delta = perm_of_mat2(F, F.generator(), 0, 0, 1);
  gens.push_back(delta);
  if (!delta.is_identity()) r.outer_generators.emplace_back("delta", delta);
  if (with_frobenius) {
    Perm frob = frobenius_perm2(F);
    if (!frob.is_identity()) {
      gens.push_back(frob);
      r.outer_generators.emplace_back("frob", frob);
    }
  }
  r.group = PermGroup(std::move(gens));
  return r;
}

// Projective plane points: vectors over GF(q) normalized so that the
// first non-zero coordinate is 1, in lexicographic order.
std::vector<std::array<uint64_t, 3>> plane_points(const GF& F) {
  std::vector<std::array<uint64_t, 3>> pts;
  uint64_t q = F.q();
  for (uint64_t a = 0; a < q; ++a)
    for (uint64_t b = 0; b < q; ++b)
      for (uint64_t c = 0; c < q; ++c) {
        std::array<uint64_t, 3> v{a, b, c};
        uint64_t lead = a ? a : (b ? b : c);
        if (lead != 1) continue;
        pts.push_back(v);
      }
  return pts;
}

uint32_t plane_index(const GF& F, const std::vector<std::array<uint64_t, 3>>& pts,
                     std::array<uint64_t, 3> v) {
  uint64_t lead = v[0] ? v[0] : (v[1] ? v[1] : v[2]);
  if (lead == 0) throw Error("zero vector in projective plane");
  uint64_t il = F.inv(lead);
  for (auto& c : v) c = F.mul(c, il);
  auto it = std::lower_bound(pts.begin(), pts.end(), v);
  if (it == pts.end() || *it != v) throw Error("projective point not found");
  return static_cast<uint32_t>(it - pts.begin());
}

using Mat3 = std::array<std::array<uint64_t, 3>, 3>;

std::array<uint64_t, 3> apply_mat3(const GF& F, const Mat3& m, const std::array<uint64_t, 3>& v) {
  std::array<uint64_t, 3> out{0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] = F.add(out[i], F.mul(m[i][j], v[j]));
  return out;
}

Perm perm_of_mat3(const GF& F, const std::vector<std::array<uint64_t, 3>>& pts, const Mat3& m) {
  std::vector<uint32_t> img(pts.size());
  for (size_t i = 0; i < pts.size(); ++i)
    img[i] = plane_index(F, pts, apply_mat3(F, m, pts[i]));
  return Perm(img);
}

Mat3 mat3_inverse_transpose(const GF& F, const Mat3& m) {
  // adjugate / det, then transpose; 3x3 over GF(q)
  auto det2 = [&](uint64_t a, uint64_t b, uint64_t c, uint64_t d) {
    return F.sub(F.mul(a, d), F.mul(b, c));
  };
  Mat3 adj;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      adj[j][i] = det2(m[r0][c0], m[r0][c1], m[r1][c0], m[r1][c1]);
    }
  uint64_t det = 0;
  for (int j = 0; j < 3; ++j) det = F.add(det, F.mul(m[0][j], adj[j][0]));
  uint64_t idet = F.inv(det);
  Mat3 inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) inv[i][j] = F.mul(adj[i][j], idet);
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = inv[j][i];
  return out;
}

std::vector<Mat3> psl3_mat_gens() {
  Mat3 e12{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
  Mat3 cyc{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
  return {e12, cyc};
}

BuildResult psl3(uint64_t q) {
  if (q != 2 && q != 3) throw DomainError("PSL3(q) is built for q in {2, 3} only");
  GF F(q);
  auto pts = plane_points(F);
  BuildResult r;
  std::vector<Perm> gens;
  for (const Mat3& m : psl3_mat_gens()) gens.push_back(perm_of_mat3(F, pts, m));
  r.group = PermGroup(std::move(gens));
  return r;
}

PermGroup direct_product(const PermGroup& A, const PermGroup& B) {
  uint32_t da = A.degree(), db = B.degree();
  std::vector<Perm> gens;
  for (const Perm& g : A.generators()) {
    std::vector<uint32_t> img(da + db);
    for (uint32_t i = 0; i < da; ++i) img[i] = g.apply(i);
    for (uint32_t i = 0; i < db; ++i) img[da + i] = da + i;
    gens.push_back(Perm(img));
  }
  for (const Perm& g : B.generators()) {
    std::vector<uint32_t> img(da + db);
    for (uint32_t i = 0; i < da; ++i) img[i] = i;
    for (uint32_t i = 0; i < db; ++i) img[da + i] = da + g.apply(i);
    gens.push_back(Perm(img));
  }
  return PermGroup(std::move(gens));
}

PermGroup wreath(const PermGroup& A, const PermGroup& P) {
  uint32_t n = P.degree();
  uint32_t d = A.degree();
  uint32_t total = n * d;
  std::vector<Perm> gens;
  // one copy of A's generators per orbit representative of P
  std::vector<bool> covered(n, false);
  for (uint32_t b = 0; b < n; ++b) {
    if (covered[b]) continue;
    // mark orbit of b
    std::vector<uint32_t> orb{b};
    covered[b] = true;
    for (size_t i = 0; i < orb.size(); ++i)
      for (const Perm& g : P.generators()) {
        uint32_t y = g.apply(orb[i]);
        if (!covered[y]) {
          covered[y] = true;
          orb.push_back(y);
        }
      }
    for (const Perm& g : A.generators()) {
      std::vector<uint32_t> img(total);
      std::iota(img.begin(), img.end(), 0u);
      for (uint32_t x = 0; x < d; ++x) img[b * d + x] = b * d + g.apply(x);
      gens.push_back(Perm(img));
    }
  }
  for (const Perm& t : P.generators()) {
    std::vector<uint32_t> img(total);
    for (uint32_t blk = 0; blk < n; ++blk)
      for (uint32_t x = 0; x < d; ++x) img[blk * d + x] = t.apply(blk) * d + x;
    gens.push_back(Perm(img));
  }
  return PermGroup(std::move(gens));
}

}  // namespace

BuildResult build_psl3_aut(uint64_t q) {
  if (q != 2 && q != 3) throw DomainError("PSL3 aut overgroup is built for q in {2, 3} only");
  GF F(q);
  auto pts = plane_points(F);
  uint32_t m = static_cast<uint32_t>(pts.size());
  BuildResult r;
  // Points 0..m-1, lines m..2m-1; line i is the kernel of pts[i] seen as
  // a linear form, so matrices act on lines via inverse-transpose and
  // the duality swap conjugates the action by the graph automorphism.
  std::vector<Perm> gens;
  for (const Mat3& mat : psl3_mat_gens()) {
    Mat3 line_mat = mat3_inverse_transpose(F, mat);
    std::vector<uint32_t> img(2 * m);
    for (uint32_t i = 0; i < m; ++i) {
      img[i] = plane_index(F, pts, apply_mat3(F, mat, pts[i]));
      img[m + i] = m + plane_index(F, pts, apply_mat3(F, line_mat, pts[i]));
    }
    gens.push_back(Perm(img));
  }
  r.embedded_simple_gens = gens;
  std::vector<uint32_t> swap_img(2 * m);
  for (uint32_t i = 0; i < m; ++i) {
    swap_img[i] = m + i;
    swap_img[m + i] = i;
  }
  Perm graph(swap_img);
  gens.push_back(graph);
  r.outer_generators.emplace_back("graph", graph);
  r.group = PermGroup(std::move(gens));
  return r;
}

BuildResult build(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Sym: {
      BuildResult r;
      r.group = sym_group(spec.n);
      return r;
    }
    case GroupSpec::Kind::Alt: {
      BuildResult r;
      r.group = alt_group(spec.n);
      return r;
    }
    case GroupSpec::Kind::Cyc: {
      BuildResult r;
      r.group = cyc_group(spec.n);
      return r;
    }
    case GroupSpec::Kind::Dih: {
      BuildResult r;
      r.group = dih_group(spec.n);
      return r;
    }
    case GroupSpec::Kind::PSL2:
      return psl2(spec.n);
    case GroupSpec::Kind::SL2: {
      uint64_t p = 0;
      uint32_t f = 0;
      if (!GF::is_prime_power(spec.n, &p, &f) || p != 2)
        throw DomainError("SL2(q) is built for q = 2^f (use PSL2 otherwise)");
      return psl2(spec.n);
    }
    case GroupSpec::Kind::PGL2:
      return pgl2(spec.n, false);
    case GroupSpec::Kind::PGammaL2:
      return pgl2(spec.n, true);
    case GroupSpec::Kind::PSL3:
      return psl3(spec.n);
    case GroupSpec::Kind::DP: {
      BuildResult a = build(spec.args[0]);
      BuildResult b = build(spec.args[1]);
      BuildResult r;
      r.group = direct_product(a.group, b.group);
      return r;
    }
    case GroupSpec::Kind::Wr: {
      BuildResult a = build(spec.args[0]);
      BuildResult p = build(spec.args[1]);
      BuildResult r;
      r.group = wreath(a.group, p.group);
      return r;
    }
    case GroupSpec::Kind::Perm: {
      std::vector<Perm> gens;
      for (const std::string& c : spec.perm_cycles)
        gens.push_back(Perm::from_cycles(spec.perm_degree, c));
      if (gens.empty()) gens.push_back(Perm::identity(spec.perm_degree));
      BuildResult r;
      r.group = PermGroup(std::move(gens));
      return r;
    }
  }
  throw Error("unhandled spec kind");
}

PermGroup build_group(const GroupSpec& spec) { return build(spec).group; }

PermGroup build_group(const std::string& text) { return build(parse_spec(text)).group; }

WreathEmbedding wreath_embedding(const PermGroup& G, const Classes& cls) {
  std::vector<SubgroupHandle> mins = minimal_normal_subgroups(G, cls);
  if (mins.size() != 1)
    throw DomainError("wreath embedding requires a unique minimal normal subgroup");
  PermGroup M = std::move(mins[0].group);
  if (is_solvable(M))
    throw DomainError("minimal normal subgroup is solvable, not a product of non-abelian simples");

  Config sub_cfg;
  Classes mcls = Classes::compute(M, sub_cfg);
  std::vector<SubgroupHandle> raw_factors = minimal_normal_subgroups(M, mcls);
  uint32_t n = static_cast<uint32_t>(raw_factors.size());
  if (n == 0) throw Error("no factors found in the socle");
  mpz_class prod = 1;
  for (const SubgroupHandle& f : raw_factors) {
    if (f.group.order() != raw_factors[0].group.order())
      throw DomainError("socle factors are not pairwise isomorphic (orders differ)");
    prod *= f.group.order();
  }
  if (prod != M.order())
    throw DomainError("socle is not the direct product of its minimal normal subgroups");

  // conjugation action of G on the factor list
  auto factor_of = [&](const Perm& x) -> uint32_t {
    for (uint32_t j = 0; j < n; ++j)
      if (raw_factors[j].group.contains(x)) return j;
    throw Error("conjugated factor generator escaped the socle factors");
  };
  auto act = [&](uint32_t i, const Perm& g) -> uint32_t {
    const Perm& s = raw_factors[i].group.generators().front();
    return factor_of(conjugate(s, g));
  };

  ActionOrbit orb = orbit_stabilizer(G.generators(), 0, G.degree(), act);
  if (orb.points.size() != n)
    throw DomainError("group does not permute the socle factors transitively");

  WreathEmbedding emb;
  emb.n = n;
  emb.transversal = orb.transversal;
  for (uint32_t i = 0; i < n; ++i) {
    SubgroupHandle h;
    h.parent = &G;
    h.group = std::move(raw_factors[orb.points[i]].group);
    emb.factors.push_back(std::move(h));
  }
  PermGroup N(std::vector<Perm>{Perm::identity(G.degree())});
  for (const Perm& s : orb.stabilizer_gens)
    if (!N.contains(s)) N.add_generator(s);
  {
    mpz_class expected = G.order() / static_cast<unsigned long>(n);
    if (N.order() != expected) throw Error("normalizer order mismatch in wreath embedding");
  }

  // position of each factor in the reindexed list
  auto reindexed_factor_of = [&](const Perm& x) -> uint32_t {
    for (uint32_t j = 0; j < n; ++j)
      if (emb.factors[j].group.contains(x)) return j;
    throw Error("factor lookup failed");
  };
  for (const Perm& g : G.generators()) {
    WreathEmbedding::GeneratorImage im;
    std::vector<uint32_t> sigma(n);
    for (uint32_t i = 0; i < n; ++i) {
      const Perm& s = emb.factors[i].group.generators().front();
      sigma[i] = reindexed_factor_of(conjugate(s, g));
    }
    im.top = Perm(sigma);
    for (uint32_t i = 0; i < n; ++i) {
      Perm gi = emb.transversal[i] * g * emb.transversal[sigma[i]].inverse();
      if (!N.contains(gi))
        throw Error("component g_i fell outside the factor normalizer");
      im.components.push_back(std::move(gi));
    }
    emb.images.push_back(std::move(im));
  }
  emb.normalizer = std::move(N);
  return emb;
}

std::vector<Perm> wreath_embedding_images(const PermGroup& G, const WreathEmbedding& emb) {
  uint32_t d = G.degree();
  uint32_t n = emb.n;
  std::vector<Perm> out;
  out.reserve(emb.images.size());
  for (const auto& im : emb.images) {
    std::vector<uint32_t> img(n * d);
    for (uint32_t blk = 0; blk < n; ++blk) {
      uint32_t tgt = im.top.apply(blk);
      for (uint32_t x = 0; x < d; ++x) img[blk * d + x] = tgt * d + im.components[blk].apply(x);
    }
    out.push_back(Perm(img));
  }
  return out;
}

}  // namespace codegree
