#include <algorithm>

#include "codegree/chartab.hpp"
#include "codegree/errors.hpp"

namespace codegree {

mpz_class inner_product(const Classes& cls, const std::vector<CycloNum>& f,
                        const std::vector<CycloNum>& h) {
  uint32_t r = cls.count();
  if (f.size() != r || h.size() != r)
    throw DomainError("class function length mismatch");
  CycloNum acc;
  for (uint32_t i = 0; i < r; ++i) {
    CycloNum term = f[i] * h[cls.inverse_class(i)];
    acc = acc + term.scaled(mpq_class(static_cast<unsigned long>(cls.size(i))));
  }
  auto rat = acc.to_rational();
  if (!rat) throw TableError("inner product is not rational");
  mpq_class q = *rat / mpq_class(static_cast<unsigned long>(cls.group_order()));
  q.canonicalize();
  if (q.get_den() != 1 || q < 0)
    throw TableError("inner product is not a non-negative integer: " + q.get_str());
  return q.get_num();
}

std::vector<CodegreeRecord> codegrees(const CharacterTable& T) {
  uint32_t r = T.num_classes();
  mpz_class n = T.order;
  std::vector<CodegreeRecord> out;
  out.reserve(r);
  for (uint32_t s = 0; s < T.rows.size(); ++s) {
    CodegreeRecord rec;
    rec.char_index = s;
    CycloNum deg = CycloNum::integer(static_cast<unsigned long>(T.degrees[s]));
    for (uint32_t i = 0; i < r; ++i)
      if (T.rows[s][i] == deg) {
        rec.kernel_classes.push_back(i);
        rec.kernel_order += static_cast<unsigned long>(T.class_meta[i].size);
      }
    if (n % rec.kernel_order != 0)
      throw TableError("kernel order does not divide the group order");
    mpz_class index = n / rec.kernel_order;
    if (index % static_cast<unsigned long>(T.degrees[s]) != 0)
      throw TableError("codegree integrality violated at row " + std::to_string(s));
    rec.codegree = index / static_cast<unsigned long>(T.degrees[s]);
    out.push_back(std::move(rec));
  }
  return out;
}

ClassFusion class_fusion(const Classes& H, const Classes& G) {
  ClassFusion f;
  f.map.reserve(H.count());
  for (uint32_t j = 0; j < H.count(); ++j) {
    uint32_t gi = G.class_of(H.rep(j));
    if (G.element_order(gi) != H.element_order(j))
      throw TableError("class fusion order mismatch (corrupted class data)");
    f.map.push_back(gi);
  }
  return f;
}

std::vector<CycloNum> restrict_class_function(const std::vector<CycloNum>& chi,
                                              const ClassFusion& fusion) {
  std::vector<CycloNum> out;
  out.reserve(fusion.map.size());
  for (uint32_t g : fusion.map) {
    if (g >= chi.size()) throw DomainError("fusion target out of range");
    out.push_back(chi[g]);
  }
  return out;
}

std::vector<CycloNum> induce_class_function(const std::vector<CycloNum>& theta,
                                            const Classes& H, const Classes& G,
                                            const ClassFusion& fusion) {
  if (theta.size() != H.count()) throw DomainError("class function length mismatch");
  std::vector<CycloNum> out(G.count());
  mpq_class index(static_cast<unsigned long>(G.group_order()),
                  static_cast<unsigned long>(H.group_order()));
  index.canonicalize();
  for (uint32_t i = 0; i < G.count(); ++i) {
    CycloNum acc;
    for (uint32_t j = 0; j < H.count(); ++j)
      if (fusion.map[j] == i)
        acc = acc + theta[j].scaled(mpq_class(static_cast<unsigned long>(H.size(j))));
    mpq_class scale = index / mpq_class(static_cast<unsigned long>(G.size(i)));
    scale.canonicalize();
    out[i] = acc.scaled(scale);
  }
  return out;
}

namespace {

uint32_t match_row(const CharacterTable& T, const std::vector<CycloNum>& values) {
  for (uint32_t s = 0; s < T.rows.size(); ++s)
    if (T.rows[s] == values) return s;
  throw TableError("permuted character row not found in the table");
}

}  // namespace

std::vector<uint32_t> aut_action(const CharacterTable& T, const Perm& a,
                                 const PermGroup& overgroup) {
  if (!T.classes) throw DomainError("aut_action requires live class data");
  const Classes& cls = *T.classes;
  const PermGroup& G = cls.group();
  if (!overgroup.contains(a)) throw DomainError("automorphism element not in overgroup");
  Perm ainv = a.inverse();
  for (const Perm& g : G.generators())
    if (!cls.has(conjugate(g, a)) || !cls.has(conjugate(g, ainv)))
      throw DomainError("element does not normalize the group");
  uint32_t r = cls.count();
  // chi^a(g) = chi(g^{a^{-1}})
  std::vector<uint32_t> cmap(r);
  for (uint32_t i = 0; i < r; ++i) cmap[i] = cls.class_of(conjugate(cls.rep(i), ainv));
  std::vector<uint32_t> sigma(r);
  std::vector<bool> hit(r, false);
  for (uint32_t s = 0; s < r; ++s) {
    std::vector<CycloNum> permuted(r);
    for (uint32_t i = 0; i < r; ++i) permuted[i] = T.rows[s][cmap[i]];
    sigma[s] = match_row(T, permuted);
    if (hit[sigma[s]]) throw TableError("automorphism action is not a bijection on rows");
    hit[sigma[s]] = true;
  }
  return sigma;
}

InertiaResult inertia_group(const PermGroup& G, const CharacterTable& TM, uint32_t lambda_row) {
  if (!TM.classes) throw DomainError("inertia_group requires live class data for M");
  const Classes& mcls = *TM.classes;
  uint32_t rm = mcls.count();
  if (lambda_row >= TM.rows.size()) throw DomainError("lambda row out of range");

  // Conjugation action of G on Irr(M) row indices.
  auto act = [&](uint32_t row, const Perm& g) -> uint32_t {
    Perm ginv = g.inverse();
    std::vector<CycloNum> permuted(rm);
    for (uint32_t j = 0; j < rm; ++j) {
      Perm moved = conjugate(mcls.rep(j), ginv);
      permuted[j] = TM.rows[row][mcls.class_of(moved)];
    }
    return match_row(TM, permuted);
  };

  ActionOrbit orb = orbit_stabilizer(G.generators(), lambda_row, G.degree(), act);
  PermGroup I(std::vector<Perm>{Perm::identity(G.degree())});
  for (const Perm& s : orb.stabilizer_gens)
    if (!I.contains(s)) I.add_generator(s);
  mpz_class expected = G.order() / static_cast<unsigned long>(orb.points.size());
  if (I.order() != expected)
    throw TableError("inertia subgroup order disagrees with the orbit size");
  InertiaResult res;
  res.inertia.parent = &G;
  res.inertia.group = std::move(I);
  res.orbit = orb.points;
  return res;
}

ExtensionWitness has_extension(const CharacterTable& TI, const CharacterTable& TM,
                               uint32_t lambda_row) {
  if (!TI.classes || !TM.classes) throw DomainError("has_extension requires live class data");
  ClassFusion fusion = class_fusion(*TM.classes, *TI.classes);
  uint64_t want = TM.degrees[lambda_row];
  ExtensionWitness w;
  for (uint32_t s = 0; s < TI.rows.size(); ++s) {
    if (TI.degrees[s] != want) continue;  // extensions have equal degree
    bool match = true;
    for (uint32_t j = 0; j < fusion.map.size() && match; ++j)
      if (!(TI.rows[s][fusion.map[j]] == TM.rows[lambda_row][j])) match = false;
    if (match) {
      w.found = true;
      w.char_index = s;
      w.degree = TI.degrees[s];
      return w;
    }
  }
  return w;
}

}  // namespace codegree
