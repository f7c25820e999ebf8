#include "codegree/structure.hpp"

#include <deque>

#include "codegree/errors.hpp"

namespace codegree {

SubgroupHandle normal_closure(const PermGroup& G, const std::vector<Perm>& seed) {
  for (const Perm& s : seed)
    if (!G.contains(s)) throw DomainError("normal closure seed element not in group");
  PermGroup K(std::vector<Perm>{Perm::identity(G.degree())});
  std::deque<Perm> pending;
  for (const Perm& s : seed) pending.push_back(s);
  while (!pending.empty()) {
    Perm x = std::move(pending.front());
    pending.pop_front();
    if (K.contains(x)) continue;
    K.add_generator(x);
    // Closure under conjugation by generators suffices: the group is
    // finite, so K^g = K follows from K^g <= K.
    for (const Perm& g : G.generators()) {
      Perm c = conjugate(x, g);
      if (!K.contains(c)) pending.push_back(std::move(c));
    }
  }
  SubgroupHandle h;
  h.parent = &G;
  h.group = std::move(K);
  return h;
}

static std::vector<Perm> generator_commutators(const PermGroup& A, const PermGroup& B) {
  std::vector<Perm> out;
  for (const Perm& a : A.generators())
    for (const Perm& b : B.generators()) {
      Perm c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity()) out.push_back(std::move(c));
    }
  return out;
}

PermGroup derived_subgroup(const PermGroup& H) {
  return normal_closure(H, generator_commutators(H, H)).group;
}

bool is_nilpotent(const PermGroup& H) {
  if (H.trivial()) return true;
  PermGroup gamma = H;
  while (true) {
    PermGroup next = normal_closure(H, generator_commutators(gamma, H)).group;
    if (next.trivial()) return true;
    if (next.order() == gamma.order()) return false;
    gamma = std::move(next);
  }
}

bool is_solvable(const PermGroup& H) {
  if (H.trivial()) return true;
  PermGroup d = H;
  while (true) {
    PermGroup next = derived_subgroup(d);
    if (next.trivial()) return true;
    if (next.order() == d.order()) return false;
    d = std::move(next);
  }
}

bool is_normal(const PermGroup& G, const PermGroup& H) {
  for (const Perm& h : H.generators())
    for (const Perm& g : G.generators())
      if (!H.contains(conjugate(h, g))) return false;
  return true;
}

SubgroupHandle fitting_subgroup(const PermGroup& G, const Classes& cls) {
  std::vector<Perm> seeds;
  for (uint32_t i = 1; i < cls.count(); ++i) {
    SubgroupHandle nc = normal_closure(G, {cls.rep(i)});
    if (is_nilpotent(nc.group)) seeds.push_back(cls.rep(i));
  }
  return normal_closure(G, seeds);
}

std::vector<SubgroupHandle> minimal_normal_subgroups(const PermGroup& G, const Classes& cls) {
  auto is_prime = [](uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  std::vector<SubgroupHandle> cands;
  for (uint32_t i = 1; i < cls.count(); ++i) {
    if (!is_prime(cls.element_order(i))) continue;
    SubgroupHandle nc = normal_closure(G, {cls.rep(i)});
    bool dup = false;
    for (const SubgroupHandle& c : cands)
      if (c.group.order() == nc.group.order()) {
        bool sub = true;
        for (const Perm& g : nc.group.generators())
          if (!c.group.contains(g)) {
            sub = false;
            break;
          }
        if (sub) {
          dup = true;
          break;
        }
      }
    if (!dup) cands.push_back(std::move(nc));
  }
  std::vector<SubgroupHandle> out;
  for (size_t a = 0; a < cands.size(); ++a) {
    bool minimal = true;
    for (size_t b = 0; b < cands.size() && minimal; ++b) {
      if (a == b || cands[b].group.order() >= cands[a].group.order()) continue;
      bool sub = true;
      for (const Perm& g : cands[b].group.generators())
        if (!cands[a].group.contains(g)) {
          sub = false;
          break;
        }
      if (sub) minimal = false;
    }
    if (minimal) out.push_back(std::move(cands[a]));
  }
  return out;
}

SocleInfo socle_info(const PermGroup& G, const Classes& cls) {
  SocleInfo info;
  std::vector<SubgroupHandle> mins = minimal_normal_subgroups(G, cls);
  std::vector<Perm> all;
  for (const SubgroupHandle& m : mins) {
    info.minimal_normal_orders.push_back(m.group.order());
    bool solv = is_solvable(m.group);
    info.minimal_normal_solvable.push_back(solv);
    if (!solv) info.socle_solvable = false;
    for (const Perm& g : m.group.generators()) all.push_back(g);
  }
  info.socle_order = all.empty() ? mpz_class(1) : normal_closure(G, all).group.order();
  return info;
}

}  // namespace codegree
