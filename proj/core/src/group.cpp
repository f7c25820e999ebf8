#include "codegree/group.hpp"

#include <deque>

#include "codegree/errors.hpp"

namespace codegree {

PermGroup::PermGroup(std::vector<Perm> generators) {
  if (generators.empty()) throw DomainError("generator list must be non-empty");
  degree_ = generators[0].degree();
  for (const Perm& g : generators)
    if (g.degree() != degree_) throw DomainError("generators have mismatched degrees");
  gens_ = std::move(generators);
  for (const Perm& g : gens_) insert(g);
  recompute_order();
}

uint64_t PermGroup::order_u64() const {
  if (!order_.fits_ulong_p()) throw CapError("group order exceeds 64 bits");
  return static_cast<uint64_t>(order_.get_ui());
}

void PermGroup::rebuild_orbit(size_t li) {
  Level& L = chain_[li];
  L.orbit.clear();
  L.transversal.clear();
  L.where.assign(degree_, -1);
  L.orbit.push_back(L.base);
  L.transversal.push_back(Perm::identity(degree_));
  L.where[L.base] = 0;
  for (size_t i = 0; i < L.orbit.size(); ++i) {
    for (const Perm& g : L.gens) {
      uint32_t y = g.apply(L.orbit[i]);
      if (L.where[y] < 0) {
        L.where[y] = static_cast<int32_t>(L.orbit.size());
        L.orbit.push_back(y);
        L.transversal.push_back(L.transversal[i] * g);
      }
    }
  }
}

std::pair<size_t, Perm> PermGroup::strip(Perm g, size_t from) const {
  for (size_t j = from; j < chain_.size(); ++j) {
    const Level& L = chain_[j];
    uint32_t x = g.apply(L.base);
    if (L.where[x] < 0) return {j, std::move(g)};
    g = g * L.transversal[static_cast<size_t>(L.where[x])].inverse();
  }
  return {chain_.size(), std::move(g)};
}

void PermGroup::insert(const Perm& g0) {
  std::deque<std::pair<size_t, Perm>> queue;
  queue.emplace_back(0, g0);
  while (!queue.empty()) {
    auto [from, g] = queue.front();
    queue.pop_front();
    auto [j, res] = strip(std::move(g), from);
    if (res.is_identity()) continue;
    if (j == chain_.size()) {
      Level L;
      for (uint32_t x = 0; x < degree_; ++x)
        if (res.apply(x) != x) {
          L.base = x;
          break;
        }
      chain_.push_back(std::move(L));
    }
    chain_[j].gens.push_back(res);
    rebuild_orbit(j);
    const Level& L = chain_[j];
    for (size_t i = 0; i < L.orbit.size(); ++i)
      for (const Perm& s : L.gens) {
        uint32_t y = s.apply(L.orbit[i]);
        Perm schreier =
            L.transversal[i] * s * L.transversal[static_cast<size_t>(L.where[y])].inverse();
        if (!schreier.is_identity()) queue.emplace_back(j + 1, std::move(schreier));
      }
  }
}

void PermGroup::recompute_order() {
  order_ = 1;
  for (const Level& L : chain_) order_ *= static_cast<unsigned long>(L.orbit.size());
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  auto [j, res] = strip(p, 0);
  (void)j;
  return res.is_identity();
}

void PermGroup::add_generator(const Perm& g) {
  if (g.degree() != degree_) throw DomainError("generator degree mismatch");
  if (contains(g)) return;
  gens_.push_back(g);
  insert(g);
  recompute_order();
}

std::vector<uint32_t> PermGroup::base_points() const {
  std::vector<uint32_t> b;
  b.reserve(chain_.size());
  for (const Level& L : chain_) b.push_back(L.base);
  return b;
}

SubgroupHandle make_subgroup(const PermGroup& parent, std::vector<Perm> gens) {
  if (gens.empty()) gens.push_back(Perm::identity(parent.degree()));
  for (const Perm& g : gens)
    if (!parent.contains(g)) throw DomainError("subgroup generator not in parent group");
  SubgroupHandle h;
  h.parent = &parent;
  h.group = PermGroup(std::move(gens));
  return h;
}

ActionOrbit orbit_stabilizer(
    const std::vector<Perm>& gens, uint32_t seed, uint32_t identity_degree,
    const std::function<uint32_t(uint32_t, const Perm&)>& act) {
  ActionOrbit res;
  res.points.push_back(seed);
  res.transversal.push_back(Perm::identity(identity_degree));
  std::vector<int64_t> where;  // grown on demand
  auto pos_of = [&](uint32_t pt) -> int64_t {
    if (pt >= where.size()) where.resize(pt + 1, -1);
    return where[pt];
  };
  if (seed >= where.size()) where.resize(seed + 1, -1);
  where[seed] = 0;
  for (size_t i = 0; i < res.points.size(); ++i) {
    for (const Perm& g : gens) {
      uint32_t y = act(res.points[i], g);
      if (pos_of(y) < 0) {
        where[y] = static_cast<int64_t>(res.points.size());
        res.points.push_back(y);
        res.transversal.push_back(res.transversal[i] * g);
      }
    }
  }
  for (size_t i = 0; i < res.points.size(); ++i)
    for (const Perm& g : gens) {
      uint32_t y = act(res.points[i], g);
      Perm s = res.transversal[i] * g *
               res.transversal[static_cast<size_t>(where[y])].inverse();
      if (!s.is_identity()) res.stabilizer_gens.push_back(std::move(s));
    }
  return res;
}

}  // namespace codegree
