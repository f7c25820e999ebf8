#include "codegree/classes.hpp"

#include <algorithm>
#include <numeric>

#include "codegree/errors.hpp"

namespace codegree {

std::vector<Perm> enumerate_elements(const PermGroup& G, uint64_t cap) {
  if (G.order() > static_cast<unsigned long>(cap))
    throw CapError("group exceeds enumeration cap (order " + G.order().get_str() + ")");
  std::vector<Perm> elems;
  std::unordered_map<Perm, uint32_t, PermHash> seen;
  elems.push_back(Perm::identity(G.degree()));
  seen.emplace(elems[0], 0);
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& g : G.generators()) {
      Perm f = elems[i] * g;
      if (seen.emplace(f, static_cast<uint32_t>(elems.size())).second)
        elems.push_back(std::move(f));
    }
  }
  return elems;
}

Classes Classes::compute(const PermGroup& G, const Config& cfg) {
  Classes c;
  c.group_ = &G;
  std::vector<Perm> elems = enumerate_elements(G, cfg.enumeration_cap);
  c.group_order_ = elems.size();

  std::unordered_map<Perm, uint32_t, PermHash> elem_pos;
  elem_pos.reserve(elems.size() * 2);
  for (uint32_t i = 0; i < elems.size(); ++i) elem_pos.emplace(elems[i], i);

  // Split into conjugation orbits (breadth-first, deterministic).
  constexpr uint32_t kUnassigned = UINT32_MAX;
  std::vector<uint32_t> cls_of(elems.size(), kUnassigned);
  struct RawClass {
    Perm min_rep;
    std::vector<uint32_t> members;
  };
  std::vector<RawClass> raw;
  for (uint32_t i = 0; i < elems.size(); ++i) {
    if (cls_of[i] != kUnassigned) continue;
    uint32_t id = static_cast<uint32_t>(raw.size());
    raw.push_back({elems[i], {i}});
    cls_of[i] = id;
    std::vector<uint32_t>& members = raw[id].members;
    for (size_t k = 0; k < members.size(); ++k) {
      const Perm& x = elems[members[k]];
      for (const Perm& g : G.generators()) {
        Perm y = conjugate(x, g);
        uint32_t pos = elem_pos.at(y);
        if (cls_of[pos] == kUnassigned) {
          cls_of[pos] = id;
          members.push_back(pos);
          if (y < raw[id].min_rep) raw[id].min_rep = std::move(y);
        }
      }
    }
  }

  // Canonical class order.
  std::vector<uint32_t> perm_order(raw.size());
  std::iota(perm_order.begin(), perm_order.end(), 0u);
  std::vector<uint64_t> raw_ord(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) raw_ord[i] = raw[i].min_rep.order();
  std::sort(perm_order.begin(), perm_order.end(), [&](uint32_t a, uint32_t b) {
    if (raw_ord[a] != raw_ord[b]) return raw_ord[a] < raw_ord[b];
    if (raw[a].members.size() != raw[b].members.size())
      return raw[a].members.size() < raw[b].members.size();
    return raw[a].min_rep < raw[b].min_rep;
  });

  uint32_t r = static_cast<uint32_t>(raw.size());
  c.reps_.reserve(r);
  c.sizes_.reserve(r);
  c.orders_.reserve(r);
  c.offsets_.reserve(r + 1);
  c.arena_.reserve(elems.size());
  c.lookup_.reserve(elems.size() * 2);
  c.offsets_.push_back(0);
  for (uint32_t ni = 0; ni < r; ++ni) {
    const RawClass& rc = raw[perm_order[ni]];
    c.reps_.push_back(rc.min_rep);
    c.sizes_.push_back(rc.members.size());
    c.orders_.push_back(raw_ord[perm_order[ni]]);
    for (uint32_t m : rc.members) {
      c.lookup_.emplace(elems[m], ni);
      c.arena_.push_back(elems[m]);
    }
    c.offsets_.push_back(c.arena_.size());
  }

  c.exponent_ = 1;
  for (uint64_t o : c.orders_) c.exponent_ = std::lcm(c.exponent_, o);

  // Power rows (periodic with the element order) and inverse classes.
  c.power_rows_.resize(r);
  c.inverse_.resize(r);
  for (uint32_t i = 0; i < r; ++i) {
    uint64_t o = c.orders_[i];
    std::vector<uint32_t>& row = c.power_rows_[i];
    row.reserve(o);
    Perm p = Perm::identity(G.degree());
    for (uint64_t k = 0; k < o; ++k) {
      row.push_back(c.lookup_.at(p));
      p = p * c.reps_[i];
    }
    c.inverse_[i] = row[(o - 1) % o];  // rep^{o-1} = rep^{-1}; o==1 gives identity
  }
  return c;
}

uint32_t Classes::class_of(const Perm& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) throw DomainError("element not in group");
  return it->second;
}

}  // namespace codegree
