#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "quintic/errors.hpp"
#include "quintic/perm_group.hpp"

namespace quintic {

namespace detail {

struct PointVecHash {
  size_t operator()(const std::vector<Point>& v) const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (Point x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ULL;
    }
    return size_t(h);
  }
};

}  // namespace detail

struct CosetAction {
  PermGroup image;               // action on right cosets, frozen
  std::vector<Perm> coset_reps;  // canonical representative per coset
  bool faithful = false;
  uint64_t kernel_order = 1;
};

// Action of g on the right cosets of h. Cosets are canonicalized by their
// lexicographically minimal member permutation, so coset identity is exact.
inline CosetAction coset_action(const PermGroup& g, const PermGroup& h,
                                uint64_t index_bound = 100000) {
  if (!g.frozen()) throw state_error("coset_action requires a frozen group");
  PermGroup hh = h.frozen() ? h : freeze(h);
  if (hh.degree() != g.degree())
    throw argument_error("subgroup degree mismatch");
  for (const Perm& x : hh.generators())
    if (!g.contains(x))
      throw argument_error("coset_action: subgroup is not contained in group");
  uint64_t index = g.order() / hh.order();
  if (g.order() % hh.order() != 0)
    throw internal_error("subgroup order does not divide group order");
  if (index > index_bound)
    throw resource_error("coset index " + std::to_string(index) +
                         " exceeds bound " + std::to_string(index_bound));

  std::vector<Perm> subgroup_elements = hh.elements(1 << 20);
  auto canon = [&](const Perm& x) {
    Perm best = x;
    for (const Perm& e : subgroup_elements) {
      Perm cur = e * x;
      if (cur.images() < best.images()) best = std::move(cur);
    }
    return best;
  };

  const auto& gens = g.generators();
  std::vector<Perm> reps{canon(Perm(g.degree()))};
  std::unordered_map<std::vector<Point>, uint32_t, detail::PointVecHash>
      index_of;
  index_of.emplace(reps[0].images(), 0);
  std::vector<std::vector<Point>> images(
      gens.size(), std::vector<Point>(size_t(index), 0));
  for (size_t i = 0; i < reps.size(); ++i) {
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      Perm next = canon(reps[i] * gens[gi]);
      auto [it, inserted] =
          index_of.emplace(next.images(), uint32_t(reps.size()));
      if (inserted) {
        if (reps.size() == index)
          throw internal_error("coset enumeration exceeded the group index");
        reps.push_back(std::move(next));
      }
      images[gi][i] = it->second;
    }
  }
  if (reps.size() != index)
    throw internal_error("coset enumeration found " +
                         std::to_string(reps.size()) + " cosets, expected " +
                         std::to_string(index));

  std::vector<Perm> image_gens;
  image_gens.reserve(gens.size());
  for (auto& img : images) image_gens.emplace_back(std::move(img));
  CosetAction ca{freeze(PermGroup(size_t(index), std::move(image_gens))),
                 std::move(reps)};
  ca.kernel_order = g.order() / ca.image.order();
  ca.faithful = ca.kernel_order == 1;
  return ca;
}

}  // namespace quintic
