#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "quintic/errors.hpp"
#include "quintic/perm_group.hpp"

namespace quintic {

// A partition of the point set preserved by the group.
struct BlockSystem {
  std::vector<uint32_t> block_of;  // point -> block id (0-based, compact)
  uint32_t block_count = 0;

  uint32_t block_size() const {
    return uint32_t(block_of.size()) / block_count;
  }
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Point{0});
  }
  Point find(Point x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<Point> parent_;
};

}  // namespace detail

// Finest block system in which a and b lie in the same block (Atkinson).
inline BlockSystem minimal_blocks(const PermGroup& g, Point a, Point b) {
  if (a >= g.degree() || b >= g.degree() || a == b)
    throw argument_error("minimal_blocks: bad seed pair");
  detail::UnionFind uf(g.degree());
  std::vector<std::pair<Point, Point>> agenda{{a, b}};
  uf.unite(a, b);
  while (!agenda.empty()) {
    auto [u, v] = agenda.back();
    agenda.pop_back();
    for (const Perm& p : g.generators()) {
      Point x = uf.find(p(u)), y = uf.find(p(v));
      if (uf.unite(x, y)) agenda.emplace_back(x, y);
    }
  }
  BlockSystem bs;
  bs.block_of.assign(g.degree(), 0);
  std::vector<int32_t> label(g.degree(), -1);
  uint32_t next = 0;
  for (Point p = 0; p < g.degree(); ++p) {
    Point r = uf.find(p);
    if (label[r] < 0) label[r] = int32_t(next++);
    bs.block_of[p] = uint32_t(label[r]);
  }
  bs.block_count = next;
  return bs;
}

// True when every generator permutes the blocks of bs.
inline bool preserves_blocks(const PermGroup& g, const BlockSystem& bs) {
  for (const Perm& p : g.generators()) {
    std::vector<int32_t> image_block(bs.block_count, -1);
    for (Point x = 0; x < g.degree(); ++x) {
      uint32_t from = bs.block_of[x], to = bs.block_of[p(x)];
      if (image_block[from] < 0)
        image_block[from] = int32_t(to);
      else if (image_block[from] != int32_t(to))
        return false;
    }
  }
  return true;
}

// Nontrivial block system, or nullopt when the group is primitive.
// Seeds every pair (base point, other point), per the minimal-block method.
inline std::optional<BlockSystem> primitivity_witness(const PermGroup& g) {
  if (!g.frozen()) throw state_error("primitivity test requires a frozen group");
  if (!g.is_transitive())
    throw argument_error("primitivity is defined for transitive groups only");
  if (g.degree() <= 2) return std::nullopt;
  Point a = 0;
  for (Point b = 1; b < g.degree(); ++b) {
    BlockSystem bs = minimal_blocks(g, a, b);
    if (bs.block_count > 1) return bs;
  }
  return std::nullopt;
}

inline bool is_primitive(const PermGroup& g) {
  return !primitivity_witness(g).has_value();
}

}  // namespace quintic
