#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "quintic/errors.hpp"
#include "quintic/perm.hpp"
#include "quintic/rng.hpp"

namespace quintic {

struct FreezeOptions {
  uint64_t seed = 0;
  // When the group order is known in advance (table formulas, orbit-stabilizer
  // counting), the chain is complete as soon as its order matches: the product
  // of transversal sizes can never exceed the true order. Without it, a full
  // deterministic Schreier-generator verification pass runs instead.
  std::optional<uint64_t> expected_order;
  // Prescribed initial base points (e.g. to read off a point stabilizer).
  std::vector<Point> base_hint;
};

namespace detail {

struct ChainLevel {
  Point beta = 0;
  std::vector<Perm> gens;          // strong generators active at this level
  std::vector<Point> orbit;        // BFS order, orbit[0] == beta
  std::vector<uint32_t> pos;       // point -> index in orbit, or npos
  std::vector<int32_t> via_gen;    // Schreier vector: gen index used to reach
  std::vector<Point> via_from;     // predecessor point
  static constexpr uint32_t npos = std::numeric_limits<uint32_t>::max();

  bool in_orbit(Point p) const { return pos[p] != npos; }

  void recompute_orbit(size_t degree) {
    orbit.assign(1, beta);
    pos.assign(degree, npos);
    via_gen.assign(degree, -1);
    via_from.assign(degree, 0);
    pos[beta] = 0;
    for (size_t i = 0; i < orbit.size(); ++i) {
      Point p = orbit[i];
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        Point q = gens[gi](p);
        if (pos[q] == npos) {
          pos[q] = uint32_t(orbit.size());
          via_gen[q] = int32_t(gi);
          via_from[q] = p;
          orbit.push_back(q);
        }
      }
    }
  }

  // Transversal element mapping beta to p (p must be in the orbit).
  Perm transversal(size_t degree, Point p) const {
    std::vector<int32_t> path;
    for (Point q = p; via_gen[q] >= 0; q = via_from[q]) path.push_back(via_gen[q]);
    Perm u{degree};
    for (auto it = path.rbegin(); it != path.rend(); ++it) u = u * gens[size_t(*it)];
    return u;
  }
};

struct StabChain {
  std::vector<Point> base;
  std::vector<ChainLevel> levels;
  uint64_t order = 1;
};

}  // namespace detail

// A permutation group given by generators, optionally carrying a stabilizer
// chain (base and strong generating set). Frozen groups are immutable values;
// copies share the chain.
class PermGroup {
 public:
  PermGroup(size_t degree, std::vector<Perm> gens)
      : degree_(degree), gens_(std::move(gens)) {
    for (const Perm& g : gens_)
      if (g.degree() != degree_)
        throw argument_error("generator degree mismatch");
  }

  static PermGroup trivial(size_t degree) { return PermGroup(degree, {}); }

  size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  bool frozen() const { return chain_ != nullptr; }

  // Smallest generator-closed set containing `p`, sorted.
  std::vector<Point> orbit(Point p) const {
    if (p >= degree_) throw argument_error("orbit: point out of range");
    std::vector<bool> seen(degree_, false);
    std::vector<Point> work{p};
    seen[p] = true;
    for (size_t i = 0; i < work.size(); ++i)
      for (const Perm& g : gens_) {
        Point q = g(work[i]);
        if (!seen[q]) {
          seen[q] = true;
          work.push_back(q);
        }
      }
    std::sort(work.begin(), work.end());
    return work;
  }

  std::vector<std::vector<Point>> orbits() const {
    std::vector<bool> seen(degree_, false);
    std::vector<std::vector<Point>> out;
    for (Point p = 0; p < degree_; ++p) {
      if (seen[p]) continue;
      auto orb = orbit(p);
      for (Point q : orb) seen[q] = true;
      out.push_back(std::move(orb));
    }
    return out;
  }

  bool is_transitive() const {
    return degree_ == 0 || orbit(0).size() == degree_;
  }

  uint64_t order() const {
    require_frozen();
    return chain_->order;
  }

  const std::vector<Point>& base() const {
    require_frozen();
    return chain_->base;
  }

  // Membership by sifting. A permutation of different degree is never a member.
  bool contains(const Perm& g) const {
    require_frozen();
    if (g.degree() != degree_) return false;
    Perm residue = g;
    return sift(residue) == chain_->levels.size() && residue.is_identity();
  }

  // Sift in place; returns the level reached (== levels.size() when every base
  // image was consumed; the residue then fixes all base points).
  size_t sift(Perm& g) const {
    require_frozen();
    const auto& lv = chain_->levels;
    for (size_t i = 0; i < lv.size(); ++i) {
      Point b = g(lv[i].beta);
      if (!lv[i].in_orbit(b)) return i;
      g = g * lv[i].transversal(degree_, b).inverse();
    }
    return lv.size();
  }

  // Strong generators active at `level` (those fixing base()[0..level-1]).
  std::vector<Perm> level_generators(size_t level) const {
    require_frozen();
    if (level >= chain_->levels.size()) return {};
    return chain_->levels[level].gens;
  }

  uint64_t level_order(size_t level) const {
    require_frozen();
    uint64_t n = 1;
    for (size_t i = level; i < chain_->levels.size(); ++i)
      n *= chain_->levels[i].orbit.size();
    return n;
  }

  // Uniformly random element (product of random transversal representatives).
  Perm random_element(Rng& rng) const {
    require_frozen();
    Perm g(degree_);
    for (const auto& lv : chain_->levels) {
      Point p = lv.orbit[rng.below(lv.orbit.size())];
      g = lv.transversal(degree_, p) * g;
    }
    return g;
  }

  // All elements; requires order() <= bound.
  std::vector<Perm> elements(uint64_t bound = 1'000'000) const {
    require_frozen();
    if (order() > bound) throw resource_error("element enumeration over bound");
    std::vector<Perm> acc{Perm(degree_)};
    for (auto it = chain_->levels.rbegin(); it != chain_->levels.rend(); ++it) {
      std::vector<Perm> next;
      next.reserve(acc.size() * it->orbit.size());
      for (Point p : it->orbit) {
        Perm u = it->transversal(degree_, p);
        for (const Perm& a : acc) next.push_back(a * u);
      }
      acc = std::move(next);
    }
    return acc;
  }

  const detail::StabChain& chain() const {
    require_frozen();
    return *chain_;
  }

  friend PermGroup freeze(const PermGroup& g, FreezeOptions opt);

 private:
  void require_frozen() const {
    if (!chain_) throw state_error("operation requires a frozen group");
  }

  size_t degree_;
  std::vector<Perm> gens_;
  std::shared_ptr<const detail::StabChain> chain_;
};

namespace detail {

class SchreierSims {
 public:
  SchreierSims(size_t degree, const std::vector<Perm>& gens, FreezeOptions opt)
      : degree_(degree), opt_(std::move(opt)), rng_(opt_.seed) {
    for (Point b : opt_.base_hint) {
      if (b >= degree_) throw argument_error("base hint point out of range");
      append_base(b);
    }
    bool grew = false;
    for (const Perm& g : gens) grew |= insert(g);
    (void)grew;
    if (!chain_.levels.empty()) random_phase(gens);
    if (opt_.expected_order) {
      int budget = 4096;
      while (current_order() != *opt_.expected_order && budget-- > 0)
        insert_random(gens);
      if (current_order() != *opt_.expected_order)
        throw internal_error(
            "stabilizer chain order does not reach the expected order");
    } else {
      deterministic_verify();
    }
    chain_.order = current_order();
    for (const auto& lv : chain_.levels) chain_.base.push_back(lv.beta);
  }

  StabChain take() { return std::move(chain_); }

 private:
  void append_base(Point b) {
    ChainLevel lv;
    lv.beta = b;
    lv.recompute_orbit(degree_);
    chain_.levels.push_back(std::move(lv));
  }

  uint64_t current_order() const {
    uint64_t n = 1;
    for (const auto& lv : chain_.levels) n *= lv.orbit.size();
    return n;
  }

  // Sift g; if a nontrivial residue remains, record it as a strong generator
  // at every level it stabilizes (keeping the level lists nested) and rebuild
  // the affected orbits. Returns true if the chain grew.
  bool insert(const Perm& g) {
    if (g.is_identity()) return false;
    Perm r = g;
    size_t level = 0;
    while (level < chain_.levels.size()) {
      ChainLevel& lv = chain_.levels[level];
      Point b = r(lv.beta);
      if (!lv.in_orbit(b)) break;
      r = r * lv.transversal(degree_, b).inverse();
      if (r.is_identity()) return false;
      ++level;
    }
    // r fixes base[0..level-1]; it moves base[level] outside the level orbit,
    // or fixes the whole base (then a new base point is appended).
    if (level == chain_.levels.size()) {
      Point moved = 0;
      while (r(moved) == moved) ++moved;
      append_base(moved);
    }
    for (size_t j = 0; j <= level; ++j) {
      chain_.levels[j].gens.push_back(r);
      chain_.levels[j].recompute_orbit(degree_);
    }
    return true;
  }

  void random_phase(const std::vector<Perm>& gens) {
    if (gens.empty()) return;
    int consecutive_clean = 0;
    int budget = 256;
    while (consecutive_clean < 12 && budget-- > 0) {
      if (insert_random(gens))
        consecutive_clean = 0;
      else
        ++consecutive_clean;
    }
  }

  bool insert_random(const std::vector<Perm>& gens) {
    Perm x(degree_);
    for (const auto& lv : chain_.levels)
      if (lv.orbit.size() > 1)
        x = lv.transversal(degree_, lv.orbit[rng_.below(lv.orbit.size())]) * x;
    if (!gens.empty()) {
      size_t k = 1 + rng_.below(3);
      for (size_t i = 0; i < k; ++i) x = x * gens[rng_.below(gens.size())];
    }
    return insert(x);
  }

  // Bottom-up closure: every Schreier generator of every level must sift to
  // the identity. Restart after any growth; terminates because the order is
  // strictly increasing and bounded by |G|.
  void deterministic_verify() {
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = chain_.levels.size(); i-- > 0 && !dirty;) {
        ChainLevel& lv = chain_.levels[i];
        for (size_t oi = 0; oi < lv.orbit.size() && !dirty; ++oi) {
          Point p = lv.orbit[oi];
          Perm u = lv.transversal(degree_, p);
          for (size_t gi = 0; gi < lv.gens.size() && !dirty; ++gi) {
            Point q = lv.gens[gi](p);
            Perm s = u * lv.gens[gi] * lv.transversal(degree_, q).inverse();
            if (insert(s)) dirty = true;
          }
        }
      }
    }
  }

  size_t degree_;
  FreezeOptions opt_;
  Rng rng_;
  StabChain chain_;
};

}  // namespace detail

// Build a stabilizer chain. The input is left untouched; the result is an
// immutable value. An empty generator list yields the trivial group.
inline PermGroup freeze(const PermGroup& g, FreezeOptions opt = {}) {
  PermGroup out(g.degree(), g.generators());
  detail::SchreierSims builder(g.degree(), g.generators(), std::move(opt));
  out.chain_ = std::make_shared<const detail::StabChain>(builder.take());
  return out;
}

// Stabilizer of a point, with generators taken from a chain based at that
// point. |G| = |orbit(v)| * |stabilizer| holds by construction.
inline PermGroup point_stabilizer(const PermGroup& g, Point v) {
  if (!g.frozen()) throw state_error("point_stabilizer requires a frozen group");
  if (v >= g.degree()) throw argument_error("point out of range");
  const PermGroup* src = &g;
  PermGroup rebased = g;
  if (g.base().empty() || g.base()[0] != v) {
    rebased =
        freeze(g, FreezeOptions{.expected_order = g.order(), .base_hint = {v}});
    src = &rebased;
  }
  uint64_t stab_order = src->level_order(1);
  PermGroup stab(g.degree(), src->level_generators(1));
  return freeze(stab, FreezeOptions{.expected_order = stab_order});
}

// Stabilizer of an ordered point tuple.
inline PermGroup tuple_stabilizer(const PermGroup& g,
                                  const std::vector<Point>& pts) {
  if (!g.frozen()) throw state_error("tuple_stabilizer requires a frozen group");
  PermGroup rebased =
      freeze(g, FreezeOptions{.expected_order = g.order(), .base_hint = pts});
  size_t level = 0;
  uint64_t ord = rebased.order();
  for (Point p : pts) {
    if (level >= rebased.base().size() || rebased.base()[level] != p) break;
    ord /= rebased.chain().levels[level].orbit.size();
    ++level;
  }
  PermGroup stab(g.degree(), rebased.level_generators(level));
  return freeze(stab, FreezeOptions{.expected_order = ord});
}

}  // namespace quintic
