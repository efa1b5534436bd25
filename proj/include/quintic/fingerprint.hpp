#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "quintic/perm_group.hpp"

namespace quintic {

// Isomorphism-invariant identification record. Declared sufficient only for
// the specific catalogue of stabilizer and quotient groups this project
// constructs; a test asserts pairwise distinctness over that catalogue.
struct Fingerprint {
  uint64_t order = 1;
  bool full = false;  // histogram/abelian/derived computed (order small enough)
  std::vector<std::pair<uint64_t, uint64_t>> order_histogram;  // (order, count)
  bool abelian = false;
  uint64_t derived_order = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << "order=" << order;
    if (full) {
      os << ";orders=";
      bool first = true;
      for (auto [o, c] : order_histogram) {
        if (!first) os << ',';
        os << o << ':' << c;
        first = false;
      }
      os << ";abelian=" << (abelian ? 1 : 0) << ";derived=" << derived_order;
    }
    return os.str();
  }
};

// Derived subgroup as the normal closure of generator commutators.
// Requires |G| small enough that repeated deterministic freezes stay cheap.
inline PermGroup derived_subgroup(const PermGroup& g) {
  if (!g.frozen()) throw state_error("derived_subgroup requires a frozen group");
  const auto& gens = g.generators();
  std::vector<Perm> kgens;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity()) kgens.push_back(c);
    }
  PermGroup k = freeze(PermGroup(g.degree(), kgens));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> additions;
    for (const Perm& kg : k.generators())
      for (const Perm& gg : gens) {
        Perm c = kg.conjugate_by(gg);
        if (!k.contains(c)) additions.push_back(c);
      }
    if (!additions.empty()) {
      std::vector<Perm> all = k.generators();
      all.insert(all.end(), additions.begin(), additions.end());
      k = freeze(PermGroup(g.degree(), all));
      grew = true;
    }
  }
  return k;
}

inline Fingerprint fingerprint(const PermGroup& g,
                               uint64_t histogram_bound = 10000) {
  if (!g.frozen()) throw state_error("fingerprint requires a frozen group");
  Fingerprint fp;
  fp.order = g.order();
  if (fp.order > histogram_bound) return fp;
  fp.full = true;
  std::map<uint64_t, uint64_t> hist;
  for (const Perm& e : g.elements(histogram_bound)) ++hist[e.order()];
  fp.order_histogram.assign(hist.begin(), hist.end());
  fp.abelian = true;
  const auto& gens = g.generators();
  for (size_t i = 0; i < gens.size() && fp.abelian; ++i)
    for (size_t j = i + 1; j < gens.size() && fp.abelian; ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) fp.abelian = false;
  fp.derived_order = derived_subgroup(g).order();
  return fp;
}

}  // namespace quintic
