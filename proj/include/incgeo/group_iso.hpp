#ifndef INCGEO_GROUP_ISO_HPP
#define INCGEO_GROUP_ISO_HPP

#include <optional>
#include <vector>

#include "incgeo/group.hpp"

namespace incgeo {

// Witness isomorphism between groups, carried as an element index map.
struct ElementPermutation {
  std::vector<int> images;
};

namespace detail {

// Greedy minimal generating sequence: repeatedly add the smallest element
// outside the closure so far. Depth stays <= log2 |G|.
inline std::vector<int> greedy_generators(const FiniteGroup& G) {
  std::vector<int> gens;
  std::vector<char> closed = subgroup_from_generators(G, {});
  for (int x = 0; x < G.order; ++x) {
    if (closed[x]) continue;
    gens.push_back(x);
    closed = subgroup_from_generators(G, gens);
  }
  return gens;
}

struct IsoSearch {
  const FiniteGroup& G;
  const FiniteGroup& H;
  const std::vector<char>& membersG;
  const std::vector<char>& membersH;
  std::vector<int> gens;
  std::vector<int> orderG;  // element orders, precomputed
  std::vector<int> orderH;

  std::vector<int> phi;       // G element -> H element, -1 if unset
  std::vector<int> used;      // H element -> G element, -1 if free
  std::vector<int> domain;    // elements with phi set, in discovery order

  bool map_element(int a, int b, std::vector<int>& trail) {
    if (phi[a] >= 0) return phi[a] == b;
    if (used[b] >= 0) return false;
    if (membersG[a] != membersH[b]) return false;
    phi[a] = b;
    used[b] = a;
    domain.push_back(a);
    trail.push_back(a);
    return true;
  }

  void unwind(std::vector<int>& trail) {
    for (int a : trail) {
      used[phi[a]] = -1;
      phi[a] = -1;
      domain.pop_back();
    }
    trail.clear();
  }

  // Close the mapped set under products, defining phi on new elements and
  // checking homomorphism consistency on every known pair.
  bool close(std::vector<int>& trail) {
    size_t fresh = 0;
    while (fresh < domain.size()) {
      size_t upto = domain.size();
      for (size_t i = fresh; i < upto; ++i)
        for (size_t j = 0; j < upto; ++j) {
          int a = domain[i], b = domain[j];
          if (!map_element(G.mul(a, b), H.mul(phi[a], phi[b]), trail)) return false;
          if (!map_element(G.mul(b, a), H.mul(phi[b], phi[a]), trail)) return false;
        }
      fresh = upto;
    }
    return true;
  }

  bool extend(size_t depth) {
    if (depth == gens.size()) return static_cast<int>(domain.size()) == G.order;
    const int a = gens[depth];
    for (int b = 0; b < H.order; ++b) {
      if (used[b] >= 0) continue;
      if (orderG[a] != orderH[b]) continue;
      if (membersG[a] != membersH[b]) continue;
      std::vector<int> trail;
      if (map_element(a, b, trail) && close(trail) && extend(depth + 1)) return true;
      unwind(trail);
    }
    return false;
  }
};

}  // namespace detail

// Witness isomorphism phi: G -> G' with phi(H) = H', if one exists.
inline std::optional<ElementPermutation> pair_isomorphic(const GroupPair& P, const GroupPair& Q) {
  const FiniteGroup& G = P.group;
  const FiniteGroup& H = Q.group;
  if (G.order != H.order || P.subgroup_order != Q.subgroup_order) return std::nullopt;

  detail::IsoSearch s{G, H, P.members, Q.members, {}, {}, {}, {}, {}, {}};
  s.gens = detail::greedy_generators(G);
  s.orderG.resize(G.order);
  s.orderH.resize(H.order);
  for (int x = 0; x < G.order; ++x) s.orderG[x] = G.element_order(x);
  for (int x = 0; x < H.order; ++x) s.orderH[x] = H.element_order(x);
  s.phi.assign(G.order, -1);
  s.used.assign(H.order, -1);

  std::vector<int> root_trail;
  if (!s.map_element(G.identity, H.identity, root_trail)) return std::nullopt;
  if (!s.extend(0)) return std::nullopt;
  return ElementPermutation{s.phi};
}

}  // namespace incgeo

#endif  // INCGEO_GROUP_ISO_HPP
