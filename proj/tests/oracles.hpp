#ifndef INCGEO_TESTS_ORACLES_HPP
#define INCGEO_TESTS_ORACLES_HPP

// Independent reference implementations used to freeze expected values.
// Everything here enumerates directly and shares no search machinery with
// the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "incgeo/graph.hpp"
#include "incgeo/group.hpp"

namespace oracles {

// All maximal cliques by subset enumeration; graphs up to 20 vertices.
inline std::vector<std::vector<int>> brute_maximal_cliques(const incgeo::ColoredGraph& g) {
  const int n = g.n();
  std::vector<uint32_t> cliques;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool clique = true;
    for (int a = 0; a < n && clique; ++a)
      for (int b = a + 1; b < n && clique; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !g.adjacent(a, b)) clique = false;
    if (clique) cliques.push_back(mask);
  }
  std::vector<std::vector<int>> out;
  for (uint32_t m : cliques) {
    bool maximal = true;
    for (uint32_t other : cliques)
      if (other != m && (other & m) == m) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    std::vector<int> f;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1) f.push_back(v);
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every non-empty flag lies inside some chamber, checked subset by subset.
inline bool brute_is_geometry(const incgeo::ColoredGraph& g) {
  const int n = g.n();
  std::vector<uint32_t> cliques, chambers;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool clique = true;
    for (int a = 0; a < n && clique; ++a)
      for (int b = a + 1; b < n && clique; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !g.adjacent(a, b)) clique = false;
    if (!clique) continue;
    cliques.push_back(mask);
    if (std::popcount(mask) == g.rank()) chambers.push_back(mask);
  }
  for (uint32_t f : cliques) {
    bool contained = false;
    for (uint32_t c : chambers)
      if ((f & c) == f) {
        contained = true;
        break;
      }
    if (!contained) return false;
  }
  return true;
}

inline bool bijection_is_automorphism(const incgeo::ColoredGraph& g, const std::vector<int>& f,
                                      bool colorblind) {
  const int n = g.n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g.adjacent(a, b) != g.adjacent(f[a], f[b])) return false;
  if (colorblind) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if ((g.type_of(a) == g.type_of(b)) != (g.type_of(f[a]) == g.type_of(f[b]))) return false;
  } else {
    for (int a = 0; a < n; ++a)
      if (g.type_of(f[a]) != g.type_of(a)) return false;
  }
  return true;
}

// Literal scan over all n! vertex bijections; n <= 8.
inline std::vector<std::vector<int>> brute_automorphisms(const incgeo::ColoredGraph& g,
                                                         bool colorblind) {
  std::vector<int> f(g.n());
  std::iota(f.begin(), f.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (bijection_is_automorphism(g, f, colorblind)) out.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

namespace detail {

inline void pruned_search(const incgeo::ColoredGraph& g, bool colorblind, std::vector<int>& f,
                          std::vector<char>& used, int depth,
                          std::vector<std::vector<int>>& out) {
  const int n = g.n();
  if (depth == n) {
    out.push_back(f);
    return;
  }
  for (int u = 0; u < n; ++u) {
    if (used[u]) continue;
    bool ok = true;
    if (!colorblind && g.type_of(u) != g.type_of(depth)) ok = false;
    for (int w = 0; w < depth && ok; ++w) {
      if (g.adjacent(depth, w) != g.adjacent(u, f[w])) ok = false;
      if (colorblind && (g.type_of(depth) == g.type_of(w)) != (g.type_of(u) == g.type_of(f[w])))
        ok = false;
    }
    if (!ok) continue;
    f[depth] = u;
    used[u] = 1;
    pruned_search(g, colorblind, f, used, depth + 1, out);
    used[u] = 0;
    f[depth] = -1;
  }
}

}  // namespace detail

// Exhaustive backtracking in plain vertex order; prunes on direct adjacency
// and color-class coherence only. Complete for graphs around 20 vertices
// when reasonably rigid.
inline std::vector<std::vector<int>> pruned_automorphisms(const incgeo::ColoredGraph& g,
                                                          bool colorblind) {
  std::vector<int> f(g.n(), -1);
  std::vector<char> used(g.n(), 0);
  std::vector<std::vector<int>> out;
  detail::pruned_search(g, colorblind, f, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Pair isomorphism by scanning all element bijections; orders <= 8.
inline bool brute_pair_isomorphic(const incgeo::GroupPair& P, const incgeo::GroupPair& Q) {
  if (P.group.order != Q.group.order || P.subgroup_order != Q.subgroup_order) return false;
  const int n = P.group.order;
  std::vector<int> phi(n);
  std::iota(phi.begin(), phi.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (P.members[a] != Q.members[phi[a]]) ok = false;
      for (int b = 0; b < n && ok; ++b)
        if (phi[P.group.mul(a, b)] != Q.group.mul(phi[a], phi[b])) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return false;
}

}  // namespace oracles

#endif  // INCGEO_TESTS_ORACLES_HPP
