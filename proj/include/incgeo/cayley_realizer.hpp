#ifndef INCGEO_CAYLEY_REALIZER_HPP
#define INCGEO_CAYLEY_REALIZER_HPP

#include <string>
#include <utility>
#include <vector>

#include "incgeo/graph.hpp"
#include "incgeo/group.hpp"

namespace incgeo {

// Complete labeled digraph on the pair's element listing: arc (i,j) carries
// the listing position of ordering[j]*ordering[i]^-1, never position 0.
struct CayleyDigraph {
  int g = 0;
  std::vector<std::vector<int>> label;  // label[i][j], -1 on the diagonal

  int out_target(int i, int lbl) const {
    for (int j = 0; j < g; ++j)
      if (j != i && label[i][j] == lbl) return j;
    return -1;
  }
};

inline CayleyDigraph build_cayley_digraph(const GroupPair& pair) {
  const FiniteGroup& G = pair.group;
  if (G.order < 2) fail(ErrorCode::TrivialGroup, "construction needs |G| >= 2");
  CayleyDigraph d;
  d.g = G.order;
  d.label.assign(d.g, std::vector<int>(d.g, -1));
  for (int i = 0; i < d.g; ++i)
    for (int j = 0; j < d.g; ++j) {
      if (i == j) continue;
      const int elem = G.mul(pair.ordering[j], G.inv(pair.ordering[i]));
      d.label[i][j] = pair.position[elem];
    }
  return d;
}

// Arrow replacement: the arc (i,j) with label position q becomes the gadget
//
//   P_i --- S(i,j,0) --- P_j          S-chain S(i,j,0..q+3),
//   P_i --- T(i,j) --- S(i,j,q+3)     apex S(i,j,q+3) also tied to P_j,
//
// so chain length encodes the label and the T side encodes the direction.
// Types: 0 for T, coset index (1-based) for P, |I|-2 / |I|-1 for even / odd
// S positions, with |I| = [G:H] + 3.
inline ColoredGraph realize(const GroupPair& pair) {
  const FiniteGroup& G = pair.group;
  if (G.order < 2) fail(ErrorCode::TrivialGroup, "construction needs |G| >= 2");
  const CayleyDigraph d = build_cayley_digraph(pair);
  const int index = pair.index;
  const int s_even = index + 1, s_odd = index + 2;

  std::vector<std::string> types;
  for (int t = 0; t <= index + 2; ++t) types.push_back(std::to_string(t));
  GraphBuilder b(types);

  for (int i = 0; i < d.g; ++i) b.add_vertex(vid::p(i), pair.coset_of[pair.ordering[i]] + 1);
  for (int i = 0; i < d.g; ++i)
    for (int j = 0; j < d.g; ++j) {
      if (i == j) continue;
      const int top = d.label[i][j] + 3;
      b.add_vertex(vid::t(i, j), 0);
      for (int l = 0; l <= top; ++l) b.add_vertex(vid::s(i, j, l), l % 2 == 0 ? s_even : s_odd);
      b.add_edge(vid::p(i), vid::s(i, j, 0));
      b.add_edge(vid::s(i, j, 0), vid::p(j));
      b.add_edge(vid::p(i), vid::t(i, j));
      b.add_edge(vid::t(i, j), vid::s(i, j, top));
      b.add_edge(vid::p(j), vid::s(i, j, top));
      for (int l = 0; l < top; ++l) b.add_edge(vid::s(i, j, l), vid::s(i, j, l + 1));
    }
  return b.build();
}

// Closed-form counts, the independent oracle for realize.
inline std::pair<long long, long long> expected_counts(const GroupPair& pair) {
  const long long g = pair.group.order;
  if (g < 2) fail(ErrorCode::TrivialGroup, "construction needs |G| >= 2");
  const long long chain_total = g * (g * (g + 1) / 2 - 1);
  const long long vertices = g + 4 * g * (g - 1) + chain_total;
  const long long edges = 7 * g * (g - 1) + chain_total;
  return {vertices, edges};
}

// Right-translation action on the realized graph: element a sends P_i to the
// position of ordering[i]*a and relabels gadgets along. Returns vertex images.
inline std::vector<int> translation_action(const ColoredGraph& graph, const GroupPair& pair,
                                           int element) {
  const FiniteGroup& G = pair.group;
  const int g = G.order;
  auto shift = [&](int pos) { return pair.position[G.mul(pair.ordering[pos], element)]; };
  std::vector<int> images(graph.n(), -1);
  for (int i = 0; i < g; ++i)
    images[graph.vertex_by_id(vid::p(i))] = graph.vertex_by_id(vid::p(shift(i)));
  const CayleyDigraph d = build_cayley_digraph(pair);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      if (i == j) continue;
      const int k = shift(i), l = shift(j);
      images[graph.vertex_by_id(vid::t(i, j))] = graph.vertex_by_id(vid::t(k, l));
      const int top = d.label[i][j] + 3;
      for (int r = 0; r <= top; ++r)
        images[graph.vertex_by_id(vid::s(i, j, r))] = graph.vertex_by_id(vid::s(k, l, r));
    }
  return images;
}

// Structural audit of a realized graph: the exact degree table and the
// distance facts that make labels and directions recoverable. T must be the
// one degree-2 neighbor of P_i lying at distance 2 from P_j, and the apex
// must reach S(i,j,0), the unique degree-3 vertex behind a degree-2 chain,
// in exactly label+2 steps (1-based label).
inline void self_check(const ColoredGraph& graph, const GroupPair& pair) {
  const int g = pair.group.order;
  const CayleyDigraph d = build_cayley_digraph(pair);
  auto expect = [](bool ok, const std::string& what) {
    if (!ok) fail(ErrorCode::AuditFailure, what);
  };
  for (int i = 0; i < g; ++i)
    expect(graph.degree(graph.vertex_by_id(vid::p(i))) == 4 * (g - 1),
           "P(" + std::to_string(i) + ") degree");
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      if (i == j) continue;
      const int top = d.label[i][j] + 3;
      const int pi = graph.vertex_by_id(vid::p(i));
      const int pj = graph.vertex_by_id(vid::p(j));
      const int t = graph.vertex_by_id(vid::t(i, j));
      const int s0 = graph.vertex_by_id(vid::s(i, j, 0));
      const int apex = graph.vertex_by_id(vid::s(i, j, top));
      expect(graph.degree(t) == 2, "T degree");
      expect(graph.degree(s0) == 3, "S base degree");
      expect(graph.degree(apex) == 3, "S apex degree");
      for (int l = 1; l < top; ++l)
        expect(graph.degree(graph.vertex_by_id(vid::s(i, j, l))) == 2, "S chain degree");

      // T is the unique degree-2 neighbor of P_i at distance 2 from P_j
      int found = 0;
      for (int x : graph.adj[pi]) {
        if (graph.degree(x) != 2 || graph.adjacent(x, pj)) continue;
        bool dist2 = false;
        for (int y : graph.adj[x]) dist2 = dist2 || graph.adjacent(y, pj);
        if (dist2) {
          ++found;
          expect(x == t, "degree-2 neighbor at distance 2 is not T");
        }
      }
      expect(found == 1, "apex locator not unique");

      // the degree-2 chain from the apex ends at S(i,j,0) after top steps
      int chains_to_degree3 = 0;
      for (int start : graph.adj[apex]) {
        int prev = apex, cur = start, steps = 1;
        while (graph.degree(cur) == 2) {
          int next = graph.adj[cur][0] == prev ? graph.adj[cur][1] : graph.adj[cur][0];
          prev = cur;
          cur = next;
          ++steps;
        }
        if (graph.degree(cur) == 3) {
          ++chains_to_degree3;
          expect(cur == s0, "chain endpoint is not the base vertex");
          expect(steps == top, "chain length does not encode the label");
        }
      }
      expect(chains_to_degree3 == 1, "chain endpoint not unique");
    }
}

}  // namespace incgeo

#endif  // INCGEO_CAYLEY_REALIZER_HPP
