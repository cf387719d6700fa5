#ifndef INCGEO_EXAMPLE_SYSTEMS_HPP
#define INCGEO_EXAMPLE_SYSTEMS_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "incgeo/autgroup.hpp"
#include "incgeo/graph.hpp"
#include "incgeo/permutation.hpp"

namespace incgeo {

// Recursive incidence system on the ground set {1..n} whose correlation and
// automorphism groups are the full symmetric and alternating groups. Types
// run 0..n: points carry type n, 2-subsets type n-1, and each removal chain
// bottoms out in a 2-vertex gadget of types 0 and 1 whose orientation encodes
// a parity.
struct GammaN {
  int n = 0;
  ColoredGraph graph;
  std::vector<std::string> point_ids;  // ground element a (1-based) -> id text

  struct IdRecord {
    enum Kind { kPoint, kPair, kBase } kind = kPoint;
    std::vector<int> chain;  // removal chain, outermost first
    int x = 0, y = 0;        // pair elements (kPair/kBase), x for kPoint
    int slot = 0;            // kBase only
  };
  std::unordered_map<std::string, IdRecord> records;
};

namespace detail {

// Parity of (chain..., x, y) read as one-line images of (1..n).
inline bool chain_pair_even(int n, const std::vector<int>& chain, int x, int y) {
  Perm p;
  p.reserve(n);
  for (int c : chain) p.push_back(c - 1);
  p.push_back(x - 1);
  p.push_back(y - 1);
  if (static_cast<int>(p.size()) != n) fail(ErrorCode::OutOfRange, "chain does not cover the ground set");
  return parity(p) == 1;
}

struct GammaBuilder {
  int n;
  GraphBuilder& b;
  GammaN& out;

  void record(const VertexId& id, GammaN::IdRecord rec) { out.records[id.text] = std::move(rec); }

  // The base gadget: attach(x) -- b0 -- b1 -- attach(y), with the type-0 end
  // on the side that makes (chain, x, y) an even listing.
  void emit_base(const std::vector<int>& chain, int x, int y, const VertexId& attach_x,
                 const VertexId& attach_y) {
    const bool even_as_is = chain_pair_even(n, chain, x, y);
    const int first = even_as_is ? x : y;
    const VertexId& attach_first = even_as_is ? attach_x : attach_y;
    const VertexId& attach_second = even_as_is ? attach_y : attach_x;
    (void)first;
    VertexId b0 = vid::base2(chain, x, y, 0);
    VertexId b1 = vid::base2(chain, x, y, 1);
    b.add_vertex(b0, 0);
    b.add_vertex(b1, 1);
    record(b0, {GammaN::IdRecord::kBase, chain, std::min(x, y), std::max(x, y), 0});
    record(b1, {GammaN::IdRecord::kBase, chain, std::min(x, y), std::max(x, y), 1});
    b.add_edge(attach_first, b0);
    b.add_edge(b0, b1);
    b.add_edge(b1, attach_second);
  }

  // ground: remaining elements, ascending; attach: their top-type vertices.
  void build(const std::vector<int>& ground, const std::vector<int>& chain,
             const std::vector<VertexId>& attach) {
    const int m = static_cast<int>(ground.size());
    if (m == 2) {
      emit_base(chain, ground[0], ground[1], attach[0], attach[1]);
      return;
    }
    std::unordered_map<int, VertexId> pair_of;  // keyed x*large+y
    auto pair_key = [this](int x, int y) { return std::min(x, y) * (n + 1) + std::max(x, y); };
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const int x = ground[i], y = ground[j];
        VertexId pv = vid::pair(chain, x, y);
        b.add_vertex(pv, m - 1);
        record(pv, {GammaN::IdRecord::kPair, chain, std::min(x, y), std::max(x, y), 0});
        b.add_edge(attach[i], pv);
        b.add_edge(attach[j], pv);
        pair_of.emplace(pair_key(x, y), pv);
      }
    for (int i = 0; i < m; ++i) {
      const int removed = ground[i];
      std::vector<int> sub_ground, sub_chain = chain;
      std::vector<VertexId> sub_attach;
      sub_chain.push_back(removed);
      for (int j = 0; j < m; ++j) {
        if (j == i) continue;
        sub_ground.push_back(ground[j]);
        sub_attach.push_back(pair_of.at(pair_key(ground[j], removed)));
      }
      build(sub_ground, sub_chain, sub_attach);
    }
  }
};

}  // namespace detail

inline GammaN gamma_n(int n) {
  if (n < 2 || n > 7) fail(ErrorCode::OutOfRange, "supported range is 2..7");
  GammaN out;
  out.n = n;
  std::vector<std::string> types;
  for (int t = 0; t <= n; ++t) types.push_back(std::to_string(t));
  GraphBuilder b(types);
  detail::GammaBuilder gb{n, b, out};

  std::vector<int> ground;
  std::vector<VertexId> attach;
  for (int a = 1; a <= n; ++a) {
    ground.push_back(a);
    VertexId pv = vid::point(a);
    b.add_vertex(pv, n);
    gb.record(pv, {GammaN::IdRecord::kPoint, {}, a, 0, 0});
    attach.push_back(pv);
    out.point_ids.push_back(pv.text);
  }
  gb.build(ground, {}, attach);
  out.graph = b.build();
  return out;
}

// The vertex permutation induced by relabeling the ground set. Even
// permutations preserve types; odd ones swap the two base types.
inline ColorblindAutomorphism natural_action(const GammaN& gamma, const Perm& ground_perm) {
  if (static_cast<int>(ground_perm.size()) != gamma.n || !is_permutation_of_range(ground_perm))
    fail(ErrorCode::OutOfRange, "ground permutation must act on 1.." + std::to_string(gamma.n));
  const bool even = parity(ground_perm) == 1;
  auto apply = [&](int elem) { return ground_perm[elem - 1] + 1; };

  const ColoredGraph& g = gamma.graph;
  ColorblindAutomorphism a;
  a.vertex_images.assign(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) {
    const GammaN::IdRecord& rec = gamma.records.at(g.vertices[v].id.text);
    VertexId image;
    switch (rec.kind) {
      case GammaN::IdRecord::kPoint:
        image = vid::point(apply(rec.x));
        break;
      case GammaN::IdRecord::kPair: {
        std::vector<int> chain;
        for (int c : rec.chain) chain.push_back(apply(c));
        image = vid::pair(chain, apply(rec.x), apply(rec.y));
        break;
      }
      case GammaN::IdRecord::kBase: {
        std::vector<int> chain;
        for (int c : rec.chain) chain.push_back(apply(c));
        image = vid::base2(chain, apply(rec.x), apply(rec.y), even ? rec.slot : 1 - rec.slot);
        break;
      }
    }
    a.vertex_images[v] = g.vertex_by_id(image);
  }
  a.type_images = induced_type_permutation(g, a.vertex_images);
  return a;
}

// Nine-vertex fixture: a triangle of black corners whose sides each pass
// through two hexagon vertices, alternating red and blue, plus the chords
// closing the hexagon.
inline ColoredGraph figure1_solid() {
  GraphBuilder b({"black", "red", "blue"});
  for (int i : {0, 2, 4}) b.add_vertex(vid::named("V" + std::to_string(i)), 0);
  for (int i = 0; i < 6; ++i) b.add_vertex(vid::named("H" + std::to_string(i)), i % 2 == 0 ? 1 : 2);
  auto V = [](int i) { return vid::named("V" + std::to_string(i)); };
  auto H = [](int i) { return vid::named("H" + std::to_string(i)); };
  b.add_edge(V(0), H(0));
  b.add_edge(H(0), H(1));
  b.add_edge(H(1), V(2));
  b.add_edge(V(2), H(2));
  b.add_edge(H(2), H(3));
  b.add_edge(H(3), V(4));
  b.add_edge(V(4), H(4));
  b.add_edge(H(4), H(5));
  b.add_edge(H(5), V(0));
  b.add_edge(H(1), H(2));
  b.add_edge(H(3), H(4));
  b.add_edge(H(5), H(0));
  return b.build();
}

// The solid fixture with three more black corners, each joined to its two
// nearest hexagon vertices, turning every maximal flag into a chamber.
inline ColoredGraph figure1_completed() {
  GraphBuilder b({"black", "red", "blue"});
  for (int i = 0; i < 6; ++i) b.add_vertex(vid::named("V" + std::to_string(i)), 0);
  for (int i = 0; i < 6; ++i) b.add_vertex(vid::named("H" + std::to_string(i)), i % 2 == 0 ? 1 : 2);
  auto V = [](int i) { return vid::named("V" + std::to_string(i)); };
  auto H = [](int i) { return vid::named("H" + std::to_string(i)); };
  b.add_edge(V(0), H(0));
  b.add_edge(H(0), H(1));
  b.add_edge(H(1), V(2));
  b.add_edge(V(2), H(2));
  b.add_edge(H(2), H(3));
  b.add_edge(H(3), V(4));
  b.add_edge(V(4), H(4));
  b.add_edge(H(4), H(5));
  b.add_edge(H(5), V(0));
  b.add_edge(H(1), H(2));
  b.add_edge(H(3), H(4));
  b.add_edge(H(5), H(0));
  b.add_edge(V(1), H(0));
  b.add_edge(V(1), H(1));
  b.add_edge(V(3), H(2));
  b.add_edge(V(3), H(3));
  b.add_edge(V(5), H(4));
  b.add_edge(V(5), H(5));
  return b.build();
}

}  // namespace incgeo

#endif  // INCGEO_EXAMPLE_SYSTEMS_HPP
