#ifndef INCGEO_GRAPH_HPP
#define INCGEO_GRAPH_HPP

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "incgeo/errors.hpp"
#include "incgeo/vertex_id.hpp"

namespace incgeo {

inline constexpr long long kMaxVertices = 1'000'000;

struct Vertex {
  VertexId id;
  int type = 0;
};

// Incidence system as a simple proper vertex-colored graph. Immutable after
// construction; vertices are sorted by structured id, adjacency lists sorted.
struct ColoredGraph {
  std::vector<std::string> types;
  std::vector<Vertex> vertices;
  std::vector<std::vector<int>> adj;
  long long edge_count = 0;

  int n() const { return static_cast<int>(vertices.size()); }
  int rank() const { return static_cast<int>(types.size()); }
  int type_of(int v) const { return vertices[v].type; }

  bool adjacent(int a, int b) const {
    return std::binary_search(adj[a].begin(), adj[a].end(), b);
  }

  int degree(int v) const {
    if (v < 0 || v >= n()) fail(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v));
    return static_cast<int>(adj[v].size());
  }

  int find_vertex(const std::string& id_text) const {
    auto it = index_.find(id_text);
    return it == index_.end() ? -1 : it->second;
  }

  int vertex_by_id(const VertexId& id) const {
    int v = find_vertex(id.text);
    if (v < 0) fail(ErrorCode::UnknownVertex, "no vertex '" + id.text + "'");
    return v;
  }

  // Sorted (a, b) index pairs with a < b; index order matches id order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count));
    for (int a = 0; a < n(); ++a)
      for (int b : adj[a])
        if (a < b) out.emplace_back(a, b);
    return out;
  }

  std::vector<long long> type_class_sizes() const {
    std::vector<long long> sizes(types.size(), 0);
    for (const Vertex& v : vertices) ++sizes[v.type];
    return sizes;
  }

  std::unordered_map<std::string, int> index_;  // id text -> vertex index
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::vector<std::string> types) : types_(std::move(types)) {}

  void add_vertex(VertexId id, int type) { pending_.push_back({std::move(id), type}); }

  void add_edge(const VertexId& a, const VertexId& b) { edge_ids_.emplace_back(a.text, b.text); }

  ColoredGraph build() {
    ColoredGraph g;
    g.types = types_;
    if (pending_.empty()) fail(ErrorCode::EmptyGraph, "graph has no vertices");
    if (static_cast<long long>(pending_.size()) > kMaxVertices)
      fail(ErrorCode::OutOfRange, "vertex cap exceeded");
    std::sort(pending_.begin(), pending_.end(),
              [](const Vertex& x, const Vertex& y) { return x.id < y.id; });
    for (size_t i = 0; i + 1 < pending_.size(); ++i)
      if (pending_[i].id == pending_[i + 1].id)
        fail(ErrorCode::DuplicateVertex, "'" + pending_[i].id.text + "'");
    g.vertices = pending_;
    for (int i = 0; i < g.n(); ++i) {
      if (g.vertices[i].type < 0 || g.vertices[i].type >= g.rank())
        fail(ErrorCode::OutOfRange, "type index of '" + g.vertices[i].id.text + "'");
      g.index_[g.vertices[i].id.text] = i;
    }
    g.adj.assign(g.n(), {});
    for (const auto& [ida, idb] : edge_ids_) {
      int a = g.find_vertex(ida), b = g.find_vertex(idb);
      if (a < 0) fail(ErrorCode::UnknownVertex, "edge endpoint '" + ida + "'");
      if (b < 0) fail(ErrorCode::UnknownVertex, "edge endpoint '" + idb + "'");
      if (a == b) fail(ErrorCode::NotSimple, "loop at '" + ida + "'");
      g.adj[a].push_back(b);
      g.adj[b].push_back(a);
    }
    for (int v = 0; v < g.n(); ++v) {
      std::sort(g.adj[v].begin(), g.adj[v].end());
      for (size_t i = 0; i + 1 < g.adj[v].size(); ++i)
        if (g.adj[v][i] == g.adj[v][i + 1])
          fail(ErrorCode::NotSimple, "repeated edge {" + g.vertices[v].id.text + "," +
                                         g.vertices[g.adj[v][i]].id.text + "}");
    }
    g.edge_count = 0;
    for (int v = 0; v < g.n(); ++v) g.edge_count += static_cast<long long>(g.adj[v].size());
    g.edge_count /= 2;
    validate(g);
    return g;
  }

  // Properness, surjectivity, non-emptiness. Simplicity is structural here
  // (checked again for graphs assembled by this builder above).
  static void validate(const ColoredGraph& g) {
    if (g.n() == 0) fail(ErrorCode::EmptyGraph, "graph has no vertices");
    for (int v = 0; v < g.n(); ++v)
      for (int w : g.adj[v])
        if (g.type_of(v) == g.type_of(w) && v < w)
          fail(ErrorCode::NotProper, "edge {" + g.vertices[v].id.text + "," +
                                         g.vertices[w].id.text + "} joins two vertices of type " +
                                         g.types[g.type_of(v)]);
    std::vector<char> used(g.rank(), 0);
    for (const Vertex& v : g.vertices) used[v.type] = 1;
    for (int t = 0; t < g.rank(); ++t)
      if (!used[t]) fail(ErrorCode::TypeNotUsed, "type '" + g.types[t] + "' has no vertices");
  }

 private:
  std::vector<std::string> types_;
  std::vector<Vertex> pending_;
  std::vector<std::pair<std::string, std::string>> edge_ids_;
};

inline void validate(const ColoredGraph& g) { GraphBuilder::validate(g); }

inline int min_degree(const ColoredGraph& g) {
  int m = g.n() == 0 ? 0 : g.degree(0);
  for (int v = 1; v < g.n(); ++v) m = std::min(m, g.degree(v));
  return m;
}

using Flag = std::vector<int>;  // clique, vertex indices sorted ascending

namespace detail {

inline void bron_kerbosch(const ColoredGraph& g, std::vector<int>& R, std::vector<int> P,
                          std::vector<int> X, std::vector<Flag>& out) {
  if (P.empty() && X.empty()) {
    out.push_back(R);
    return;
  }
  // pivot: vertex of P union X with most neighbors in P
  int pivot = -1, best = -1;
  for (int u : P) {
    int cnt = 0;
    for (int v : P)
      if (g.adjacent(u, v)) ++cnt;
    if (cnt > best) best = cnt, pivot = u;
  }
  for (int u : X) {
    int cnt = 0;
    for (int v : P)
      if (g.adjacent(u, v)) ++cnt;
    if (cnt > best) best = cnt, pivot = u;
  }
  std::vector<int> candidates;
  for (int v : P)
    if (pivot < 0 || !g.adjacent(pivot, v)) candidates.push_back(v);
  for (int v : candidates) {
    std::vector<int> P2, X2;
    for (int w : P)
      if (g.adjacent(v, w)) P2.push_back(w);
    for (int w : X)
      if (g.adjacent(v, w)) X2.push_back(w);
    R.push_back(v);
    bron_kerbosch(g, R, std::move(P2), std::move(X2), out);
    R.pop_back();
    P.erase(std::find(P.begin(), P.end(), v));
    X.insert(std::lower_bound(X.begin(), X.end(), v), v);
  }
}

}  // namespace detail

// All inclusion-maximal cliques, each sorted, the list lexicographic.
inline std::vector<Flag> maximal_cliques(const ColoredGraph& g) {
  std::vector<int> R, P(g.n()), X;
  for (int v = 0; v < g.n(); ++v) P[v] = v;
  std::vector<Flag> out;
  detail::bron_kerbosch(g, R, std::move(P), std::move(X), out);
  for (Flag& f : out) std::sort(f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline int max_flag_rank(const ColoredGraph& g) {
  size_t m = 0;
  for (const Flag& f : maximal_cliques(g)) m = std::max(m, f.size());
  return static_cast<int>(m);
}

// All triangles (a < b < c); cheap rank>2 witness scan.
inline std::vector<Flag> triangles(const ColoredGraph& g) {
  std::vector<Flag> out;
  for (int a = 0; a < g.n(); ++a)
    for (int b : g.adj[a]) {
      if (b <= a) continue;
      for (int c : g.adj[b]) {
        if (c <= b) continue;
        if (g.adjacent(a, c)) out.push_back({a, b, c});
      }
    }
  return out;
}

struct GeometryReport {
  bool is_geometry = false;
  long long chamber_count = 0;
  std::vector<Flag> deficient;  // maximal flags not contained in any chamber
};

// A geometry iff every maximal clique is a chamber (one vertex of each type).
inline GeometryReport geometry_report(const ColoredGraph& g) {
  GeometryReport rep;
  rep.is_geometry = true;
  for (const Flag& f : maximal_cliques(g)) {
    if (static_cast<int>(f.size()) == g.rank())
      ++rep.chamber_count;
    else {
      rep.is_geometry = false;
      rep.deficient.push_back(f);
    }
  }
  return rep;
}

inline bool is_geometry(const ColoredGraph& g) { return geometry_report(g).is_geometry; }

}  // namespace incgeo

#endif  // INCGEO_GRAPH_HPP
