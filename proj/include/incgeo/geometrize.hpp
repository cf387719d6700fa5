#ifndef INCGEO_GEOMETRIZE_HPP
#define INCGEO_GEOMETRIZE_HPP

#include <string>
#include <utility>
#include <vector>

#include "incgeo/graph.hpp"

namespace incgeo {

struct Chamber {
  std::pair<std::string, std::string> edge;  // original endpoint ids, sorted
  std::vector<std::string> vertex_ids;       // |I| ids, one per type
};

struct GeometrizeResult {
  ColoredGraph graph;
  std::vector<Chamber> chambers;  // one per original edge, edge order
};

// Completes every edge {v,w} to a clique with one fresh vertex per missing
// type, the originals standing in for their own types. Requires min degree
// >= 2 and no flags of rank 3 or more.
inline GeometrizeResult geometrize(const ColoredGraph& g) {
  std::vector<std::string> low_degree;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) < 2) low_degree.push_back(g.vertices[v].id.text);
  if (!low_degree.empty()) {
    std::string msg = "vertices of degree < 2:";
    for (const std::string& s : low_degree) msg += " '" + s + "'";
    fail(ErrorCode::PreconditionDegree, msg);
  }
  const std::vector<Flag> tris = triangles(g);
  if (!tris.empty()) {
    std::string msg = "flags of rank 3:";
    for (const Flag& f : tris) {
      msg += " {";
      for (size_t i = 0; i < f.size(); ++i)
        msg += (i ? "," : "") + g.vertices[f[i]].id.text;
      msg += "}";
    }
    fail(ErrorCode::PreconditionFlag, msg);
  }

  GraphBuilder b(g.types);
  for (const Vertex& v : g.vertices) b.add_vertex(v.id, v.type);
  for (const auto& [a, c] : g.edges()) b.add_edge(g.vertices[a].id, g.vertices[c].id);

  GeometrizeResult out;
  for (const auto& [a, c] : g.edges()) {
    const VertexId& va = g.vertices[a].id;
    const VertexId& vc = g.vertices[c].id;
    Chamber chamber;
    chamber.edge = {va.text, vc.text};
    std::vector<VertexId> members;
    for (int t = 0; t < g.rank(); ++t) {
      if (t == g.type_of(a))
        members.push_back(va);
      else if (t == g.type_of(c))
        members.push_back(vc);
      else {
        VertexId u = vid::chamber(va, vc, t);
        b.add_vertex(u, t);
        members.push_back(u);
      }
    }
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j) {
        // the original edge is already present
        const bool original = (members[i] == va && members[j] == vc) ||
                              (members[i] == vc && members[j] == va);
        if (!original) b.add_edge(members[i], members[j]);
      }
    for (const VertexId& m : members) chamber.vertex_ids.push_back(m.text);
    out.chambers.push_back(std::move(chamber));
  }
  out.graph = b.build();
  return out;
}

// The chamber each original edge was completed to, as vertex index sets.
inline std::vector<std::vector<int>> chamber_index(const GeometrizeResult& r) {
  std::vector<std::vector<int>> out;
  for (const Chamber& c : r.chambers) {
    std::vector<int> members;
    for (const std::string& id : c.vertex_ids) members.push_back(r.graph.vertex_by_id({id}));
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace incgeo

#endif  // INCGEO_GEOMETRIZE_HPP
