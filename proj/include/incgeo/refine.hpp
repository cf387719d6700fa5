#ifndef INCGEO_REFINE_HPP
#define INCGEO_REFINE_HPP

#include <string>
#include <utility>
#include <vector>

#include "incgeo/graph.hpp"

namespace incgeo {

// What a refinement pass will do to a graph: every edge and every vertex of
// degree < 2 receives a subdivision-plus-ray gadget of 2M+5 fresh vertices.
struct RefinementPlan {
  long long max_class_size = 0;                    // M
  std::vector<std::pair<int, int>> edge_owners;    // all edges
  std::vector<int> vertex_owners;                  // V_0 union V_1
  std::vector<int> degree_zero;                    // subset of vertex_owners
  int aux_even_type = 0;                           // i0 index in the output
  int aux_odd_type = 0;                            // i1 index in the output
};

inline RefinementPlan plan_refinement(const ColoredGraph& g) {
  RefinementPlan plan;
  for (long long s : g.type_class_sizes()) plan.max_class_size = std::max(plan.max_class_size, s);
  plan.edge_owners = g.edges();
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) <= 1) plan.vertex_owners.push_back(v);
    if (g.degree(v) == 0) plan.degree_zero.push_back(v);
  }
  plan.aux_even_type = g.rank();
  plan.aux_odd_type = g.rank() + 1;
  return plan;
}

namespace detail {

// Chain u_0..u_{2M+4} plus the two chords closing a figure eight at the tail.
template <typename MakeId>
inline void emit_ray(GraphBuilder& b, const MakeId& make_id, long long M, int even_type,
                     int odd_type) {
  const long long last = 2 * M + 4;
  for (long long j = 0; j <= last; ++j)
    b.add_vertex(make_id(static_cast<int>(j)), j % 2 == 0 ? even_type : odd_type);
  for (long long j = 0; j < last; ++j)
    b.add_edge(make_id(static_cast<int>(j)), make_id(static_cast<int>(j + 1)));
  b.add_edge(make_id(static_cast<int>(2 * M + 4)), make_id(static_cast<int>(2 * M - 1)));
  b.add_edge(make_id(static_cast<int>(2 * M + 3)), make_id(static_cast<int>(2 * M)));
}

}  // namespace detail

// Barycentric subdivision of every edge with a rigid ray at the midpoint, and
// the same ray on isolated and degree-one vertices. Keeps the correlation and
// automorphism groups, forces min degree >= 2 and flag rank <= 2.
inline ColoredGraph refine(const ColoredGraph& g) {
  const RefinementPlan plan = plan_refinement(g);
  const long long M = plan.max_class_size;

  std::vector<std::string> types = g.types;
  types.push_back("aux0");
  types.push_back("aux1");
  GraphBuilder b(types);

  for (const Vertex& v : g.vertices) b.add_vertex(v.id, v.type);

  for (const auto& [x, y] : plan.edge_owners) {
    const VertexId& vx = g.vertices[x].id;
    const VertexId& vy = g.vertices[y].id;
    auto make_id = [&](int j) { return vid::gadget_on_edge(vx, vy, j); };
    detail::emit_ray(b, make_id, M, plan.aux_even_type, plan.aux_odd_type);
    b.add_edge(vx, make_id(0));
    b.add_edge(make_id(0), vy);
  }
  for (int w : plan.vertex_owners) {
    const VertexId& vw = g.vertices[w].id;
    auto make_id = [&](int j) { return vid::gadget_on_vertex(vw, j); };
    detail::emit_ray(b, make_id, M, plan.aux_even_type, plan.aux_odd_type);
    b.add_edge(vw, make_id(0));
    if (g.degree(w) == 0) b.add_edge(vw, make_id(2));
  }
  return b.build();
}

struct ClassSizeAudit {
  long long owners = 0;       // |E| + |V_{0,1}|
  long long max_class = 0;    // M of the input
  long long even_count = 0;   // |t'^-1(i0)|
  long long odd_count = 0;    // |t'^-1(i1)|
};

// Verifies the refined graph's aux class sizes: (|E|+|V01|)(M+3) even and
// (|E|+|V01|)(M+2) odd, both larger than M and distinct.
inline ClassSizeAudit class_size_audit(const ColoredGraph& input, const ColoredGraph& refined) {
  const RefinementPlan plan = plan_refinement(input);
  ClassSizeAudit audit;
  audit.owners =
      static_cast<long long>(plan.edge_owners.size()) + static_cast<long long>(plan.vertex_owners.size());
  audit.max_class = plan.max_class_size;

  if (refined.rank() != input.rank() + 2)
    fail(ErrorCode::AuditFailure, "refined graph lacks the two aux types");
  const std::vector<long long> sizes = refined.type_class_sizes();
  audit.even_count = sizes[plan.aux_even_type];
  audit.odd_count = sizes[plan.aux_odd_type];

  const long long M = audit.max_class;
  if (audit.even_count != audit.owners * (M + 3))
    fail(ErrorCode::AuditFailure,
         "even aux class has " + std::to_string(audit.even_count) + " vertices, expected " +
             std::to_string(audit.owners * (M + 3)));
  if (audit.odd_count != audit.owners * (M + 2))
    fail(ErrorCode::AuditFailure,
         "odd aux class has " + std::to_string(audit.odd_count) + " vertices, expected " +
             std::to_string(audit.owners * (M + 2)));
  if (audit.even_count <= M || audit.odd_count <= M)
    fail(ErrorCode::AuditFailure, "aux classes are not larger than every original class");
  if (audit.even_count == audit.odd_count)
    fail(ErrorCode::AuditFailure, "aux classes must differ in size");
  return audit;
}

}  // namespace incgeo

#endif  // INCGEO_REFINE_HPP
