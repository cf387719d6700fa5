#include <catch_amalgamated.hpp>

#include <random>

#include "incgeo/autgroup.hpp"
#include "incgeo/group_iso.hpp"
#include "incgeo/random_graph.hpp"
#include "incgeo/refine.hpp"
#include "oracles.hpp"

using namespace incgeo;

namespace {

ColoredGraph isolated_vertex() {
  GraphBuilder b({"x"});
  b.add_vertex(vid::raw(0), 0);
  return b.build();
}

// one edge whose endpoints have degree 1 and different types
ColoredGraph single_edge() {
  GraphBuilder b({"x", "y"});
  b.add_vertex(vid::raw(0), 0);
  b.add_vertex(vid::raw(1), 1);
  b.add_edge(vid::raw(0), vid::raw(1));
  return b.build();
}

ColoredGraph triangle3() {
  GraphBuilder b({"a", "b", "c"});
  b.add_vertex(vid::raw(0), 0);
  b.add_vertex(vid::raw(1), 1);
  b.add_vertex(vid::raw(2), 2);
  b.add_edge(vid::raw(0), vid::raw(1));
  b.add_edge(vid::raw(1), vid::raw(2));
  b.add_edge(vid::raw(0), vid::raw(2));
  return b.build();
}

// the ray-plus-figure-eight gadget on its own
ColoredGraph standalone_gadget(long long M) {
  GraphBuilder b({"aux0", "aux1"});
  auto make_id = [](int j) { return vid::gadget_on_vertex(vid::raw(0), j); };
  detail::emit_ray(b, make_id, M, 0, 1);
  return b.build();
}

}  // namespace

TEST_CASE("isolated vertex gains the ray with both attachment edges") {
  ColoredGraph g = isolated_vertex();
  ColoredGraph r = refine(g);
  CHECK(r.n() == 8);
  CHECK(r.edge_count == 10);
  CHECK(r.rank() == 3);
  const int w = r.vertex_by_id(vid::raw(0));
  CHECK(r.degree(w) == 2);
  auto u = [&](int j) { return r.vertex_by_id(vid::gadget_on_vertex(vid::raw(0), j)); };
  CHECK(r.adjacent(w, u(0)));
  CHECK(r.adjacent(w, u(2)));
  // chords of the M=1 figure eight
  CHECK(r.adjacent(u(6), u(1)));
  CHECK(r.adjacent(u(5), u(2)));
  CHECK_FALSE(r.adjacent(u(6), u(0)));
}

TEST_CASE("single pendant edge: 23 vertices and aux classes 12 / 9") {
  ColoredGraph g = single_edge();
  ColoredGraph r = refine(g);
  CHECK(r.n() == 2 + 3 * 7);
  ClassSizeAudit audit = class_size_audit(g, r);
  CHECK(audit.owners == 3);
  CHECK(audit.max_class == 1);
  CHECK(audit.even_count == 12);
  CHECK(audit.odd_count == 9);
  CHECK(min_degree(r) >= 2);
}

TEST_CASE("isolated vertex audit: aux classes 4 / 3") {
  ColoredGraph g = isolated_vertex();
  ClassSizeAudit audit = class_size_audit(g, refine(g));
  CHECK(audit.even_count == 4);
  CHECK(audit.odd_count == 3);
  CHECK(audit.even_count > audit.max_class);
  CHECK(audit.odd_count > audit.max_class);
}

TEST_CASE("refined triangle is triangle-free and keeps original degrees") {
  ColoredGraph g = triangle3();
  ColoredGraph r = refine(g);
  CHECK(triangles(r).empty());
  CHECK(max_flag_rank(r) <= 2);
  for (int v = 0; v < 3; ++v)
    CHECK(r.degree(r.vertex_by_id(g.vertices[v].id)) == 2);
  ClassSizeAudit audit = class_size_audit(g, r);
  CHECK(audit.owners == 3);  // V01 empty
  CHECK(audit.even_count - audit.odd_count == audit.owners);
}

TEST_CASE("audit rejects a graph that was not refined") {
  ColoredGraph g = triangle3();
  CHECK_THROWS_MATCHES(class_size_audit(g, g), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == ErrorCode::AuditFailure; }));
}

TEST_CASE("standalone gadget is rigid for M in {1,2,3}") {
  for (long long M : {1, 2, 3}) {
    ColoredGraph gadget = standalone_gadget(M);
    INFO("M = " << M << ", " << gadget.n() << " vertices");
    CHECK(oracles::pruned_automorphisms(gadget, false).size() == 1);
    CHECK(color_automorphisms(gadget).order == 1);
  }
}

TEST_CASE("refinement invariants on a seeded corpus") {
  std::mt19937_64 rng(7);
  RandomGraphSpec spec;
  spec.min_vertices = 3;
  spec.max_vertices = 8;
  spec.min_types = 2;
  spec.max_types = 4;
  spec.min_density = 0.2;
  spec.max_density = 0.8;
  for (int trial = 0; trial < 12; ++trial) {
    ColoredGraph g = random_proper_graph(rng, spec);
    ColoredGraph r = refine(g);
    INFO("trial " << trial << ": " << g.n() << " -> " << r.n() << " vertices");

    CHECK(min_degree(r) >= 2);
    CHECK(triangles(r).empty());
    CHECK_NOTHROW(class_size_audit(g, r));

    // original adjacency is recoverable through shared subdivision vertices
    for (int v = 0; v < g.n(); ++v)
      for (int w = v + 1; w < g.n(); ++w) {
        const int rv = r.vertex_by_id(g.vertices[v].id);
        const int rw = r.vertex_by_id(g.vertices[w].id);
        bool share_fresh = false;
        for (int x : r.adj[rv]) {
          if (g.find_vertex(r.vertices[x].id.text) >= 0) continue;
          if (r.adjacent(x, rw)) share_fresh = true;
        }
        CHECK(share_fresh == g.adjacent(v, w));
        CHECK_FALSE(r.adjacent(rv, rw));
      }
  }
}

TEST_CASE("refinement preserves the correlation/automorphism pair") {
  std::mt19937_64 rng(11);
  RandomGraphSpec spec;
  spec.min_vertices = 3;
  spec.max_vertices = 7;
  spec.min_types = 2;
  spec.max_types = 4;
  spec.min_density = 0.25;
  spec.max_density = 0.75;
  VerifyOptions opts;
  opts.pair_cap = 5040;
  for (int trial = 0; trial < 8; ++trial) {
    ColoredGraph g = random_proper_graph(rng, spec);
    INFO("trial " << trial << " on " << g.n() << " vertices");

    AutGroupResult cb = colorblind_automorphisms(g);
    AutGroupResult c = color_automorphisms(g);
    CHECK(cb.order == static_cast<long long>(oracles::brute_automorphisms(g, true).size()));
    CHECK(c.order == static_cast<long long>(oracles::brute_automorphisms(g, false).size()));

    ColoredGraph r = refine(g);
    GroupPair before = realized_pair(g, opts);
    GroupPair after = realized_pair(r, opts);
    CHECK(pair_isomorphic(before, after).has_value());
  }
}
