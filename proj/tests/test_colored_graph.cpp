#include <catch_amalgamated.hpp>

#include <random>

#include "incgeo/graph.hpp"
#include "incgeo/io.hpp"
#include "incgeo/random_graph.hpp"
#include "oracles.hpp"

using namespace incgeo;

namespace {

ColoredGraph path4() {
  // the four-vertex path typed 2,0,1,2
  GraphBuilder b({"0", "1", "2"});
  b.add_vertex(vid::raw(0), 2);
  b.add_vertex(vid::raw(1), 0);
  b.add_vertex(vid::raw(2), 1);
  b.add_vertex(vid::raw(3), 2);
  b.add_edge(vid::raw(0), vid::raw(1));
  b.add_edge(vid::raw(1), vid::raw(2));
  b.add_edge(vid::raw(2), vid::raw(3));
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

}  // namespace

TEST_CASE("natural id ordering compares embedded numbers numerically") {
  CHECK(natural_less("P(2)", "P(10)"));
  CHECK_FALSE(natural_less("P(10)", "P(2)"));
  CHECK(natural_less("P(2)", "S(0,1,0)"));
  CHECK(natural_less("S(0,1,9)", "S(0,1,10)"));
  CHECK(natural_less("S(0,2,1)", "S(0,10,0)"));
  CHECK_FALSE(natural_less("P(3)", "P(3)"));
}

TEST_CASE("single vertex with one type validates") {
  GraphBuilder b({"only"});
  b.add_vertex(vid::raw(0), 0);
  ColoredGraph g = b.build();
  CHECK(g.n() == 1);
  CHECK(g.degree(0) == 0);
  CHECK(min_degree(g) == 0);
  CHECK(max_flag_rank(g) == 1);
}

TEST_CASE("edge between same-typed vertices is rejected") {
  GraphBuilder b({"a", "b"});
  b.add_vertex(vid::raw(0), 0);
  b.add_vertex(vid::raw(1), 0);
  b.add_vertex(vid::raw(2), 1);
  b.add_edge(vid::raw(0), vid::raw(1));
  CHECK_THROWS_MATCHES(b.build(), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == ErrorCode::NotProper;
                       }));
}

TEST_CASE("declared but unused type is rejected") {
  GraphBuilder b({"a", "b"});
  b.add_vertex(vid::raw(0), 0);
  CHECK_THROWS_MATCHES(b.build(), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == ErrorCode::TypeNotUsed;
                       }));
}

TEST_CASE("empty graphs, loops, duplicate edges and duplicate ids are rejected") {
  {
    GraphBuilder b({"a"});
    CHECK_THROWS_MATCHES(b.build(), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == ErrorCode::EmptyGraph;
                         }));
  }
  {
    GraphBuilder b({"a"});
    b.add_vertex(vid::raw(0), 0);
    b.add_edge(vid::raw(0), vid::raw(0));
    CHECK_THROWS_MATCHES(b.build(), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == ErrorCode::NotSimple;
                         }));
  }
  {
    GraphBuilder b({"a", "b"});
    b.add_vertex(vid::raw(0), 0);
    b.add_vertex(vid::raw(1), 1);
    b.add_edge(vid::raw(0), vid::raw(1));
    b.add_edge(vid::raw(1), vid::raw(0));
    CHECK_THROWS_MATCHES(b.build(), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == ErrorCode::NotSimple;
                         }));
  }
  {
    GraphBuilder b({"a"});
    b.add_vertex(vid::raw(0), 0);
    b.add_vertex(vid::raw(0), 0);
    CHECK_THROWS_MATCHES(b.build(), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == ErrorCode::DuplicateVertex;
                         }));
  }
  {
    GraphBuilder b({"a", "b"});
    b.add_vertex(vid::raw(0), 0);
    b.add_vertex(vid::raw(1), 1);
    b.add_edge(vid::raw(0), vid::raw(7));
    CHECK_THROWS_MATCHES(b.build(), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == ErrorCode::UnknownVertex;
                         }));
  }
}

TEST_CASE("degrees of simple fixtures") {
  ColoredGraph tri = triangle3();
  CHECK(tri.degree(0) == 2);
  CHECK(min_degree(tri) == 2);
  CHECK_THROWS_AS(tri.degree(99), Error);
}

TEST_CASE("maximal cliques of a triangle and a path") {
  CHECK(maximal_cliques(triangle3()) == std::vector<Flag>{{0, 1, 2}});
  CHECK(maximal_cliques(path4()) == std::vector<Flag>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("triangle with three types is a geometry with one chamber") {
  GeometryReport rep = geometry_report(triangle3());
  CHECK(rep.is_geometry);
  CHECK(rep.chamber_count == 1);
  CHECK(max_flag_rank(triangle3()) == 3);
}

TEST_CASE("the four-vertex path is not a geometry") {
  // rank 3 but all maximal cliques have size 2
  GeometryReport rep = geometry_report(path4());
  CHECK_FALSE(rep.is_geometry);
  CHECK(rep.deficient.size() == 3);
  CHECK(maximal_cliques(path4()).size() == 3);
}

TEST_CASE("clique enumeration and geometry verdicts agree with brute force") {
  std::mt19937_64 rng(20240811);
  RandomGraphSpec spec;
  spec.min_vertices = 1;
  spec.max_vertices = 12;
  spec.min_types = 1;
  spec.max_types = 4;
  spec.min_density = 0.1;
  spec.max_density = 0.9;
  for (int trial = 0; trial < 60; ++trial) {
    ColoredGraph g = random_proper_graph(rng, spec);
    INFO("trial " << trial << " with " << g.n() << " vertices");
    const auto cliques = maximal_cliques(g);
    CHECK(cliques == oracles::brute_maximal_cliques(g));
    CHECK(is_geometry(g) == oracles::brute_is_geometry(g));
    // properness forces distinct types inside every clique
    for (const Flag& f : cliques) {
      std::vector<char> seen(g.rank(), 0);
      for (int v : f) {
        CHECK(seen[g.type_of(v)] == 0);
        seen[g.type_of(v)] = 1;
      }
    }
  }
}

TEST_CASE("JSON round trip is byte-identical") {
  ColoredGraph g = path4();
  const std::string once = to_json(g);
  ColoredGraph loaded = from_json(once);
  CHECK(to_json(loaded) == once);
  CHECK(loaded.n() == g.n());
  CHECK(loaded.edge_count == g.edge_count);
  for (int v = 0; v < g.n(); ++v) CHECK(loaded.type_of(v) == g.type_of(v));
}

TEST_CASE("JSON parse failures carry ParseError") {
  CHECK_THROWS_MATCHES(from_json("{"), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == ErrorCode::ParseError;
                       }));
  CHECK_THROWS_MATCHES(from_json("{\"types\":[\"a\"]}"), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == ErrorCode::ParseError; }));
  CHECK_THROWS_MATCHES(from_json("{\"types\":[\"a\"],\"vertices\":[{\"id\":\"x\",\"type\":0}],"
                                 "\"edges\":[[\"x\"]]}"),
                       Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == ErrorCode::ParseError;
                       }));
}

TEST_CASE("DOT export renders every vertex and edge") {
  const std::string dot = to_dot(triangle3());
  CHECK(dot.find("graph incidence {") == 0);
  CHECK(dot.find("\"0\" [fillcolor=") != std::string::npos);
  CHECK(dot.find("\"0\" -- \"1\";") != std::string::npos);
  CHECK(dot.find("\"1\" -- \"2\";") != std::string::npos);
}
