#ifndef INCGEO_CLI_HPP
#define INCGEO_CLI_HPP

#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "incgeo/autgroup.hpp"
#include "incgeo/cayley_realizer.hpp"
#include "incgeo/example_systems.hpp"
#include "incgeo/geometrize.hpp"
#include "incgeo/group.hpp"
#include "incgeo/io.hpp"
#include "incgeo/random_graph.hpp"
#include "incgeo/refine.hpp"

namespace incgeo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitError = 2;

namespace detail {

inline GroupPair pair_from_specs(const std::string& group_spec, const std::string& normal_spec) {
  FiniteGroup G = named_group(group_spec);
  return make_pair_checked(G, parse_subgroup_spec(G, normal_spec));
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

inline void print_stats(const ColoredGraph& g) {
  std::cout << "vertices: " << g.n() << "\n";
  std::cout << "edges: " << g.edge_count << "\n";
  std::cout << "rank: " << g.rank() << "\n";
  std::cout << "type classes:";
  const std::vector<long long> sizes = g.type_class_sizes();
  for (int t = 0; t < g.rank(); ++t) std::cout << " " << g.types[t] << ":" << sizes[t];
  std::cout << "\n";
  std::map<int, int> degree_histogram;
  for (int v = 0; v < g.n(); ++v) ++degree_histogram[g.degree(v)];
  std::cout << "degree histogram:";
  for (const auto& [d, c] : degree_histogram) std::cout << " " << d << "x" << c;
  std::cout << "\n";
  std::cout << "min degree: " << min_degree(g) << "\n";
  std::cout << "max flag rank: " << max_flag_rank(g) << "\n";
  const GeometryReport rep = geometry_report(g);
  std::cout << "geometry: " << (rep.is_geometry ? "yes" : "no") << " (" << rep.chamber_count
            << " chambers";
  if (!rep.deficient.empty()) std::cout << ", " << rep.deficient.size() << " deficient flags";
  std::cout << ")\n";
}

// Human-readable lines, then one machine-readable JSON line. Returns the
// process exit code.
inline int report_verify(const ColoredGraph& g, const GroupPair* expected,
                         const VerifyOptions& opts) {
  nlohmann::ordered_json j;
  int exit_code = kExitOk;
  if (expected) {
    const PairVerdict verdict = verify_pair(g, *expected, opts);
    std::cout << "colorblind order: " << verdict.cb_order << "\n";
    std::cout << "color-preserving order: " << verdict.c_order << "\n";
    std::cout << "pair match: " << (verdict.pair_match ? "yes" : "no") << "\n";
    j["cbOrder"] = verdict.cb_order;
    j["cOrder"] = verdict.c_order;
    j["pairMatch"] = verdict.pair_match;
    j["sigmaOrbits"] = verdict.sigma_orbits;
    if (!verdict.pair_match) exit_code = kExitMismatch;
  } else {
    AutGroupResult cb = colorblind_automorphisms(g, opts.engine);
    AutGroupResult c = color_automorphisms(g, opts.engine);
    std::cout << "colorblind order: " << cb.order << "\n";
    std::cout << "color-preserving order: " << c.order << "\n";
    j["cbOrder"] = cb.order;
    j["cOrder"] = c.order;
    j["pairMatch"] = nullptr;
    j["sigmaOrbits"] = incgeo::detail::sigma_orbits_of(g, cb.generators);
  }
  std::cout << j.dump() << "\n";
  return exit_code;
}

inline ColoredGraph trivial_geometry() {
  GraphBuilder b({"0"});
  b.add_vertex(vid::p(0), 0);
  return b.build();
}

}  // namespace detail

inline int run(const std::vector<std::string>& args) {
  CLI::App app{"incidence geometry realization toolkit"};
  app.require_subcommand(1);

  std::string group_spec, normal_spec, input_path, output_path;
  std::string expect_group, expect_normal, variant = "solid";
  bool with_self_check = false, with_audit = false;
  long long budget = 100'000'000, pair_cap = 48;
  int gamma_param = 3;
  int rand_n = 8, rand_types = 3;
  double rand_density = 0.5;
  uint64_t seed = 0;

  CLI::App* cmd_build = app.add_subcommand("build", "realize a group pair as an incidence system");
  cmd_build->add_option("--group", group_spec, "group spec, e.g. sym:3")->required();
  cmd_build->add_option("--normal", normal_spec, "subgroup spec: gens:i,j | all | trivial")->required();
  cmd_build->add_option("-o,--output", output_path, "output graph JSON")->required();
  cmd_build->add_flag("--self-check", with_self_check, "audit degrees and gadget structure");

  CLI::App* cmd_refine = app.add_subcommand("refine", "enforce degree >= 2 and flag rank <= 2");
  cmd_refine->add_option("-i,--input", input_path)->required();
  cmd_refine->add_option("-o,--output", output_path)->required();
  cmd_refine->add_flag("--audit", with_audit, "verify aux color class sizes");

  CLI::App* cmd_geom = app.add_subcommand("geometrize", "complete every edge to a chamber");
  cmd_geom->add_option("-i,--input", input_path)->required();
  cmd_geom->add_option("-o,--output", output_path)->required();

  CLI::App* cmd_pipe = app.add_subcommand("pipeline", "build, geometrize and verify");
  cmd_pipe->add_option("--group", group_spec)->required();
  cmd_pipe->add_option("--normal", normal_spec)->required();
  cmd_pipe->add_option("-o,--output", output_path, "output geometry JSON")->required();
  cmd_pipe->add_option("--budget", budget, "search node budget");
  cmd_pipe->add_option("--pair-cap", pair_cap, "largest group order compared");

  CLI::App* cmd_verify = app.add_subcommand("verify", "compute automorphism groups of a graph");
  cmd_verify->add_option("-i,--input", input_path)->required();
  cmd_verify->add_option("--expect-group", expect_group);
  cmd_verify->add_option("--expect-normal", expect_normal);
  cmd_verify->add_option("--budget", budget, "search node budget");
  cmd_verify->add_option("--pair-cap", pair_cap, "largest group order compared");

  CLI::App* cmd_check = app.add_subcommand("check-geometry", "test the every-flag-in-a-chamber property");
  cmd_check->add_option("-i,--input", input_path)->required();

  CLI::App* cmd_example = app.add_subcommand("example", "built-in incidence systems");
  CLI::App* cmd_snan = cmd_example->add_subcommand("sn-an", "symmetric/alternating family");
  cmd_snan->add_option("--n", gamma_param, "ground set size (2..7)")->required();
  cmd_snan->add_option("-o,--output", output_path)->required();
  CLI::App* cmd_fig1 = cmd_example->add_subcommand("figure1", "nine- and twelve-vertex fixtures");
  cmd_fig1->add_option("--variant", variant, "solid | completed");
  cmd_fig1->add_option("-o,--output", output_path)->required();
  cmd_example->require_subcommand(1);

  CLI::App* cmd_dot = app.add_subcommand("export-dot", "write a Graphviz rendering");
  cmd_dot->add_option("-i,--input", input_path)->required();
  cmd_dot->add_option("-o,--output", output_path)->required();

  CLI::App* cmd_stats = app.add_subcommand("stats", "summarize a graph file");
  cmd_stats->add_option("-i,--input", input_path)->required();

  CLI::App* cmd_rand = app.add_subcommand("random", "seeded random proper colored graph");
  cmd_rand->add_option("--n", rand_n, "vertex count");
  cmd_rand->add_option("--types", rand_types, "type count");
  cmd_rand->add_option("--density", rand_density, "edge probability");
  cmd_rand->add_option("--seed", seed, "RNG seed");
  cmd_rand->add_option("-o,--output", output_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    if (cmd_build->parsed()) {
      const GroupPair pair = detail::pair_from_specs(group_spec, normal_spec);
      const ColoredGraph g = realize(pair);
      if (with_self_check) {
        self_check(g, pair);
        std::cout << "self-check: ok\n";
      }
      save_graph(g, output_path);
      std::cout << "wrote " << output_path << " (" << g.n() << " vertices, " << g.edge_count
                << " edges, rank " << g.rank() << ")\n";
      return kExitOk;
    }
    if (cmd_refine->parsed()) {
      const ColoredGraph g = load_graph(input_path);
      const ColoredGraph refined = refine(g);
      if (with_audit) {
        const ClassSizeAudit audit = class_size_audit(g, refined);
        std::cout << "audit: owners " << audit.owners << ", M " << audit.max_class << ", aux0 "
                  << audit.even_count << ", aux1 " << audit.odd_count << "\n";
      }
      save_graph(refined, output_path);
      std::cout << "wrote " << output_path << " (" << refined.n() << " vertices, "
                << refined.edge_count << " edges)\n";
      return kExitOk;
    }
    if (cmd_geom->parsed()) {
      const ColoredGraph g = load_graph(input_path);
      const GeometrizeResult result = geometrize(g);
      save_graph(result.graph, output_path);
      std::cout << "wrote " << output_path << " (" << result.graph.n() << " vertices, "
                << result.graph.edge_count << " edges, " << result.chambers.size()
                << " chambers)\n";
      return kExitOk;
    }
    if (cmd_pipe->parsed()) {
      const GroupPair pair = detail::pair_from_specs(group_spec, normal_spec);
      ColoredGraph geometry;
      if (pair.group.order == 1) {
        geometry = detail::trivial_geometry();
      } else {
        geometry = geometrize(realize(pair)).graph;
      }
      save_graph(geometry, output_path);
      std::cout << "wrote " << output_path << " (" << geometry.n() << " vertices)\n";
      const GeometryReport rep = geometry_report(geometry);
      std::cout << "geometry: " << (rep.is_geometry ? "yes" : "no") << " (" << rep.chamber_count
                << " chambers)\n";
      if (!rep.is_geometry) return kExitMismatch;
      VerifyOptions opts;
      opts.engine.node_budget = budget;
      opts.pair_cap = pair_cap;
      return detail::report_verify(geometry, &pair, opts);
    }
    if (cmd_verify->parsed()) {
      const ColoredGraph g = load_graph(input_path);
      VerifyOptions opts;
      opts.engine.node_budget = budget;
      opts.pair_cap = pair_cap;
      if (expect_group.empty() != expect_normal.empty())
        fail(ErrorCode::UnsupportedSpec, "--expect-group and --expect-normal go together");
      if (!expect_group.empty()) {
        const GroupPair pair = detail::pair_from_specs(expect_group, expect_normal);
        return detail::report_verify(g, &pair, opts);
      }
      return detail::report_verify(g, nullptr, opts);
    }
    if (cmd_check->parsed()) {
      const ColoredGraph g = load_graph(input_path);
      const GeometryReport rep = geometry_report(g);
      std::cout << "geometry: " << (rep.is_geometry ? "yes" : "no") << "\n";
      std::cout << "chambers: " << rep.chamber_count << "\n";
      for (const Flag& f : rep.deficient) {
        std::cout << "deficient flag:";
        for (int v : f) std::cout << " " << g.vertices[v].id.text;
        std::cout << "\n";
      }
      return rep.is_geometry ? kExitOk : kExitMismatch;
    }
    if (cmd_snan->parsed()) {
      const GammaN gamma = gamma_n(gamma_param);
      save_graph(gamma.graph, output_path);
      std::cout << "wrote " << output_path << " (" << gamma.graph.n() << " vertices)\n";
      return kExitOk;
    }
    if (cmd_fig1->parsed()) {
      if (variant != "solid" && variant != "completed")
        fail(ErrorCode::UnsupportedSpec, "variant must be solid or completed");
      const ColoredGraph g = variant == "solid" ? figure1_solid() : figure1_completed();
      save_graph(g, output_path);
      std::cout << "wrote " << output_path << " (" << g.n() << " vertices)\n";
      return kExitOk;
    }
    if (cmd_dot->parsed()) {
      detail::write_text(output_path, to_dot(load_graph(input_path)));
      std::cout << "wrote " << output_path << "\n";
      return kExitOk;
    }
    if (cmd_stats->parsed()) {
      detail::print_stats(load_graph(input_path));
      return kExitOk;
    }
    if (cmd_rand->parsed()) {
      std::mt19937_64 rng(seed);
      RandomGraphSpec spec;
      spec.min_vertices = spec.max_vertices = rand_n;
      spec.min_types = spec.max_types = rand_types;
      spec.min_density = spec.max_density = rand_density;
      const ColoredGraph g = random_proper_graph(rng, spec);
      save_graph(g, output_path);
      std::cout << "wrote " << output_path << " (" << g.n() << " vertices, " << g.edge_count
                << " edges)\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace incgeo::cli

#endif  // INCGEO_CLI_HPP
