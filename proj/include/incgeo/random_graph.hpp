#ifndef INCGEO_RANDOM_GRAPH_HPP
#define INCGEO_RANDOM_GRAPH_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "incgeo/graph.hpp"

namespace incgeo {

// Hand-rolled draws so the corpus is bit-identical across standard libraries.
inline uint64_t rng_below(std::mt19937_64& rng, uint64_t bound) { return rng() % bound; }

inline double rng_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

struct RandomGraphSpec {
  int min_vertices = 4;
  int max_vertices = 10;
  int min_types = 2;
  int max_types = 4;
  double min_density = 0.35;
  double max_density = 0.65;
};

// Proper colored graph with surjective types; edges drawn independently
// among differently-typed pairs.
inline ColoredGraph random_proper_graph(std::mt19937_64& rng, const RandomGraphSpec& spec) {
  const int n = spec.min_vertices +
                static_cast<int>(rng_below(rng, spec.max_vertices - spec.min_vertices + 1));
  const int tmax = std::min(spec.max_types, n);
  const int tmin = std::min(spec.min_types, tmax);
  const int k = tmin + static_cast<int>(rng_below(rng, tmax - tmin + 1));
  const double density =
      spec.min_density + (spec.max_density - spec.min_density) * rng_unit(rng);

  std::vector<int> type_of(n);
  for (int v = 0; v < k; ++v) type_of[v] = v;
  for (int v = k; v < n; ++v) type_of[v] = static_cast<int>(rng_below(rng, k));

  std::vector<std::string> types;
  for (int t = 0; t < k; ++t) types.push_back(std::to_string(t));
  GraphBuilder b(types);
  for (int v = 0; v < n; ++v) b.add_vertex(vid::raw(v), type_of[v]);
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (type_of[v] != type_of[w] && rng_unit(rng) < density) b.add_edge(vid::raw(v), vid::raw(w));
  return b.build();
}

}  // namespace incgeo

#endif  // INCGEO_RANDOM_GRAPH_HPP
