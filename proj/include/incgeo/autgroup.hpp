#ifndef INCGEO_AUTGROUP_HPP
#define INCGEO_AUTGROUP_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "incgeo/graph.hpp"
#include "incgeo/group.hpp"
#include "incgeo/group_iso.hpp"
#include "incgeo/permutation.hpp"

namespace incgeo {

// Vertex permutation together with the type permutation it induces.
struct ColorblindAutomorphism {
  std::vector<int> vertex_images;
  std::vector<int> type_images;  // sigma_f
};

struct AutGroupResult {
  std::vector<ColorblindAutomorphism> generators;
  long long order = 1;
  std::vector<ColorblindAutomorphism> elements;  // full list when small enough
  bool elements_complete = false;
};

struct EngineOptions {
  long long node_budget = 100'000'000;
  long long element_limit = 10'000;
};

// sigma_f of a vertex permutation, or Incoherent if types are not mapped
// class-to-class.
inline std::vector<int> induced_type_permutation(const ColoredGraph& g,
                                                 const std::vector<int>& vertex_images) {
  std::vector<int> sigma(g.rank(), -1), seen(g.rank(), -1);
  for (int v = 0; v < g.n(); ++v) {
    const int a = g.type_of(v), b = g.type_of(vertex_images[v]);
    if (sigma[a] == -1) {
      if (seen[b] != -1 && seen[b] != a)
        fail(ErrorCode::Incoherent, "two types land on type " + g.types[b]);
      sigma[a] = b;
      seen[b] = a;
    } else if (sigma[a] != b) {
      fail(ErrorCode::Incoherent, "type " + g.types[a] + " maps to two types");
    }
  }
  for (int t = 0; t < g.rank(); ++t)
    if (sigma[t] == -1) fail(ErrorCode::Incoherent, "type " + g.types[t] + " unmapped");
  return sigma;
}

namespace detail {

class AdjacencyBits {
 public:
  explicit AdjacencyBits(const ColoredGraph& g)
      : n_(g.n()), words_((g.n() + 63) / 64), bits_(static_cast<size_t>(g.n()) * words_, 0) {
    for (int v = 0; v < n_; ++v)
      for (int w : g.adj[v]) bits_[static_cast<size_t>(v) * words_ + w / 64] |= 1ull << (w % 64);
  }
  bool test(int v, int w) const {
    return (bits_[static_cast<size_t>(v) * words_ + w / 64] >> (w % 64)) & 1u;
  }

 private:
  int n_;
  size_t words_;
  std::vector<uint64_t> bits_;
};

// 1-dimensional Weisfeiler-Leman to a fixed point, from a given seed
// coloring. Class ids are assigned in sorted signature order, so the result
// is canonical for the input graph.
inline std::vector<int> refine_classes(const ColoredGraph& g, std::vector<int> color) {
  int classes = 1 + *std::max_element(color.begin(), color.end());
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(g.n());
    for (int v = 0; v < g.n(); ++v) {
      std::vector<int> s;
      s.reserve(g.adj[v].size() + 1);
      s.push_back(color[v]);
      for (int w : g.adj[v]) s.push_back(color[w]);
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::pair<std::vector<int>, int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(g.n());
    int id = -1;
    for (size_t k = 0; k < sorted.size(); ++k) {
      if (k == 0 || sorted[k].first != sorted[k - 1].first) ++id;
      next[sorted[k].second] = id;
    }
    if (id + 1 == classes) return next;
    classes = id + 1;
    color = std::move(next);
  }
}

// Seed invariant for the colorblind search: a type may only map to a type of
// the same class size and degree multiset, so vertices seed-color by that
// signature of their own type.
inline std::vector<int> colorblind_seed(const ColoredGraph& g) {
  std::vector<std::vector<int>> type_degrees(g.rank());
  for (int v = 0; v < g.n(); ++v) type_degrees[g.type_of(v)].push_back(g.degree(v));
  for (auto& d : type_degrees) std::sort(d.begin(), d.end());
  std::vector<std::vector<int>> sorted = type_degrees;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> seed(g.n());
  for (int v = 0; v < g.n(); ++v)
    seed[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(),
                                                type_degrees[g.type_of(v)]) -
                               sorted.begin());
  return seed;
}

class AutSearch {
 public:
  AutSearch(const ColoredGraph& g, bool colorblind, const EngineOptions& opts)
      : g_(g), colorblind_(colorblind), opts_(opts), bits_(g), nodes_left_(opts.node_budget) {
    const int n = g_.n();
    std::vector<int> seed(n);
    if (colorblind_) {
      seed = colorblind_seed(g_);
    } else {
      for (int v = 0; v < n; ++v) seed[v] = g_.type_of(v);
    }
    cls_ = refine_classes(g_, std::move(seed));
    class_members_.assign(1 + *std::max_element(cls_.begin(), cls_.end()), {});
    for (int v = 0; v < n; ++v) class_members_[cls_[v]].push_back(v);

    build_order();

    img_.assign(n, -1);
    pre_.assign(n, -1);
    src_mapped_nbrs_.assign(n, 0);
    tgt_mapped_nbrs_.assign(n, 0);
    sigma_.assign(g_.rank(), -1);
    sigma_inv_.assign(g_.rank(), -1);
    sigma_uses_.assign(g_.rank(), 0);
  }

  AutGroupResult run() {
    AutGroupResult result;
    const int n = g_.n();
    for (int i = 0; i < n; ++i)
      if (!assign(order_[i], order_[i])) fail(ErrorCode::AuditFailure, "identity map rejected");

    for (int i = n - 1; i >= 0; --i) {
      const int v = order_[i];
      unassign(v, v);
      const std::vector<int>& candidates = class_members_[cls_[v]];
      if (candidates.size() > 1) {
        std::vector<char> orbit(n, 0);
        close_orbit(v, result.generators, orbit);
        for (int u : candidates) {
          if (orbit[u] || pre_[u] >= 0) continue;
          if (search_from(i, u)) {
            ColorblindAutomorphism a;
            a.vertex_images = img_;
            a.type_images = induced_type_permutation(g_, a.vertex_images);
            // unwind the found map back to the level's prefix
            for (int k = n - 1; k >= i; --k) unassign(order_[k], a.vertex_images[order_[k]]);
            result.generators.push_back(std::move(a));
            close_orbit(v, result.generators, orbit);
          }
        }
        long long orbit_size = 0;
        for (char c : orbit) orbit_size += c;
        if (result.order > (1ll << 62) / std::max(orbit_size, 1ll))
          fail(ErrorCode::ResourceLimit, "group order overflows the accumulator");
        result.order *= orbit_size;
      }
    }
    enumerate_elements(result);
    return result;
  }

 private:
  void build_order() {
    const int n = g_.n();
    order_.reserve(n);
    std::vector<int> picked(n, 0), link_count(n, 0);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (picked[v]) continue;
        if (best == -1) {
          best = v;
          continue;
        }
        const auto key = [&](int x) {
          return std::make_tuple(-link_count[x], static_cast<int>(class_members_[cls_[x]].size()),
                                 x);
        };
        if (key(v) < key(best)) best = v;
      }
      picked[best] = 1;
      order_.push_back(best);
      for (int w : g_.adj[best]) ++link_count[w];
    }
  }

  bool assign(int v, int u) {
    if (--nodes_left_ < 0) fail(ErrorCode::ResourceLimit, "search node budget exhausted");
    if (cls_[v] != cls_[u] || pre_[u] >= 0) return false;
    if (src_mapped_nbrs_[v] != tgt_mapped_nbrs_[u]) return false;
    const int tv = g_.type_of(v), tu = g_.type_of(u);
    if (colorblind_) {
      if (sigma_[tv] == -1) {
        if (sigma_inv_[tu] != -1) return false;
      } else if (sigma_[tv] != tu) {
        return false;
      }
    } else if (tv != tu) {
      return false;
    }
    for (int w : g_.adj[v])
      if (img_[w] >= 0 && !bits_.test(u, img_[w])) return false;

    img_[v] = u;
    pre_[u] = v;
    for (int w : g_.adj[v]) ++src_mapped_nbrs_[w];
    for (int z : g_.adj[u]) ++tgt_mapped_nbrs_[z];
    if (colorblind_) {
      if (sigma_[tv] == -1) {
        sigma_[tv] = tu;
        sigma_inv_[tu] = tv;
      }
      ++sigma_uses_[tv];
    }
    return true;
  }

  void unassign(int v, int u) {
    img_[v] = -1;
    pre_[u] = -1;
    for (int w : g_.adj[v]) --src_mapped_nbrs_[w];
    for (int z : g_.adj[u]) --tgt_mapped_nbrs_[z];
    if (colorblind_) {
      const int tv = g_.type_of(v);
      if (--sigma_uses_[tv] == 0) {
        sigma_inv_[sigma_[tv]] = -1;
        sigma_[tv] = -1;
      }
    }
  }

  // Complete the partial map from position pos on; position pos gets forced
  // image u. Leaves the assignments in place when it succeeds.
  bool search_from(int pos, int u) {
    const int v = order_[pos];
    if (!assign(v, u)) return false;
    if (pos + 1 == g_.n()) return true;
    const int next = order_[pos + 1];
    for (int cand : class_members_[cls_[next]]) {
      if (pre_[cand] >= 0) continue;
      if (search_from(pos + 1, cand)) return true;
    }
    unassign(v, u);
    return false;
  }

  void close_orbit(int v, const std::vector<ColorblindAutomorphism>& gens,
                   std::vector<char>& orbit) {
    std::vector<int> queue;
    if (!orbit[v]) {
      orbit[v] = 1;
      queue.push_back(v);
    } else {
      for (int x = 0; x < g_.n(); ++x)
        if (orbit[x]) queue.push_back(x);
    }
    for (size_t k = 0; k < queue.size(); ++k)
      for (const ColorblindAutomorphism& a : gens) {
        const int y = a.vertex_images[queue[k]];
        if (!orbit[y]) {
          orbit[y] = 1;
          queue.push_back(y);
        }
      }
  }

  void enumerate_elements(AutGroupResult& result) {
    if (result.order > opts_.element_limit) return;
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue{identity_perm(g_.n())};
    seen.insert(queue[0]);
    for (size_t k = 0; k < queue.size(); ++k)
      for (const ColorblindAutomorphism& a : result.generators) {
        std::vector<int> next = compose(a.vertex_images, queue[k]);
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    if (static_cast<long long>(seen.size()) != result.order)
      fail(ErrorCode::AuditFailure, "element enumeration disagrees with orbit-stabilizer order");
    for (const std::vector<int>& images : seen) {
      ColorblindAutomorphism a;
      a.vertex_images = images;
      a.type_images = induced_type_permutation(g_, images);
      result.elements.push_back(std::move(a));
    }
    result.elements_complete = true;
  }

  const ColoredGraph& g_;
  bool colorblind_;
  EngineOptions opts_;
  AdjacencyBits bits_;
  long long nodes_left_;
  std::vector<int> cls_;
  std::vector<std::vector<int>> class_members_;
  std::vector<int> order_;
  std::vector<int> img_, pre_;
  std::vector<int> src_mapped_nbrs_, tgt_mapped_nbrs_;
  std::vector<int> sigma_, sigma_inv_, sigma_uses_;
};

}  // namespace detail

// Full group of type-preserving graph automorphisms.
inline AutGroupResult color_automorphisms(const ColoredGraph& g, const EngineOptions& opts = {}) {
  return detail::AutSearch(g, false, opts).run();
}

// Full group of colorblind automorphisms (correlations).
inline AutGroupResult colorblind_automorphisms(const ColoredGraph& g,
                                               const EngineOptions& opts = {}) {
  return detail::AutSearch(g, true, opts).run();
}

struct VerifyOptions {
  EngineOptions engine;
  long long pair_cap = 48;  // largest correlation group fed to pair_isomorphic
};

struct PairVerdict {
  long long cb_order = 0;
  long long c_order = 0;
  bool pair_match = false;
  std::optional<ElementPermutation> witness;
  std::vector<std::vector<int>> sigma_orbits;  // type orbits under the sigmas
};

namespace detail {

inline std::vector<std::vector<int>> sigma_orbits_of(const ColoredGraph& g,
                                                     const std::vector<ColorblindAutomorphism>& gens) {
  std::vector<int> root(g.rank());
  for (int t = 0; t < g.rank(); ++t) root[t] = t;
  std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
  for (const ColorblindAutomorphism& a : gens)
    for (int t = 0; t < g.rank(); ++t) {
      int ra = find(t), rb = find(a.type_images[t]);
      if (ra != rb) root[ra] = rb;
    }
  std::map<int, std::vector<int>> groups;
  for (int t = 0; t < g.rank(); ++t) groups[find(t)].push_back(t);
  std::vector<std::vector<int>> out;
  for (auto& [_, members] : groups) out.push_back(members);
  return out;
}

// Abstract pair (Aut_cb, Aut_c) from the fully enumerated correlation group.
inline GroupPair abstract_pair(const ColoredGraph& g, const AutGroupResult& cb) {
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < cb.elements.size(); ++i) index[cb.elements[i].vertex_images] = static_cast<int>(i);
  const int n = static_cast<int>(cb.elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find(compose(cb.elements[a].vertex_images, cb.elements[b].vertex_images));
      if (it == index.end()) fail(ErrorCode::AuditFailure, "automorphism set not closed");
      table[a][b] = it->second;
    }
  std::vector<char> members;
  for (const ColorblindAutomorphism& a : cb.elements)
    members.push_back(is_identity(a.type_images) ? 1 : 0);
  return make_pair_checked(from_cayley_table(table), members);
}

}  // namespace detail

// Computes both automorphism groups of the graph and decides whether they
// form a pair isomorphic to the expected one.
inline PairVerdict verify_pair(const ColoredGraph& g, const GroupPair& expected,
                               const VerifyOptions& opts = {}) {
  EngineOptions engine = opts.engine;
  engine.element_limit = std::max(engine.element_limit, opts.pair_cap);
  AutGroupResult cb = colorblind_automorphisms(g, engine);
  AutGroupResult c = color_automorphisms(g, engine);

  PairVerdict verdict;
  verdict.cb_order = cb.order;
  verdict.c_order = c.order;
  verdict.sigma_orbits = detail::sigma_orbits_of(g, cb.generators);
  if (cb.order % c.order != 0)
    fail(ErrorCode::AuditFailure, "color group order does not divide colorblind order");
  for (const ColorblindAutomorphism& a : c.generators)
    if (!is_identity(a.type_images))
      fail(ErrorCode::AuditFailure, "type-preserving generator with non-trivial sigma");

  if (cb.order > opts.pair_cap)
    fail(ErrorCode::GroupTooLarge, "correlation group order " + std::to_string(cb.order) +
                                       " exceeds pair cap " + std::to_string(opts.pair_cap));
  if (!cb.elements_complete)
    fail(ErrorCode::GroupTooLarge, "correlation group elements unavailable for pair check");

  GroupPair realized = detail::abstract_pair(g, cb);
  if (realized.subgroup_order != c.order)
    fail(ErrorCode::AuditFailure, "sigma kernel size disagrees with the color group order");
  auto witness = pair_isomorphic(realized, expected);
  verdict.pair_match = witness.has_value();
  verdict.witness = witness;
  return verdict;
}

// The abstract pair of a graph with no expectation attached.
inline GroupPair realized_pair(const ColoredGraph& g, const VerifyOptions& opts = {}) {
  EngineOptions engine = opts.engine;
  engine.element_limit = std::max(engine.element_limit, opts.pair_cap);
  AutGroupResult cb = colorblind_automorphisms(g, engine);
  if (cb.order > opts.pair_cap || !cb.elements_complete)
    fail(ErrorCode::GroupTooLarge, "correlation group order " + std::to_string(cb.order) +
                                       " exceeds pair cap " + std::to_string(opts.pair_cap));
  return detail::abstract_pair(g, cb);
}

}  // namespace incgeo

#endif  // INCGEO_AUTGROUP_HPP
