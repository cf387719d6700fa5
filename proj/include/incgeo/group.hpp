#ifndef INCGEO_GROUP_HPP
#define INCGEO_GROUP_HPP

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "incgeo/errors.hpp"
#include "incgeo/permutation.hpp"

namespace incgeo {

inline constexpr int kMaxGroupOrder = 5040;
inline constexpr int kAssociativityCheckLimit = 256;

// Finite group as a Cayley table: table[a][b] = a*b, row index = left factor.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;
  int identity = 0;
  std::vector<int> inverse;

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverse[a]; }

  int element_order(int a) const {
    int x = a, n = 1;
    while (x != identity) {
      x = mul(x, a);
      ++n;
    }
    return n;
  }
};

inline FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table) {
  const int g = static_cast<int>(table.size());
  if (g == 0) fail(ErrorCode::NotAGroup, "empty table");
  if (g > kMaxGroupOrder)
    fail(ErrorCode::NotAGroup, "order " + std::to_string(g) + " exceeds cap " +
                                   std::to_string(kMaxGroupOrder));
  for (int a = 0; a < g; ++a) {
    if (static_cast<int>(table[a].size()) != g)
      fail(ErrorCode::NotAGroup, "row " + std::to_string(a) + " is not length " + std::to_string(g));
    for (int b = 0; b < g; ++b)
      if (table[a][b] < 0 || table[a][b] >= g)
        fail(ErrorCode::NotAGroup, "entry out of range at (" + std::to_string(a) + "," +
                                       std::to_string(b) + ")");
  }
  // Latin square
  for (int a = 0; a < g; ++a) {
    std::vector<char> row(g, 0), col(g, 0);
    for (int b = 0; b < g; ++b) {
      if (row[table[a][b]]++)
        fail(ErrorCode::NotAGroup, "row " + std::to_string(a) + " repeats element " +
                                       std::to_string(table[a][b]));
      if (col[table[b][a]]++)
        fail(ErrorCode::NotAGroup, "column " + std::to_string(a) + " repeats element " +
                                       std::to_string(table[b][a]));
    }
  }
  // identity
  int identity = -1;
  for (int e = 0; e < g && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < g && ok; ++a)
      ok = table[e][a] == a && table[a][e] == a;
    if (ok) identity = e;
  }
  if (identity < 0) fail(ErrorCode::NotAGroup, "no two-sided identity");
  // associativity, exhaustive for small orders
  if (g <= kAssociativityCheckLimit) {
    for (int a = 0; a < g; ++a)
      for (int b = 0; b < g; ++b)
        for (int c = 0; c < g; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            fail(ErrorCode::NotAGroup, "non-associative triple (" + std::to_string(a) + "," +
                                           std::to_string(b) + "," + std::to_string(c) + ")");
  }
  FiniteGroup grp;
  grp.order = g;
  grp.table = table;
  grp.identity = identity;
  grp.inverse.assign(g, -1);
  for (int a = 0; a < g; ++a) {
    for (int b = 0; b < g; ++b)
      if (table[a][b] == identity) {
        grp.inverse[a] = b;
        break;
      }
    if (grp.inverse[a] < 0) fail(ErrorCode::NotAGroup, "element " + std::to_string(a) + " has no inverse");
  }
  return grp;
}

inline FiniteGroup cyclic_group(int n) {
  if (n < 1 || n > kMaxGroupOrder) fail(ErrorCode::UnsupportedSpec, "cyclic order out of bounds");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return from_cayley_table(t);
}

// Order 2n; element j*n+i stands for r^i s^j with s r s = r^-1.
inline FiniteGroup dihedral_group(int order) {
  if (order < 2 || order % 2 != 0 || order > kMaxGroupOrder)
    fail(ErrorCode::UnsupportedSpec, "dihedral order must be even and in bounds");
  const int n = order / 2;
  auto idx = [n](int i, int j) { return j * n + i; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          // (r^i s^j)(r^k s^l) = r^(i + k or i - k) s^(j xor l)
          int rot = j == 0 ? (i + k) % n : ((i - k) % n + n) % n;
          t[idx(i, j)][idx(k, l)] = idx(rot, j ^ l);
        }
  return from_cayley_table(t);
}

namespace detail {

inline std::vector<Perm> all_perms_sorted(int n) {
  Perm p = identity_perm(n);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline FiniteGroup group_from_perms(const std::vector<Perm>& elems) {
  std::map<Perm, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  const int g = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(g, std::vector<int>(g));
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b) {
      auto it = index.find(compose(elems[a], elems[b]));
      if (it == index.end()) fail(ErrorCode::NotAGroup, "permutation set not closed");
      t[a][b] = it->second;
    }
  return from_cayley_table(t);
}

}  // namespace detail

// Elements are the permutations of {0..n-1} in lexicographic one-line order.
inline FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 7) fail(ErrorCode::UnsupportedSpec, "sym parameter out of supported bounds");
  return detail::group_from_perms(detail::all_perms_sorted(n));
}

inline FiniteGroup alternating_group(int n) {
  if (n < 1 || n > 8) fail(ErrorCode::UnsupportedSpec, "alt parameter out of supported bounds");
  std::vector<Perm> evens;
  for (const Perm& p : detail::all_perms_sorted(n))
    if (parity(p) == 1) evens.push_back(p);
  if (static_cast<int>(evens.size()) > kMaxGroupOrder)
    fail(ErrorCode::UnsupportedSpec, "alt order exceeds cap");
  return detail::group_from_perms(evens);
}

// In symmetric_group(n)'s indexing: membership mask of the even permutations.
inline std::vector<char> alternating_members(int n) {
  std::vector<char> members;
  for (const Perm& p : detail::all_perms_sorted(n))
    members.push_back(parity(p) == 1 ? 1 : 0);
  return members;
}

inline FiniteGroup quaternion_group() {
  // 0:1  1:-1  2:i  3:-i  4:j  5:-j  6:k  7:-k
  auto enc = [](int sign, int basis) { return basis == 0 ? (sign > 0 ? 0 : 1) : 2 * basis + (sign > 0 ? 0 : 1); };
  auto dec_sign = [](int x) { return x % 2 == 0 ? 1 : -1; };
  auto dec_basis = [](int x) { return x / 2; };
  // basis products: b1*b2 -> (sign, basis) over {1,i,j,k}
  static const int prod_basis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int prod_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int s = dec_sign(a) * dec_sign(b) * prod_sign[dec_basis(a)][dec_basis(b)];
      t[a][b] = enc(s, prod_basis[dec_basis(a)][dec_basis(b)]);
    }
  return from_cayley_table(t);
}

// Index (a,b) -> a*|B| + b.
inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  long long g = static_cast<long long>(A.order) * B.order;
  if (g > kMaxGroupOrder) fail(ErrorCode::UnsupportedSpec, "product order exceeds cap");
  const int n = static_cast<int>(g);
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a1 = 0; a1 < A.order; ++a1)
    for (int b1 = 0; b1 < B.order; ++b1)
      for (int a2 = 0; a2 < A.order; ++a2)
        for (int b2 = 0; b2 < B.order; ++b2)
          t[a1 * B.order + b1][a2 * B.order + b2] = A.mul(a1, a2) * B.order + B.mul(b1, b2);
  return from_cayley_table(t);
}

// Text format: first line g, then g rows of g space-separated 0-based indices.
inline FiniteGroup read_cayley_table(std::istream& in) {
  int g = 0;
  if (!(in >> g) || g <= 0) fail(ErrorCode::ParseError, "expected positive group order");
  if (g > kMaxGroupOrder) fail(ErrorCode::ParseError, "order exceeds cap");
  std::vector<std::vector<int>> t(g, std::vector<int>(g));
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b)
      if (!(in >> t[a][b])) fail(ErrorCode::ParseError, "truncated table");
  return from_cayley_table(t);
}

inline FiniteGroup read_cayley_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  return read_cayley_table(in);
}

namespace detail {

inline FiniteGroup parse_group_spec(const std::string& spec);

inline bool try_parse_group_spec(const std::string& spec, FiniteGroup& out) {
  try {
    out = parse_group_spec(spec);
    return true;
  } catch (const Error&) {
    return false;
  }
}

inline FiniteGroup parse_group_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) fail(ErrorCode::UnsupportedSpec, "malformed group spec '" + spec + "'");
  const std::string family = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  auto parse_int = [&](const std::string& s) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != s.size()) fail(ErrorCode::UnsupportedSpec, "bad integer '" + s + "'");
    return v;
  };
  if (family == "cyclic") return cyclic_group(parse_int(rest));
  if (family == "dihedral") return dihedral_group(parse_int(rest));
  if (family == "sym") return symmetric_group(parse_int(rest));
  if (family == "alt") return alternating_group(parse_int(rest));
  if (family == "quaternion") {
    if (parse_int(rest) != 8) fail(ErrorCode::UnsupportedSpec, "quaternion supports order 8 only");
    return quaternion_group();
  }
  if (family == "table") return read_cayley_table_file(rest);
  if (family == "product") {
    // split at the first 'x' that yields two parseable specs
    for (size_t i = 1; i + 1 < rest.size(); ++i) {
      if (rest[i] != 'x') continue;
      FiniteGroup left;
      if (!try_parse_group_spec(rest.substr(0, i), left)) continue;
      FiniteGroup right = parse_group_spec(rest.substr(i + 1));
      return direct_product(left, right);
    }
    fail(ErrorCode::UnsupportedSpec, "cannot split product spec '" + rest + "'");
  }
  fail(ErrorCode::UnsupportedSpec, "unknown family '" + family + "'");
}

}  // namespace detail

// Mini-language: cyclic:N, dihedral:N, sym:N, alt:N, quaternion:8,
// product:<spec>x<spec>, table:<path>.
inline FiniteGroup named_group(const std::string& spec) { return detail::parse_group_spec(spec); }

// Closure of gens under products; contains the identity even for empty gens.
inline std::vector<char> subgroup_from_generators(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<char> members(G.order, 0);
  members[G.identity] = 1;
  std::vector<int> work{G.identity};
  for (int x : gens) {
    if (x < 0 || x >= G.order) fail(ErrorCode::OutOfRange, "generator index " + std::to_string(x));
    if (!members[x]) {
      members[x] = 1;
      work.push_back(x);
    }
  }
  for (size_t i = 0; i < work.size(); ++i)
    for (size_t j = 0; j < work.size(); ++j) {
      int p = G.mul(work[i], work[j]);
      if (!members[p]) {
        members[p] = 1;
        work.push_back(p);
      }
    }
  return members;
}

// Subgroup spec mini-language: gens:i1,i2,... | all | trivial.
inline std::vector<char> parse_subgroup_spec(const FiniteGroup& G, const std::string& spec) {
  if (spec == "all") return std::vector<char>(G.order, 1);
  if (spec == "trivial") return subgroup_from_generators(G, {});
  const std::string prefix = "gens:";
  if (spec.rfind(prefix, 0) != 0)
    fail(ErrorCode::UnsupportedSpec, "malformed subgroup spec '" + spec + "'");
  std::vector<int> gens;
  std::stringstream ss(spec.substr(prefix.size()));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      gens.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      fail(ErrorCode::UnsupportedSpec, "bad generator index '" + tok + "'");
    }
  }
  return subgroup_from_generators(G, gens);
}

// A group with a verified normal subgroup and the element listing used by the
// realizer: identity first, then one representative per coset (smallest element
// index), then the remaining elements coset by coset.
struct GroupPair {
  FiniteGroup group;
  std::vector<char> members;    // marks H
  int index = 0;                // [G:H]
  std::vector<int> ordering;    // position -> element
  std::vector<int> position;    // element -> position
  std::vector<int> coset_of;    // element -> coset id in {0..index-1}
  int subgroup_order = 0;

  bool in_subgroup(int element) const { return members[element] != 0; }
};

inline GroupPair make_pair_checked(const FiniteGroup& G, const std::vector<char>& members) {
  if (static_cast<int>(members.size()) != G.order)
    fail(ErrorCode::NotSubgroup, "member mask has wrong length");
  if (!members[G.identity]) fail(ErrorCode::NotSubgroup, "identity not in subgroup");
  std::vector<int> elems;
  for (int x = 0; x < G.order; ++x)
    if (members[x]) elems.push_back(x);
  for (int a : elems) {
    if (!members[G.inv(a)])
      fail(ErrorCode::NotSubgroup, "inverse of " + std::to_string(a) + " not in subgroup");
    for (int b : elems)
      if (!members[G.mul(a, b)])
        fail(ErrorCode::NotSubgroup,
             "product " + std::to_string(a) + "*" + std::to_string(b) + " leaves subgroup");
  }
  for (int a = 0; a < G.order; ++a)
    for (int h : elems) {
      int conj = G.mul(G.mul(a, h), G.inv(a));
      if (!members[conj])
        fail(ErrorCode::NotNormal, std::to_string(a) + "*" + std::to_string(h) + "*" +
                                       std::to_string(a) + "^-1 = " + std::to_string(conj) +
                                       " is outside the subgroup");
    }

  GroupPair pair;
  pair.group = G;
  pair.members = members;
  pair.subgroup_order = static_cast<int>(elems.size());
  pair.index = G.order / pair.subgroup_order;

  // left cosets aH keyed by smallest member; identity's coset comes first
  std::vector<int> coset_key(G.order, -1);
  for (int a = 0; a < G.order; ++a) {
    if (coset_key[a] >= 0) continue;
    int key = a;
    std::vector<int> coset;
    for (int h : elems) coset.push_back(G.mul(a, h));
    for (int x : coset) key = std::min(key, x);
    for (int x : coset) coset_key[x] = key;
  }
  std::vector<int> keys;
  for (int a = 0; a < G.order; ++a)
    if (coset_key[a] == a) keys.push_back(a);
  std::sort(keys.begin(), keys.end());
  // identity's coset leads, remaining cosets by smallest element
  const int id_key = coset_key[G.identity];
  std::vector<int> coset_order{id_key};
  for (int k : keys)
    if (k != id_key) coset_order.push_back(k);

  pair.coset_of.assign(G.order, -1);
  for (int a = 0; a < G.order; ++a)
    pair.coset_of[a] =
        static_cast<int>(std::find(coset_order.begin(), coset_order.end(), coset_key[a]) -
                         coset_order.begin());

  std::vector<int> reps;
  reps.push_back(G.identity);
  for (size_t c = 1; c < coset_order.size(); ++c) reps.push_back(coset_order[c]);

  pair.ordering = reps;
  for (size_t c = 0; c < coset_order.size(); ++c)
    for (int a = 0; a < G.order; ++a)
      if (pair.coset_of[a] == static_cast<int>(c) && a != reps[c]) pair.ordering.push_back(a);

  pair.position.assign(G.order, -1);
  for (int i = 0; i < G.order; ++i) pair.position[pair.ordering[i]] = i;
  return pair;
}

inline GroupPair whole_group_pair(const FiniteGroup& G) {
  return make_pair_checked(G, std::vector<char>(G.order, 1));
}

}  // namespace incgeo

#endif  // INCGEO_GROUP_HPP
