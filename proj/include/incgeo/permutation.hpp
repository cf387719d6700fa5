#ifndef INCGEO_PERMUTATION_HPP
#define INCGEO_PERMUTATION_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "incgeo/errors.hpp"

namespace incgeo {

using Perm = std::vector<int>;

inline bool is_permutation_of_range(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

inline Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// (a*b)(x) = a(b(x))
inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

inline bool is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

// +1 for even, -1 for odd (cycle decomposition)
inline int parity(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  int transpositions = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = static_cast<int>(i); !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return (transpositions % 2 == 0) ? 1 : -1;
}

}  // namespace incgeo

#endif  // INCGEO_PERMUTATION_HPP
