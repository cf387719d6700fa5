#ifndef INCGEO_VERTEX_ID_HPP
#define INCGEO_VERTEX_ID_HPP

#include <cctype>
#include <string>
#include <vector>

namespace incgeo {

// Structured vertex identity, carried as its rendered text. The factories
// below are the only producers, so equal text means equal identity; builders
// reject duplicates.
struct VertexId {
  std::string text;

  bool operator==(const VertexId& o) const { return text == o.text; }
  bool operator!=(const VertexId& o) const { return text != o.text; }
};

// Order with embedded integers compared numerically, so P(2) < P(10).
inline bool natural_less(const std::string& a, const std::string& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      size_t si = i, sj = j;
      while (si < i2 - 1 && a[si] == '0') ++si;
      while (sj < j2 - 1 && b[sj] == '0') ++sj;
      const size_t la = i2 - si, lb = j2 - sj;
      if (la != lb) return la < lb;
      for (size_t k = 0; k < la; ++k)
        if (a[si + k] != b[sj + k]) return a[si + k] < b[sj + k];
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if (i == a.size() && j == b.size()) return a < b;  // zero-padding tie-break
  return i == a.size();
}

inline bool operator<(const VertexId& x, const VertexId& y) { return natural_less(x.text, y.text); }

namespace vid {

inline VertexId p(int i) { return {"P(" + std::to_string(i) + ")"}; }

inline VertexId t(int i, int j) {
  return {"T(" + std::to_string(i) + "," + std::to_string(j) + ")"};
}

inline VertexId s(int i, int j, int l) {
  return {"S(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) + ")"};
}

inline VertexId chamber(const VertexId& a, const VertexId& b, int type_index) {
  const std::string& lo = natural_less(a.text, b.text) ? a.text : b.text;
  const std::string& hi = natural_less(a.text, b.text) ? b.text : a.text;
  return {"ch(" + lo + "|" + hi + ";" + std::to_string(type_index) + ")"};
}

inline VertexId gadget_on_edge(const VertexId& a, const VertexId& b, int j) {
  const std::string& lo = natural_less(a.text, b.text) ? a.text : b.text;
  const std::string& hi = natural_less(a.text, b.text) ? b.text : a.text;
  return {"u(" + lo + "|" + hi + ";" + std::to_string(j) + ")"};
}

inline VertexId gadget_on_vertex(const VertexId& w, int j) {
  return {"u(" + w.text + ";" + std::to_string(j) + ")"};
}

inline VertexId point(int a) { return {"pt(" + std::to_string(a) + ")"}; }

inline std::string chain_text(const std::vector<int>& chain) {
  std::string s;
  for (size_t k = 0; k < chain.size(); ++k) {
    if (k) s += '.';
    s += std::to_string(chain[k]);
  }
  return s;
}

inline VertexId pair(const std::vector<int>& chain, int x, int y) {
  const int lo = x < y ? x : y, hi = x < y ? y : x;
  return {"pr(" + chain_text(chain) + ";" + std::to_string(lo) + "," + std::to_string(hi) + ")"};
}

inline VertexId base2(const std::vector<int>& chain, int x, int y, int slot) {
  const int lo = x < y ? x : y, hi = x < y ? y : x;
  return {"b(" + chain_text(chain) + ";" + std::to_string(lo) + "," + std::to_string(hi) + ";" +
          std::to_string(slot) + ")"};
}

inline VertexId raw(long long n) { return {std::to_string(n)}; }

inline VertexId named(std::string s) { return {std::move(s)}; }

}  // namespace vid

}  // namespace incgeo

#endif  // INCGEO_VERTEX_ID_HPP
