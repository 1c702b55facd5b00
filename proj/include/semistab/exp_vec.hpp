#pragma once

#include "semistab/ints.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace semistab {

/// Exponent vector in N^n. Entries are nonnegative; arithmetic that would
/// go negative is a caller bug and is asserted away in debug builds.
using ExpVec = std::vector<std::int64_t>;

inline std::vector<int> supp(const ExpVec& v) {
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] > 0) s.push_back(i);
  return s;
}

inline std::int64_t deg(const ExpVec& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

// gcm(I): the nonnegative generator of the subgroup of Z spanned by the
// entries; 0 exactly for the zero vector.
inline std::int64_t gcm(const ExpVec& v) {
  std::int64_t g = 0;
  for (auto e : v) g = gcd_i64(g, e);
  return g;
}

inline bool dominates(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

inline bool supports_disjoint(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

inline ExpVec add(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// a - b; caller guarantees a >= b componentwise.
inline ExpVec sub(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline ExpVec scale(const ExpVec& a, std::int64_t k) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

inline ExpVec unit_vec(std::size_t n, std::size_t i) {
  ExpVec e(n, 0);
  e[i] = 1;
  return e;
}

/// Order by (deg, lex): the canonical order used for certificates.
inline bool deg_lex_less(const ExpVec& a, const ExpVec& b) {
  auto da = deg(a), db = deg(b);
  if (da != db) return da < db;
  return a < b;
}

struct ExpStats {
  std::vector<int> support;
  std::int64_t degree = 0;
  std::int64_t gcm = 0;
};

inline ExpStats exp_stats(const ExpVec& v) {
  return ExpStats{supp(v), deg(v), semistab::gcm(v)};
}

}  // namespace semistab
