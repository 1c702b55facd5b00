#pragma once

#include "semistab/errors.hpp"
#include "semistab/ints.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace semistab {
namespace lp {

/// One inequality  sum coeffs[j] x_j >= rhs  over Q.
struct Constraint {
  std::vector<Rat> coeffs;
  Rat rhs;

  bool operator<(const Constraint& o) const {
    if (coeffs != o.coeffs) return coeffs < o.coeffs;
    return rhs < o.rhs;
  }
};

namespace detail {

inline void normalize(Constraint& c) {
  Rat scale = 0;
  for (const auto& a : c.coeffs) {
    Rat m = a < 0 ? Rat(-a) : a;
    if (m > scale) scale = m;
  }
  if (scale == 0) {
    Rat m = c.rhs < 0 ? Rat(-c.rhs) : c.rhs;
    scale = m;
  }
  if (scale == 0) return;
  for (auto& a : c.coeffs) a /= scale;
  c.rhs /= scale;
}

}  // namespace detail

/// Fourier-Motzkin feasibility with witness extraction. Exact over Q;
/// intended for the handful-of-variables systems this library produces.
inline std::optional<std::vector<Rat>> fm_solve(std::vector<Constraint> cons, int nvars,
                                                std::uint64_t max_constraints = 200000) {
  std::vector<std::vector<Constraint>> stages;  // systems before eliminating var k
  for (int k = nvars - 1; k >= 0; --k) {
    stages.push_back(cons);
    std::vector<Constraint> zero;
    std::vector<Constraint> low, up;  // x_k >= ..., x_k <= ...
    for (const auto& c : cons) {
      if (c.coeffs[k] > 0)
        low.push_back(c);
      else if (c.coeffs[k] < 0)
        up.push_back(c);
      else
        zero.push_back(c);
    }
    std::set<Constraint> next(zero.begin(), zero.end());
    for (const auto& l : low)
      for (const auto& u : up) {
        // l: a x_k + ... >= b (a>0);  u: -a' x_k + ... >= b' (a'>0)
        Constraint c;
        c.coeffs.resize(nvars);
        Rat a = l.coeffs[k];
        Rat ap = -u.coeffs[k];
        for (int j = 0; j < nvars; ++j) c.coeffs[j] = l.coeffs[j] * ap + u.coeffs[j] * a;
        c.rhs = l.rhs * ap + u.rhs * a;
        c.coeffs[k] = 0;
        detail::normalize(c);
        bool trivial = c.rhs <= 0;
        for (const auto& x : c.coeffs)
          if (x != 0) trivial = false;
        if (!trivial) next.insert(std::move(c));
        if (next.size() > max_constraints)
          throw ResourceLimitError("fm_solve: constraint blowup");
      }
    cons.assign(next.begin(), next.end());
  }

  // All variables eliminated: every remaining constraint reads 0 >= rhs.
  for (const auto& c : cons)
    if (c.rhs > 0) return std::nullopt;

  std::vector<Rat> x(nvars, Rat(0));
  for (int k = 0; k < nvars; ++k) {
    const auto& sys = stages[stages.size() - 1 - k];
    bool has_low = false, has_up = false;
    Rat lo = 0, hi = 0;
    for (const auto& c : sys) {
      if (c.coeffs[k] == 0) continue;
      Rat v = c.rhs;
      for (int j = 0; j < nvars; ++j)
        if (j != k) v -= c.coeffs[j] * x[j];
      v /= c.coeffs[k];
      if (c.coeffs[k] > 0) {  // x_k >= v
        if (!has_low || v > lo) lo = v;
        has_low = true;
      } else {  // x_k <= v
        if (!has_up || v < hi) hi = v;
        has_up = true;
      }
    }
    if (has_low && has_up)
      x[k] = (lo + hi) / 2;
    else if (has_low)
      x[k] = lo;
    else if (has_up)
      x[k] = hi;
  }
  return x;
}

}  // namespace lp

/// Strictly positive integral grading: c with <c, v_i> >= 1 for every v_i.
/// Exists for the generator set of a sharp affine monoid (Gordan duality);
/// nullopt certifies non-sharpness.
inline std::optional<std::vector<Int>> find_positive_grading(
    const std::vector<std::vector<Int>>& vectors, int dim) {
  std::vector<lp::Constraint> cons;
  for (const auto& v : vectors) {
    lp::Constraint c;
    c.coeffs.reserve(dim);
    bool all_zero = true;
    for (int j = 0; j < dim; ++j) {
      c.coeffs.emplace_back(v[j]);
      if (v[j] != 0) all_zero = false;
    }
    if (all_zero) return std::nullopt;  // zero vector can never grade >= 1
    c.rhs = 1;
    cons.push_back(std::move(c));
  }
  auto sol = lp::fm_solve(std::move(cons), dim);
  if (!sol) return std::nullopt;
  Int lcm = 1;
  for (const auto& r : *sol) {
    Int den = boost::multiprecision::denominator(r);
    lcm = lcm / gcd_int(lcm, den) * den;
  }
  std::vector<Int> c(dim);
  for (int j = 0; j < dim; ++j)
    c[j] = boost::multiprecision::numerator((*sol)[j]) * (lcm / boost::multiprecision::denominator((*sol)[j]));
  return c;
}

/// Is z a nonnegative rational combination of the given vectors?
inline bool in_rational_cone(const std::vector<std::vector<Int>>& gens, const std::vector<Int>& z,
                             int dim) {
  const int n = static_cast<int>(gens.size());
  std::vector<lp::Constraint> cons;
  for (int i = 0; i < n; ++i) {
    lp::Constraint c;
    c.coeffs.assign(n, Rat(0));
    c.coeffs[i] = 1;
    c.rhs = 0;
    cons.push_back(std::move(c));
  }
  for (int row = 0; row < dim; ++row) {
    lp::Constraint ge, le;
    ge.coeffs.reserve(n);
    le.coeffs.reserve(n);
    for (int i = 0; i < n; ++i) {
      ge.coeffs.emplace_back(gens[i][row]);
      le.coeffs.emplace_back(-gens[i][row]);
    }
    ge.rhs = Rat(z[row]);
    le.rhs = Rat(-z[row]);
    cons.push_back(std::move(ge));
    cons.push_back(std::move(le));
  }
  return lp::fm_solve(std::move(cons), n).has_value();
}

}  // namespace semistab
