#pragma once

#include "semistab/int_matrix.hpp"

#include <optional>
#include <utility>

namespace semistab {

/// u * m * v == d with u, v unimodular and d diagonal, d1 | d2 | ..., di >= 0.
struct SnfResult {
  IntMatrix u, d, v;
};

namespace detail {

// Pivot of minimal absolute value in the trailing block; keeps intermediate
// entries small, which is the classic failure mode of naive SNF.
inline std::optional<std::pair<int, int>> min_abs_pivot(const IntMatrix& m, int t) {
  std::optional<std::pair<int, int>> best;
  Int best_abs = 0;
  for (int i = t; i < m.rows(); ++i)
    for (int j = t; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      Int a = abs_int(m(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  return best;
}

// Nearest-integer quotient, so remainders satisfy |r| <= |b|/2.
inline Int round_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  Int hb = abs_int(b);
  if (2 * abs_int(r) > hb) q += (r < 0) == (b < 0) ? 1 : -1;
  return q;
}

inline void diagonalize(IntMatrix& d, IntMatrix& u, IntMatrix& v) {
  const int k = std::min(d.rows(), d.cols());
  for (int t = 0; t < k; ++t) {
    for (;;) {
      auto piv = min_abs_pivot(d, t);
      if (!piv) return;  // trailing block all zero
      d.swap_rows(t, piv->first);
      u.swap_rows(t, piv->first);
      d.swap_cols(t, piv->second);
      v.swap_cols(t, piv->second);

      bool clean = true;
      for (int i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Int q = round_div(d(i, t), d(t, t));
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Int q = round_div(d(t, j), d(t, t));
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (clean) break;  // smaller remainders feed the next pivot pass
    }
  }
}

// Replace the diagonal pair (a, b) at positions (t, s) by (gcd, lcm) via the
// 2x2 unimodular identity
//   [s a+t b=g]   [a 0]   [1  -tb/g]   [g    0  ]
//   [-b/g  a/g] * [0 b] * [1  sa/g ] = [0  ab/g ].
inline void gcd_lcm_fix(IntMatrix& d, IntMatrix& u, IntMatrix& v, int t, int s) {
  const Int a = d(t, t), b = d(s, s);
  Int sig, tau;
  Int g = gcd_ext(a, b, sig, tau);
  const Int bg = b / g, ag = a / g;

  for (int j = 0; j < u.cols(); ++j) {
    Int rt = sig * u(t, j) + tau * u(s, j);
    Int rs = -bg * u(t, j) + ag * u(s, j);
    u(t, j) = rt;
    u(s, j) = rs;
  }
  for (int i = 0; i < v.rows(); ++i) {
    Int ct = v(i, t) + v(i, s);
    Int cs = -tau * bg * v(i, t) + sig * ag * v(i, s);
    v(i, t) = ct;
    v(i, s) = cs;
  }
  d(t, t) = g;
  d(s, s) = a * bg;
}

}  // namespace detail

inline SnfResult smith_normal_form(const IntMatrix& m) {
  SnfResult r{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  auto& d = r.d;
  auto& u = r.u;
  auto& v = r.v;

  detail::diagonalize(d, u, v);

  const int k = std::min(d.rows(), d.cols());
  for (int t = 0; t < k; ++t)
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }

  // Divisibility chain by bubble passes; each fix strictly shrinks d(t,t).
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (int t = 0; t + 1 < k; ++t)
      for (int s = t + 1; s < k; ++s) {
        if (d(t, t) == 0 && d(s, s) != 0) {
          d.swap_rows(t, s);
          u.swap_rows(t, s);
          d.swap_cols(t, s);
          v.swap_cols(t, s);
          dirty = true;
        } else if (d(t, t) != 0 && d(s, s) % d(t, t) != 0) {
          detail::gcd_lcm_fix(d, u, v, t, s);
          dirty = true;
        }
      }
  }
  return r;
}

inline int snf_rank(const IntMatrix& d) {
  int r = 0;
  const int k = std::min(d.rows(), d.cols());
  for (int t = 0; t < k; ++t)
    if (d(t, t) != 0) ++r;
  return r;
}

/// One integer solution of A x = b plus a lattice basis of ker(A), or
/// nullopt when no integer solution exists.
struct IntegerSolution {
  std::vector<Int> particular;
  std::vector<std::vector<Int>> kernel_basis;  // basis of ker(A) in Z^cols
};

inline std::optional<IntegerSolution> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw DimensionError("solve_integer: rhs length");
  SnfResult snf = smith_normal_form(a);
  const int rank = snf_rank(snf.d);
  std::vector<Int> c = snf.u.apply(b);
  std::vector<Int> y(a.cols(), Int(0));
  for (int i = 0; i < a.rows(); ++i) {
    if (i < rank && i < a.cols()) {
      if (c[i] % snf.d(i, i) != 0) return std::nullopt;
      y[i] = c[i] / snf.d(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  IntegerSolution sol;
  sol.particular = snf.v.apply(y);
  for (int j = rank; j < a.cols(); ++j) sol.kernel_basis.push_back(snf.v.col(j));
  return sol;
}

}  // namespace semistab
