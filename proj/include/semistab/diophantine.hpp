#pragma once

#include "semistab/errors.hpp"
#include "semistab/exp_vec.hpp"
#include "semistab/int_matrix.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace semistab {

struct DiophantineSystem {
  IntMatrix a;
  std::vector<Int> b;  // zero vector for homogeneous systems
};

/// Minimal generating set of { x in N^cols : A x = 0 }. Elements pairwise
/// incomparable under the componentwise order.
struct HilbertBasis {
  std::vector<ExpVec> elements;
};

namespace detail {

inline std::vector<Int> residual(const IntMatrix& a, const ExpVec& x) {
  std::vector<Int> r(a.rows(), Int(0));
  for (int j = 0; j < a.cols(); ++j) {
    if (x[j] == 0) continue;
    for (int i = 0; i < a.rows(); ++i) r[i] += a(i, j) * x[j];
  }
  return r;
}

inline bool is_zero_vec(const std::vector<Int>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace detail

/// Contejean-Devie completion: breadth-first frontier over N^cols, extending
/// x by e_j only when <A x, A e_j> < 0, pruning anything dominating a known
/// solution. Exact and complete for homogeneous systems.
inline HilbertBasis hilbert_basis(const IntMatrix& a,
                                  const SearchLimits& limits = default_limits()) {
  const int n = a.cols();
  std::vector<std::vector<Int>> col_val(n);
  for (int j = 0; j < n; ++j) col_val[j] = a.col(j);

  std::vector<ExpVec> basis;
  auto dominated = [&](const ExpVec& x) {
    for (const auto& s : basis)
      if (dominates(x, s)) return true;
    return false;
  };

  struct Node {
    ExpVec x;
    std::vector<Int> ax;
  };
  std::vector<Node> frontier;
  for (int j = 0; j < n; ++j) frontier.push_back(Node{unit_vec(n, j), col_val[j]});

  std::uint64_t visited = 0;
  while (!frontier.empty()) {
    // Solutions first, so same-level domination prunes immediately.
    for (const auto& node : frontier)
      if (detail::is_zero_vec(node.ax) && !dominated(node.x)) basis.push_back(node.x);

    std::set<ExpVec> next_set;
    for (const auto& node : frontier) {
      if (detail::is_zero_vec(node.ax)) continue;
      if (++visited > limits.max_nodes)
        throw ResourceLimitError("hilbert_basis: node budget exhausted");
      for (int j = 0; j < n; ++j) {
        Int dot = 0;
        for (int i = 0; i < a.rows(); ++i) dot += node.ax[i] * col_val[j][i];
        if (dot >= 0) continue;
        ExpVec y = node.x;
        ++y[j];
        if (!dominated(y)) next_set.insert(std::move(y));
      }
    }
    frontier.clear();
    for (const auto& x : next_set) {
      if (dominated(x)) continue;
      Node node{x, detail::residual(a, x)};
      frontier.push_back(std::move(node));
    }
  }

  // The completion can emit comparable solutions across levels; keep minima.
  std::vector<ExpVec> minimal;
  for (const auto& x : basis) {
    bool keep = true;
    for (const auto& y : basis)
      if (y != x && dominates(x, y)) {
        keep = false;
        break;
      }
    if (keep) minimal.push_back(x);
  }
  std::sort(minimal.begin(), minimal.end(), deg_lex_less);
  minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
  return HilbertBasis{std::move(minimal)};
}

/// Minimal solutions of A x = b over N with <grading, x> <= bound. Complete
/// whenever the bound covers the certified search radius; an empty result
/// means nothing was found within the bound.
inline std::vector<ExpVec> nonneg_solve(const IntMatrix& a, const std::vector<Int>& b,
                                        std::int64_t bound,
                                        const std::vector<std::int64_t>& grading = {},
                                        const SearchLimits& limits = default_limits()) {
  if (static_cast<int>(b.size()) != a.rows()) throw DimensionError("nonneg_solve: rhs length");
  if (bound < 0) throw DimensionError("nonneg_solve: negative bound");
  const int n = a.cols();
  std::vector<std::int64_t> w = grading.empty() ? std::vector<std::int64_t>(n, 1) : grading;
  if (static_cast<int>(w.size()) != n) throw DimensionError("nonneg_solve: grading length");

  std::vector<ExpVec> found;
  auto dominated = [&](const ExpVec& x) {
    for (const auto& s : found)
      if (dominates(x, s)) return true;
    return false;
  };

  // Plain DFS in lex order with the grading cap; desk-scale systems only.
  ExpVec x(n, 0);
  std::uint64_t visited = 0;
  auto rec = [&](auto&& self, int j, std::int64_t used) -> void {
    if (++visited > limits.max_nodes) throw ResourceLimitError("nonneg_solve: node budget");
    if (j == n) {
      if (detail::residual(a, x) == b && !dominated(x)) found.push_back(x);
      return;
    }
    std::int64_t room = w[j] > 0 ? (bound - used) / w[j] : bound;
    for (std::int64_t v = 0; v <= room; ++v) {
      x[j] = v;
      self(self, j + 1, used + v * w[j]);
    }
    x[j] = 0;
  };
  rec(rec, 0, 0);

  std::vector<ExpVec> minimal;
  for (const auto& s : found) {
    bool keep = true;
    for (const auto& t : found)
      if (t != s && dominates(s, t)) {
        keep = false;
        break;
      }
    if (keep) minimal.push_back(s);
  }
  std::sort(minimal.begin(), minimal.end(), deg_lex_less);
  return minimal;
}

/// Exact solvability of A x = b over N via homogenization: solve
/// [A | -b] (x, z) = 0 and look for a basis element with z = 1. Needs no
/// search radius and is complete for arbitrary systems.
inline std::optional<ExpVec> nonneg_solution(const IntMatrix& a, const std::vector<Int>& b,
                                             const SearchLimits& limits = default_limits()) {
  if (static_cast<int>(b.size()) != a.rows()) throw DimensionError("nonneg_solution: rhs length");
  IntMatrix h(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) h(i, j) = a(i, j);
    h(i, a.cols()) = -b[i];
  }
  HilbertBasis basis = hilbert_basis(h, limits);
  for (const auto& e : basis.elements)
    if (e.back() == 1) {
      ExpVec x(e.begin(), e.end() - 1);
      return x;
    }
  return std::nullopt;
}

/// All minimal solutions of A x = b over N (z = 1 slice of the homogenized
/// Hilbert basis).
inline std::vector<ExpVec> minimal_nonneg_solutions(const IntMatrix& a, const std::vector<Int>& b,
                                                    const SearchLimits& limits = default_limits()) {
  IntMatrix h(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) h(i, j) = a(i, j);
    h(i, a.cols()) = -b[i];
  }
  HilbertBasis basis = hilbert_basis(h, limits);
  std::vector<ExpVec> out;
  for (const auto& e : basis.elements)
    if (e.back() == 1) out.emplace_back(e.begin(), e.end() - 1);
  std::sort(out.begin(), out.end(), deg_lex_less);
  return out;
}

}  // namespace semistab
