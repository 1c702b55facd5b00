#pragma once

// Brute-force oracles for the test suites. Everything here must stay
// independent of the library's algorithmic paths: plain box enumeration,
// rational Gaussian elimination and minor expansion only.

#include "semistab/exp_vec.hpp"
#include "semistab/int_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using semistab::ExpVec;
using semistab::Int;
using semistab::IntMatrix;
using semistab::Rat;

// Deterministic xorshift generator so fixed seeds reproduce bit-identically
// across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    s_ ^= s_ << 13;
    s_ ^= s_ >> 7;
    s_ ^= s_ << 17;
    return s_;
  }
  // uniform in [lo, hi]
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t s_;
};

inline void for_each_box(int n, std::int64_t bound, const std::function<void(const ExpVec&)>& fn) {
  ExpVec x(n, 0);
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      fn(x);
      return;
    }
    for (std::int64_t v = 0; v <= bound; ++v) {
      x[j] = v;
      rec(j + 1);
    }
    x[j] = 0;
  };
  rec(0);
}

inline std::vector<Int> mat_apply(const IntMatrix& a, const ExpVec& x) {
  std::vector<Int> y(a.rows(), Int(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

/// Minimal nonzero solutions of A x = b inside the box [0..bound]^n.
inline std::vector<ExpVec> brute_minimal_solutions(const IntMatrix& a, const std::vector<Int>& b,
                                                   std::int64_t bound) {
  std::vector<ExpVec> sols;
  for_each_box(a.cols(), bound, [&](const ExpVec& x) {
    if (semistab::deg(x) == 0) return;
    if (mat_apply(a, x) == b) sols.push_back(x);
  });
  std::vector<ExpVec> minimal;
  for (const auto& x : sols) {
    bool keep = true;
    for (const auto& y : sols)
      if (y != x && semistab::dominates(x, y)) {
        keep = false;
        break;
      }
    if (keep) minimal.push_back(x);
  }
  std::sort(minimal.begin(), minimal.end(), semistab::deg_lex_less);
  return minimal;
}

/// Is x a sum of elements from the given set (each usable repeatedly)?
inline bool is_nonneg_combination(const std::vector<ExpVec>& basis, const ExpVec& x) {
  if (semistab::deg(x) == 0) return true;
  std::set<ExpVec> seen;
  std::function<bool(const ExpVec&)> rec = [&](const ExpVec& y) -> bool {
    if (semistab::deg(y) == 0) return true;
    if (!seen.insert(y).second) return false;
    for (const auto& bvec : basis) {
      if (semistab::deg(bvec) == 0) continue;
      if (semistab::dominates(y, bvec) && rec(semistab::sub(y, bvec))) return true;
    }
    return false;
  };
  return rec(x);
}

/// gcd of all k x k minors, via explicit minor expansion. The determinantal
/// divisors D_k = d_1 ... d_k give an SNF check on a fully independent path.
inline Int determinantal_divisor(const IntMatrix& m, int k) {
  std::vector<int> rows(k), cols(k);
  Int g = 0;
  std::function<void(int, int)> pick_cols;
  std::function<void(int, int)> pick_rows = [&](int idx, int start) {
    if (idx == k) {
      pick_cols(0, 0);
      return;
    }
    for (int i = start; i <= m.rows() - (k - idx); ++i) {
      rows[idx] = i;
      pick_rows(idx + 1, i + 1);
    }
  };
  pick_cols = [&](int idx, int start) {
    if (idx == k) {
      IntMatrix sub(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
      g = semistab::gcd_int(g, semistab::determinant(sub));
      return;
    }
    for (int j = start; j <= m.cols() - (k - idx); ++j) {
      cols[idx] = j;
      pick_cols(idx + 1, j + 1);
    }
  };
  if (k == 0) return 1;
  if (k > std::min(m.rows(), m.cols())) return 0;
  pick_rows(0, 0);
  return g;
}

/// Solve A c = z over Q by Gaussian elimination; nullopt when inconsistent.
/// Wants full column rank (unique solution) as used by the coset oracle.
inline std::optional<std::vector<Rat>> rational_solve(const IntMatrix& a,
                                                      const std::vector<Int>& z) {
  const int rows = a.rows(), cols = a.cols();
  std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) t[i][j] = Rat(a(i, j));
    t[i][cols] = Rat(z[i]);
  }
  int row = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < cols && row < rows; ++col) {
    int p = -1;
    for (int i = row; i < rows; ++i)
      if (t[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(t[p], t[row]);
    Rat inv = Rat(1) / t[row][col];
    for (int j = col; j <= cols; ++j) t[row][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (int j = col; j <= cols; ++j) t[i][j] -= f * t[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < rows; ++i)
    if (t[i][cols] != 0) return std::nullopt;
  std::vector<Rat> c(cols, Rat(0));
  for (int i = 0; i < row; ++i) c[pivot_col[i]] = t[i][cols];
  return c;
}

inline bool all_integral(const std::vector<Rat>& v) {
  for (const auto& r : v)
    if (boost::multiprecision::denominator(r) != 1) return false;
  return true;
}

/// Number of cosets of the column lattice of M in Z^rows, by breadth-first
/// enumeration with rational lattice-membership tests. Requires M of full
/// column-rank behaviour on its span; cap guards the infinite case.
inline std::optional<std::size_t> brute_coset_count(const IntMatrix& m, std::size_t cap) {
  const int r = m.rows();
  std::vector<std::vector<Int>> reps{std::vector<Int>(r, Int(0))};
  auto in_lattice = [&](const std::vector<Int>& z) {
    auto c = rational_solve(m, z);
    return c && all_integral(*c);
  };
  std::vector<std::vector<Int>> frontier = reps;
  while (!frontier.empty()) {
    std::vector<std::vector<Int>> next;
    for (const auto& z : frontier) {
      for (int i = 0; i < r; ++i)
        for (int s = -1; s <= 1; s += 2) {
          std::vector<Int> w = z;
          w[i] += s;
          bool known = false;
          for (const auto& rep : reps) {
            std::vector<Int> diff(r);
            for (int j = 0; j < r; ++j) diff[j] = w[j] - rep[j];
            if (in_lattice(diff)) {
              known = true;
              break;
            }
          }
          if (!known) {
            reps.push_back(w);
            next.push_back(w);
            if (reps.size() > cap) return std::nullopt;
          }
        }
    }
    frontier = std::move(next);
  }
  return reps.size();
}

}  // namespace oracle
