#include "semistab/abelian_group.hpp"
#include "semistab/smith.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace semistab;

namespace {

IntMatrix random_matrix(oracle::Rng& rng, int max_dim, std::int64_t max_entry) {
  int r = static_cast<int>(rng.range(1, max_dim));
  int c = static_cast<int>(rng.range(1, max_dim));
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = Int(rng.range(-max_entry, max_entry));
  return m;
}

void check_snf(const IntMatrix& m) {
  SnfResult snf = smith_normal_form(m);
  REQUIRE(snf.u * m * snf.v == snf.d);
  REQUIRE(abs_int(determinant(snf.u)) == 1);
  REQUIRE(abs_int(determinant(snf.v)) == 1);
  const int k = std::min(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) {
    REQUIRE(snf.d(i, i) >= 0);
    for (int j = 0; j < k; ++j)
      if (i != j) REQUIRE(snf.d(i, j) == 0);
  }
  for (int i = 0; i + 1 < k; ++i) {
    if (snf.d(i, i) == 0) {
      REQUIRE(snf.d(i + 1, i + 1) == 0);
    } else {
      REQUIRE(snf.d(i + 1, i + 1) % snf.d(i, i) == 0);
    }
  }
  // Cross-check the diagonal against determinantal divisors (independent
  // minor-expansion path): d_1 ... d_k = gcd of k x k minors.
  Int prod = 1;
  for (int i = 0; i < k; ++i) {
    prod *= snf.d(i, i);
    REQUIRE(prod == oracle::determinantal_divisor(m, i + 1));
  }
}

}  // namespace

TEST_CASE("smith normal form on the spec examples") {
  check_snf(IntMatrix::identity(2));
  {
    SnfResult snf = smith_normal_form(IntMatrix::identity(2));
    REQUIRE(snf.d == IntMatrix::identity(2));
  }
  {
    IntMatrix m{{Int(2), Int(0)}, {Int(0), Int(3)}};
    SnfResult snf = smith_normal_form(m);
    check_snf(m);
    REQUIRE(snf.d(0, 0) == 1);
    REQUIRE(snf.d(1, 1) == 6);
  }
  {
    IntMatrix m(1, 2);
    m(0, 0) = 1;
    m(0, 1) = 1;
    SnfResult snf = smith_normal_form(m);
    check_snf(m);
    REQUIRE(snf.d(0, 0) == 1);
    REQUIRE(snf.d(0, 1) == 0);
  }
}

TEST_CASE("smith normal form on random matrices") {
  oracle::Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) check_snf(random_matrix(rng, 6, 10));
}

TEST_CASE("cokernel basics") {
  {
    IntMatrix m(2, 1);
    m(0, 0) = 1;
    m(1, 0) = 1;
    FgAbelianGroup g = cokernel(m);
    REQUIRE(g.free_rank == 1);
    REQUIRE(g.torsion.empty());
  }
  {
    IntMatrix m(1, 1);
    m(0, 0) = 2;
    FgAbelianGroup g = cokernel(m);
    REQUIRE(g.free_rank == 0);
    REQUIRE(g.torsion == std::vector<Int>{Int(2)});
  }
  {
    IntMatrix m{{Int(2), Int(0)}, {Int(0), Int(2)}};
    FgAbelianGroup g = cokernel(m);
    REQUIRE(g.free_rank == 0);
    REQUIRE(g.torsion == std::vector<Int>{Int(2), Int(2)});
    auto count = oracle::brute_coset_count(m, 100);
    REQUIRE(count.has_value());
    REQUIRE(*count == 4);
    REQUIRE(Int(*count) == g.torsion_order());
  }
}

TEST_CASE("cokernel torsion order matches coset enumeration") {
  oracle::Rng rng(7);
  int checked = 0;
  while (checked < 40) {
    int n = static_cast<int>(rng.range(1, 3));
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Int(rng.range(-4, 4));
    if (determinant(m) == 0) continue;  // keep the quotient finite
    FgAbelianGroup g = cokernel(m);
    REQUIRE(g.free_rank == 0);
    auto count = oracle::brute_coset_count(m, 10000);
    REQUIRE(count.has_value());
    REQUIRE(g.torsion_order() == Int(*count));
    ++checked;
  }
}

TEST_CASE("solve_integer") {
  {
    IntMatrix a(1, 1);
    a(0, 0) = 2;
    auto sol = solve_integer(a, {Int(4)});
    REQUIRE(sol.has_value());
    REQUIRE(sol->particular == std::vector<Int>{Int(2)});
    REQUIRE(sol->kernel_basis.empty());
  }
  {
    IntMatrix a(1, 1);
    a(0, 0) = 2;
    REQUIRE_FALSE(solve_integer(a, {Int(3)}).has_value());
  }
  {
    IntMatrix a(1, 2);
    a(0, 0) = 1;
    a(0, 1) = 1;
    auto sol = solve_integer(a, {Int(0)});
    REQUIRE(sol.has_value());
    REQUIRE(sol->particular == std::vector<Int>(2, Int(0)));
    REQUIRE(sol->kernel_basis.size() == 1);
    const auto& kb = sol->kernel_basis[0];
    REQUIRE((kb == std::vector<Int>{Int(1), Int(-1)} || kb == std::vector<Int>{Int(-1), Int(1)}));
  }
}

TEST_CASE("solve_integer random consistency") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a = random_matrix(rng, 4, 5);
    std::vector<Int> x(a.cols());
    for (auto& v : x) v = Int(rng.range(-3, 3));
    std::vector<Int> b(a.rows(), Int(0));
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) b[i] += a(i, j) * x[j];
    auto sol = solve_integer(a, b);
    REQUIRE(sol.has_value());
    REQUIRE(a.apply(sol->particular) == b);
    for (const auto& kv : sol->kernel_basis)
      REQUIRE(a.apply(kv) == std::vector<Int>(a.rows(), Int(0)));
  }
}

TEST_CASE("group element arithmetic reduces torsion residues") {
  FgAbelianGroup g{1, {Int(2), Int(4)}};
  GroupElement a = make_element(g, {Int(3)}, {Int(1), Int(3)});
  GroupElement b = make_element(g, {Int(-1)}, {Int(1), Int(2)});
  GroupElement s = add(g, a, b);
  REQUIRE(s.free_part == std::vector<Int>{Int(2)});
  REQUIRE(s.torsion_part == std::vector<Int>{Int(0), Int(1)});
  GroupElement n = negate(g, a);
  REQUIRE(add(g, a, n).is_zero());
}
