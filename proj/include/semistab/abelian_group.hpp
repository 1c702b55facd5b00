#pragma once

#include "semistab/smith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semistab {

/// Finitely generated abelian group Z^d + Z/m1 + ... + Z/mk in invariant
/// form: m1 | m2 | ... and every mi >= 2.
struct FgAbelianGroup {
  int free_rank = 0;
  std::vector<Int> torsion;

  bool operator==(const FgAbelianGroup& o) const = default;

  int ambient_dim() const { return free_rank + static_cast<int>(torsion.size()); }

  Int torsion_order() const {
    Int t = 1;
    for (const auto& m : torsion) t *= m;
    return t;
  }

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

  std::string to_string() const {
    std::string s;
    if (free_rank > 0) s += "Z^" + std::to_string(free_rank);
    for (const auto& m : torsion) {
      if (!s.empty()) s += " + ";
      s += "Z/" + m.str();
    }
    return s.empty() ? "0" : s;
  }
};

/// Element of an FgAbelianGroup: free coordinates followed by reduced
/// torsion residues 0 <= r_i < m_i.
struct GroupElement {
  std::vector<Int> free_part;
  std::vector<Int> torsion_part;

  bool operator==(const GroupElement& o) const = default;
  bool operator<(const GroupElement& o) const {
    if (free_part != o.free_part) return free_part < o.free_part;
    return torsion_part < o.torsion_part;
  }

  bool is_zero() const {
    for (const auto& x : free_part)
      if (x != 0) return false;
    for (const auto& x : torsion_part)
      if (x != 0) return false;
    return true;
  }
};

namespace detail {
inline Int mod_reduce(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}
}  // namespace detail

inline GroupElement make_element(const FgAbelianGroup& g, std::vector<Int> free_part,
                                 std::vector<Int> torsion_part) {
  if (static_cast<int>(free_part.size()) != g.free_rank ||
      torsion_part.size() != g.torsion.size())
    throw DimensionError("group element shape mismatch");
  for (std::size_t i = 0; i < torsion_part.size(); ++i)
    torsion_part[i] = detail::mod_reduce(torsion_part[i], g.torsion[i]);
  return GroupElement{std::move(free_part), std::move(torsion_part)};
}

inline GroupElement zero_element(const FgAbelianGroup& g) {
  return GroupElement{std::vector<Int>(g.free_rank, Int(0)),
                      std::vector<Int>(g.torsion.size(), Int(0))};
}

inline GroupElement add(const FgAbelianGroup& g, const GroupElement& a, const GroupElement& b) {
  GroupElement r = a;
  for (int i = 0; i < g.free_rank; ++i) r.free_part[i] += b.free_part[i];
  for (std::size_t i = 0; i < g.torsion.size(); ++i)
    r.torsion_part[i] = detail::mod_reduce(r.torsion_part[i] + b.torsion_part[i], g.torsion[i]);
  return r;
}

inline GroupElement negate(const FgAbelianGroup& g, const GroupElement& a) {
  GroupElement r = a;
  for (int i = 0; i < g.free_rank; ++i) r.free_part[i] = -r.free_part[i];
  for (std::size_t i = 0; i < g.torsion.size(); ++i)
    r.torsion_part[i] = detail::mod_reduce(-r.torsion_part[i], g.torsion[i]);
  return r;
}

inline GroupElement scale(const FgAbelianGroup& g, const Int& k, const GroupElement& a) {
  GroupElement r = a;
  for (int i = 0; i < g.free_rank; ++i) r.free_part[i] *= k;
  for (std::size_t i = 0; i < g.torsion.size(); ++i)
    r.torsion_part[i] = detail::mod_reduce(r.torsion_part[i] * k, g.torsion[i]);
  return r;
}

/// Cokernel of M : Z^cols -> Z^rows (columns are generator images), with the
/// projection Z^rows -> coker kept around so elements can be mapped through.
struct CokernelPresentation {
  FgAbelianGroup group;
  IntMatrix u;                  // row transform of the SNF of M
  std::vector<int> torsion_rows;  // rows of u*z feeding torsion coordinates
  int rank = 0;                 // number of nonzero diagonal entries

  GroupElement project(const std::vector<Int>& z) const {
    std::vector<Int> w = u.apply(z);
    std::vector<Int> free_part(w.begin() + rank, w.end());
    std::vector<Int> tors;
    tors.reserve(torsion_rows.size());
    for (std::size_t i = 0; i < torsion_rows.size(); ++i)
      tors.push_back(detail::mod_reduce(w[torsion_rows[i]], group.torsion[i]));
    return GroupElement{std::move(free_part), std::move(tors)};
  }
};

inline CokernelPresentation cokernel_presentation(const IntMatrix& m) {
  SnfResult snf = smith_normal_form(m);
  CokernelPresentation p;
  p.u = snf.u;
  p.rank = snf_rank(snf.d);
  for (int t = 0; t < p.rank; ++t)
    if (snf.d(t, t) >= 2) {
      p.group.torsion.push_back(snf.d(t, t));
      p.torsion_rows.push_back(t);
    }
  p.group.free_rank = m.rows() - p.rank;
  return p;
}

inline FgAbelianGroup cokernel(const IntMatrix& m) { return cokernel_presentation(m).group; }

/// Stacked-matrix encoding of the map Z^n -> G for a generator list inside
/// an FgAbelianGroup G: free rows exactly, torsion rows with slack columns
/// -m_j so congruences become equalities over Z.
struct AmbientSystem {
  IntMatrix matrix;  // (free + torsion) rows, (n + #torsion) cols
  int nvars = 0;     // leading columns that carry actual variables

  std::vector<Int> rhs(const FgAbelianGroup& g, const GroupElement& z) const {
    std::vector<Int> b(z.free_part);
    for (const auto& t : z.torsion_part) b.push_back(t);
    (void)g;
    return b;
  }
};

inline AmbientSystem ambient_system(const FgAbelianGroup& g,
                                    const std::vector<GroupElement>& gens) {
  const int n = static_cast<int>(gens.size());
  const int k = static_cast<int>(g.torsion.size());
  AmbientSystem sys;
  sys.nvars = n;
  sys.matrix = IntMatrix(g.free_rank + k, n + k);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < g.free_rank; ++i) sys.matrix(i, j) = gens[j].free_part[i];
    for (int i = 0; i < k; ++i) sys.matrix(g.free_rank + i, j) = gens[j].torsion_part[i];
  }
  for (int i = 0; i < k; ++i) sys.matrix(g.free_rank + i, n + i) = -g.torsion[i];
  return sys;
}

/// Lattice ker(Z^n -> G), x |-> sum x_j gens_j, as a basis in Z^n.
inline std::vector<std::vector<Int>> generator_kernel(const FgAbelianGroup& g,
                                                      const std::vector<GroupElement>& gens) {
  AmbientSystem sys = ambient_system(g, gens);
  auto sol = solve_integer(sys.matrix, std::vector<Int>(sys.matrix.rows(), Int(0)));
  std::vector<std::vector<Int>> basis;
  for (auto& v : sol->kernel_basis) {
    v.resize(sys.nvars);
    bool zero = true;
    for (const auto& x : v)
      if (x != 0) {
        zero = false;
        break;
      }
    if (!zero) basis.push_back(std::move(v));
  }
  return basis;
}

/// Does sum x_j gens_j = z admit an integer solution x?
inline std::optional<std::vector<Int>> express_over(const FgAbelianGroup& g,
                                                    const std::vector<GroupElement>& gens,
                                                    const GroupElement& z) {
  AmbientSystem sys = ambient_system(g, gens);
  auto sol = solve_integer(sys.matrix, sys.rhs(g, z));
  if (!sol) return std::nullopt;
  sol->particular.resize(sys.nvars);
  return sol->particular;
}

/// Lift an element to integer coordinates of the presentation
/// Z^(free+k) / (m_j e_j).
inline std::vector<Int> lift_coords(const GroupElement& z) {
  std::vector<Int> v(z.free_part);
  v.insert(v.end(), z.torsion_part.begin(), z.torsion_part.end());
  return v;
}

/// Quotient of G by the subgroup generated by the given elements, with the
/// projection kept. G is presented as Z^(free+k) modulo its torsion
/// relations; the elements join the relation columns.
inline CokernelPresentation quotient_presentation(const FgAbelianGroup& g,
                                                  const std::vector<GroupElement>& by) {
  const int dim = g.ambient_dim();
  const int k = static_cast<int>(g.torsion.size());
  IntMatrix m(dim, k + static_cast<int>(by.size()));
  for (int j = 0; j < k; ++j) m(g.free_rank + j, j) = g.torsion[j];
  for (std::size_t c = 0; c < by.size(); ++c) {
    std::vector<Int> v = lift_coords(by[c]);
    for (int i = 0; i < dim; ++i) m(i, k + static_cast<int>(c)) = v[i];
  }
  return cokernel_presentation(m);
}

/// The subgroup of G generated by gens, in invariant form: Z^n modulo the
/// kernel lattice of the generator map.
inline FgAbelianGroup subgroup_generated(const FgAbelianGroup& g,
                                         const std::vector<GroupElement>& gens) {
  auto basis = generator_kernel(g, gens);
  IntMatrix k(static_cast<int>(gens.size()), static_cast<int>(basis.size()));
  for (int j = 0; j < k.cols(); ++j)
    for (int i = 0; i < k.rows(); ++i) k(i, j) = basis[j][i];
  return cokernel(k);
}

}  // namespace semistab
