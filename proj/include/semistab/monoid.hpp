#pragma once

#include "semistab/abelian_group.hpp"
#include "semistab/diophantine.hpp"
#include "semistab/rational_cone.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

namespace semistab {

/// Fine monoid presented by generators inside a finitely generated abelian
/// group. Integral by construction; sharpness is decided at construction by
/// exact rational feasibility and the strictly positive grading is cached.
class AffineMonoid {
 public:
  AffineMonoid() = default;

  AffineMonoid(FgAbelianGroup ambient, std::vector<GroupElement> generators)
      : ambient_(std::move(ambient)) {
    gens_.reserve(generators.size());
    for (auto& g : generators) {
      if (static_cast<int>(g.free_part.size()) != ambient_.free_rank ||
          g.torsion_part.size() != ambient_.torsion.size())
        throw DimensionError("generator does not match ambient group");
      if (!g.is_zero()) gens_.push_back(std::move(g));  // zero gens add nothing
    }
    std::vector<std::vector<Int>> frees;
    frees.reserve(gens_.size());
    for (const auto& g : gens_) frees.push_back(g.free_part);
    grading_ = find_positive_grading(frees, ambient_.free_rank);
  }

  static AffineMonoid free_monoid(int n) {
    FgAbelianGroup g{n, {}};
    std::vector<GroupElement> gens;
    for (int i = 0; i < n; ++i) {
      std::vector<Int> e(n, Int(0));
      e[i] = 1;
      gens.push_back(GroupElement{std::move(e), {}});
    }
    return AffineMonoid(g, std::move(gens));
  }

  const FgAbelianGroup& ambient() const { return ambient_; }
  const std::vector<GroupElement>& gens() const { return gens_; }
  int ngens() const { return static_cast<int>(gens_.size()); }
  bool is_trivial_monoid() const { return gens_.empty(); }

  bool sharp() const { return grading_.has_value(); }

  /// Integral functional with value >= 1 on every generator; only for sharp
  /// monoids.
  const std::vector<Int>& grading() const {
    if (!grading_) throw NotSharpError("monoid is not sharp");
    return *grading_;
  }

  Int grading_value(const GroupElement& z) const {
    const auto& c = grading();
    Int v = 0;
    for (int i = 0; i < ambient_.free_rank; ++i) v += c[i] * z.free_part[i];
    return v;
  }

  GroupElement element_of(const ExpVec& exps) const {
    if (exps.size() != gens_.size()) throw DimensionError("exponent length != #generators");
    GroupElement z = zero_element(ambient_);
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (exps[i] != 0) z = semistab::add(ambient_, z, semistab::scale(ambient_, Int(exps[i]), gens_[i]));
    return z;
  }

 private:
  FgAbelianGroup ambient_;
  std::vector<GroupElement> gens_;
  std::optional<std::vector<Int>> grading_;
};

/// Fine monoid presented by generators and congruence relations; element
/// equality is the congruence closure of the listed pairs.
struct PresentedMonoid {
  int ngens = 0;
  std::vector<std::pair<ExpVec, ExpVec>> relations;
};

struct MonoidElement {
  std::variant<GroupElement, ExpVec> value;  // affine | presented representation
};

// ---------------------------------------------------------------------------
// Grothendieck groups

inline FgAbelianGroup grothendieck_group(const AffineMonoid& m) {
  return subgroup_generated(m.ambient(), m.gens());
}

inline IntMatrix relation_difference_matrix(const PresentedMonoid& m) {
  IntMatrix r(m.ngens, static_cast<int>(m.relations.size()));
  for (int j = 0; j < r.cols(); ++j)
    for (int i = 0; i < m.ngens; ++i)
      r(i, j) = Int(m.relations[j].first[i] - m.relations[j].second[i]);
  return r;
}

inline FgAbelianGroup grothendieck_group(const PresentedMonoid& m) {
  return cokernel(relation_difference_matrix(m));
}

// ---------------------------------------------------------------------------
// Membership and expressions

/// Membership of z in the monoid generated by gens, decided exactly by the
/// homogenized Hilbert-basis criterion (no search radius required).
inline std::optional<ExpVec> express_in_monoid(const AffineMonoid& m, const GroupElement& z,
                                               const SearchLimits& limits = default_limits()) {
  AmbientSystem sys = ambient_system(m.ambient(), m.gens());
  auto sol = nonneg_solution(sys.matrix, sys.rhs(m.ambient(), z), limits);
  if (!sol) return std::nullopt;
  sol->resize(m.ngens());
  return sol;
}

inline bool contains(const AffineMonoid& m, const GroupElement& z,
                     const SearchLimits& limits = default_limits()) {
  if (!m.sharp()) throw NotSharpError("contains: monoid must be sharp");
  return express_in_monoid(m, z, limits).has_value();
}

/// All exponent vectors expressing z over the generators. For a sharp monoid
/// every solution is minimal, so this is the complete solution set.
inline std::vector<ExpVec> all_expressions(const AffineMonoid& m, const GroupElement& z,
                                           const SearchLimits& limits = default_limits()) {
  AmbientSystem sys = ambient_system(m.ambient(), m.gens());
  auto sols = minimal_nonneg_solutions(sys.matrix, sys.rhs(m.ambient(), z), limits);
  for (auto& s : sols) s.resize(m.ngens());
  std::sort(sols.begin(), sols.end(), deg_lex_less);
  sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
  return sols;
}

// ---------------------------------------------------------------------------
// Sharpness

inline bool is_sharp(const AffineMonoid& m) { return m.sharp(); }

// ---------------------------------------------------------------------------
// Irreducible elements and the decomposition degree

/// deg(x) = largest n with x a sum of n nonzero elements; 0 iff x = 0.
inline std::int64_t decomposition_degree(const AffineMonoid& m, const GroupElement& z,
                                         const SearchLimits& limits = default_limits()) {
  if (!m.sharp()) throw NotSharpError("decomposition_degree: monoid must be sharp");
  if (z.is_zero()) return 0;
  std::int64_t best = -1;
  for (const auto& e : all_expressions(m, z, limits)) best = std::max(best, deg(e));
  if (best < 0) throw ElementNotInMonoidError("decomposition_degree: element not in monoid");
  return best;
}

namespace detail {
struct ElementOrder {
  const AffineMonoid* m;
  bool operator()(const GroupElement& a, const GroupElement& b) const {
    auto da = decomposition_degree(*m, a);
    auto db = decomposition_degree(*m, b);
    if (da != db) return da < db;
    return a < b;
  }
};
}  // namespace detail

/// The finite set of irreducible elements, in (deg, lex) order. Generates
/// the monoid whenever it is fine and sharp.
inline std::vector<GroupElement> irreducibles(const AffineMonoid& m,
                                              const SearchLimits& limits = default_limits()) {
  if (!m.sharp()) throw NotSharpError("irreducibles: monoid must be sharp");
  std::vector<GroupElement> distinct;
  for (const auto& g : m.gens())
    if (std::find(distinct.begin(), distinct.end(), g) == distinct.end()) distinct.push_back(g);

  std::vector<GroupElement> irr;
  for (const auto& g : distinct) {
    bool reducible = false;
    for (const auto& x : all_expressions(m, g, limits))
      if (deg(x) >= 2) {
        reducible = true;
        break;
      }
    if (!reducible) irr.push_back(g);
  }
  std::sort(irr.begin(), irr.end(), detail::ElementOrder{&m});
  return irr;
}

// ---------------------------------------------------------------------------
// Saturation test

/// Is every z in the Grothendieck group with n z in M already in M?
/// Decided by scanning the lattice points of the generator cone inside the
/// fundamental box (irreducible saturation elements live there) plus the
/// torsion elements of the group.
inline bool is_saturated(const AffineMonoid& m, const SearchLimits& limits = default_limits()) {
  if (!m.sharp()) throw NotSharpError("is_saturated: monoid must be sharp");
  if (m.is_trivial_monoid()) return true;
  const auto& amb = m.ambient();
  const int d = amb.free_rank;
  const int k = static_cast<int>(amb.torsion.size());

  std::vector<std::vector<Int>> frees;
  for (const auto& g : m.gens()) frees.push_back(g.free_part);

  std::vector<Int> box(d, Int(0));
  for (int j = 0; j < d; ++j)
    for (const auto& f : frees) box[j] += abs_int(f[j]);

  Int cells = 1;
  for (int j = 0; j < d; ++j) cells *= 2 * box[j] + 1;
  for (const auto& t : amb.torsion) cells *= t;
  if (cells > Int(limits.max_nodes))
    throw ResourceLimitError("is_saturated: candidate box too large");

  std::vector<Int> zf(d, Int(0));
  std::vector<Int> zt(k, Int(0));
  auto torsion_scan = [&](auto&& self, int idx) -> bool {
    if (idx == k) {
      GroupElement z{zf, zt};
      if (z.is_zero()) return true;
      if (!express_over(amb, m.gens(), z)) return true;       // not in the group
      if (express_in_monoid(m, z, limits)) return true;       // already a member
      return false;                                           // saturation witness
    }
    for (Int t = 0; t < amb.torsion[idx]; ++t) {
      zt[idx] = t;
      if (!self(self, idx + 1)) return false;
    }
    zt[idx] = 0;
    return true;
  };
  auto free_scan = [&](auto&& self, int j) -> bool {
    if (j == d) {
      if (!in_rational_cone(frees, zf, d)) return true;
      return torsion_scan(torsion_scan, 0);
    }
    for (Int v = -box[j]; v <= box[j]; ++v) {
      zf[j] = v;
      if (!self(self, j + 1)) return false;
    }
    zf[j] = 0;
    return true;
  };
  return free_scan(free_scan, 0);
}

// ---------------------------------------------------------------------------
// Congruence generators

/// A defining relation I . g = J . g with disjoint supports, oriented so the
/// (deg, lex)-larger side comes first.
struct RelationPair {
  ExpVec lhs, rhs;
  bool operator==(const RelationPair& o) const = default;
  bool operator<(const RelationPair& o) const {
    if (lhs != o.lhs) return lhs < o.lhs;
    return rhs < o.rhs;
  }
};

namespace detail {

/// Hilbert basis of { (I, J) : sum I_i v_i = sum J_i v_i in G }, diagonal
/// pairs removed. The lattice congruence of an embedded generator list.
inline std::vector<RelationPair> lattice_congruence(const FgAbelianGroup& g,
                                                    const std::vector<GroupElement>& gens,
                                                    const SearchLimits& limits) {
  const int n = static_cast<int>(gens.size());
  const int d = g.free_rank;
  const int k = static_cast<int>(g.torsion.size());
  // Columns: I (n), J (n), slack+ (k), slack- (k).
  IntMatrix a(d + k, 2 * n + 2 * k);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < d; ++r) {
      a(r, i) = gens[i].free_part[r];
      a(r, n + i) = -gens[i].free_part[r];
    }
    for (int r = 0; r < k; ++r) {
      a(d + r, i) = gens[i].torsion_part[r];
      a(d + r, n + i) = -gens[i].torsion_part[r];
    }
  }
  for (int r = 0; r < k; ++r) {
    a(d + r, 2 * n + r) = -g.torsion[r];
    a(d + r, 2 * n + k + r) = g.torsion[r];
  }

  HilbertBasis hb = hilbert_basis(a, limits);

  // Project away the slacks, then keep componentwise-minimal pairs: the
  // congruence monoid is a full lattice monoid, so minimal = generating.
  std::set<std::pair<ExpVec, ExpVec>> projected;
  for (const auto& e : hb.elements) {
    ExpVec lhs(e.begin(), e.begin() + n);
    ExpVec rhs(e.begin() + n, e.begin() + 2 * n);
    if (deg(lhs) == 0 && deg(rhs) == 0) continue;
    projected.insert({std::move(lhs), std::move(rhs)});
  }
  std::vector<std::pair<ExpVec, ExpVec>> items(projected.begin(), projected.end());
  std::vector<RelationPair> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < items.size() && minimal; ++j) {
      if (i == j) continue;
      if (dominates(items[i].first, items[j].first) &&
          dominates(items[i].second, items[j].second))
        minimal = false;
    }
    if (!minimal) continue;
    if (items[i].first == items[i].second) continue;  // diagonal (e_i, e_i)
    RelationPair p{items[i].first, items[i].second};
    if (deg_lex_less(p.lhs, p.rhs)) std::swap(p.lhs, p.rhs);
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// Generating relations of the congruence I . g = J . g among the monoid's
/// generators, normalized to disjoint supports.
inline std::vector<RelationPair> congruence_generators(const AffineMonoid& m,
                                                       const SearchLimits& limits = default_limits()) {
  if (!m.sharp()) throw NotSharpError("congruence_generators: monoid must be sharp");
  return detail::lattice_congruence(m.ambient(), m.gens(), limits);
}

/// Same, for an arbitrary generator list inside an affine monoid's ambient
/// group (used for relative presentations over a base).
inline std::vector<RelationPair> congruence_generators(const FgAbelianGroup& ambient,
                                                       const std::vector<GroupElement>& gens,
                                                       const SearchLimits& limits = default_limits()) {
  return detail::lattice_congruence(ambient, gens, limits);
}

// ---------------------------------------------------------------------------
// Word problem for presented monoids

enum class WordVerdict { Equal, Distinct, Undecided };

namespace detail {

struct Closure {
  std::set<ExpVec> words;
  bool saturated = true;
};

/// All words reachable from w by rewriting with the relations in either
/// direction, restricted to total degree <= cap.
inline Closure congruence_class(const PresentedMonoid& m, const ExpVec& start, int cap,
                                const SearchLimits& limits) {
  Closure c;
  if (deg(start) > cap) {
    c.saturated = false;
    return c;
  }
  std::vector<ExpVec> frontier{start};
  c.words.insert(start);
  std::uint64_t visited = 0;
  while (!frontier.empty()) {
    std::vector<ExpVec> next;
    for (const auto& w : frontier) {
      if (++visited > limits.max_nodes)
        throw ResourceLimitError("congruence_class: node budget exhausted");
      for (const auto& [lhs, rhs] : m.relations) {
        for (int dir = 0; dir < 2; ++dir) {
          const ExpVec& from = dir == 0 ? lhs : rhs;
          const ExpVec& to = dir == 0 ? rhs : lhs;
          if (!dominates(w, from)) continue;
          ExpVec y = add(sub(w, from), to);
          if (deg(y) > cap) {
            c.saturated = false;
            continue;
          }
          if (c.words.insert(y).second) next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return c;
}

}  // namespace detail

/// Bounded word problem: are two words congruent? Saturation within the
/// degree cap gives a definite answer either way.
inline WordVerdict words_equal(const PresentedMonoid& m, const ExpVec& x, const ExpVec& y,
                               int degree_cap = default_limits().word_degree_cap,
                               const SearchLimits& limits = default_limits()) {
  if (x == y) return WordVerdict::Equal;
  auto cx = detail::congruence_class(m, x, degree_cap, limits);
  if (cx.words.count(y)) return WordVerdict::Equal;
  if (cx.saturated) return WordVerdict::Distinct;
  return WordVerdict::Undecided;
}

/// Sharpness of a presented monoid. Exact when the bounded closures
/// saturate; throws WordProblemUndecided otherwise.
inline bool is_sharp(const PresentedMonoid& m, int degree_cap = default_limits().word_degree_cap,
                     const SearchLimits& limits = default_limits()) {
  auto zero_class = detail::congruence_class(m, ExpVec(m.ngens, 0), degree_cap, limits);

  // Not sharp iff some word ~ 0 contains a generator whose class is not 0:
  // that generator is then a nonzero element with an inverse.
  bool all_decided = zero_class.saturated;
  for (const auto& w : zero_class.words) {
    if (deg(w) == 0) continue;
    for (int i : supp(w)) {
      auto ci = detail::congruence_class(m, unit_vec(m.ngens, i), degree_cap, limits);
      bool zero_in = ci.words.count(ExpVec(m.ngens, 0)) > 0;
      if (!zero_in && ci.saturated) return false;
      if (!zero_in && !ci.saturated) all_decided = false;
      // zero_in: the generator itself collapses to 0; harmless.
    }
  }
  if (!all_decided) throw WordProblemUndecided("is_sharp: degree cap exhausted");
  return true;
}

// ---------------------------------------------------------------------------
// Conversion presented -> affine (succeeds exactly for integral monoids)

struct AffineConversion {
  AffineMonoid monoid;                 // image inside the Grothendieck group
  std::vector<GroupElement> gen_images;  // one per presented generator
};

/// Embed a presented monoid into its Grothendieck group. Valid exactly when
/// the monoid is integral: every lattice congruence among the images must
/// already hold in the presented congruence, which is checked pair by pair.
inline std::optional<AffineConversion> presented_to_affine(
    const PresentedMonoid& m, int degree_cap = default_limits().word_degree_cap,
    const SearchLimits& limits = default_limits()) {
  CokernelPresentation pres = cokernel_presentation(relation_difference_matrix(m));
  std::vector<GroupElement> images;
  images.reserve(m.ngens);
  for (int i = 0; i < m.ngens; ++i) {
    std::vector<Int> e(m.ngens, Int(0));
    e[i] = 1;
    images.push_back(pres.project(e));
  }
  auto lattice_rels = detail::lattice_congruence(pres.group, images, limits);
  for (const auto& rel : lattice_rels) {
    WordVerdict v = words_equal(m, rel.lhs, rel.rhs, degree_cap, limits);
    if (v == WordVerdict::Distinct) return std::nullopt;  // not integral
    if (v == WordVerdict::Undecided)
      throw WordProblemUndecided("presented_to_affine: congruence check undecided");
  }
  AffineConversion conv;
  conv.monoid = AffineMonoid(pres.group, images);
  conv.gen_images = std::move(images);
  return conv;
}

// ---------------------------------------------------------------------------
// Pushout

/// Pushout U x_{(a,b)} V: generators of U and V side by side, relations of
/// both, and one gluing relation identifying a with b.
inline PresentedMonoid pushout_presented(int ngens_u,
                                         const std::vector<RelationPair>& rels_u,
                                         const ExpVec& expr_a, int ngens_v,
                                         const std::vector<RelationPair>& rels_v,
                                         const ExpVec& expr_b) {
  PresentedMonoid p;
  p.ngens = ngens_u + ngens_v;
  auto widen_left = [&](const ExpVec& e) {
    ExpVec w(p.ngens, 0);
    std::copy(e.begin(), e.end(), w.begin());
    return w;
  };
  auto widen_right = [&](const ExpVec& e) {
    ExpVec w(p.ngens, 0);
    std::copy(e.begin(), e.end(), w.begin() + ngens_u);
    return w;
  };
  for (const auto& r : rels_u) p.relations.push_back({widen_left(r.lhs), widen_left(r.rhs)});
  for (const auto& r : rels_v) p.relations.push_back({widen_right(r.lhs), widen_right(r.rhs)});
  p.relations.push_back({widen_left(expr_a), widen_right(expr_b)});
  return p;
}

inline PresentedMonoid pushout(const AffineMonoid& u, const AffineMonoid& v,
                               const GroupElement& a, const GroupElement& b,
                               const SearchLimits& limits = default_limits()) {
  auto ea = express_in_monoid(u, a, limits);
  if (!ea) throw ElementNotInMonoidError("pushout: a not in U");
  auto eb = express_in_monoid(v, b, limits);
  if (!eb) throw ElementNotInMonoidError("pushout: b not in V");
  return pushout_presented(u.ngens(), detail::lattice_congruence(u.ambient(), u.gens(), limits),
                           *ea, v.ngens(),
                           detail::lattice_congruence(v.ambient(), v.gens(), limits), *eb);
}

}  // namespace semistab
