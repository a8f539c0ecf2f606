#pragma once

// The finite group Aut_Delta M of lattice automorphisms preserving the fan,
// the embedding of the within-class ray permutations into it, and the
// component group Aut X / Aut0 X = Aut_Delta M / (S_1 x ... x S_k).

#include "toric/roots.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace toric {

/// An automorphism A of M (acting on column vectors). Its transpose permutes
/// the rays: A^T v_i = v_{ray_permutation[i]}.
struct LatticeAut {
  IntMatrix matrix;
  int det = 1;
  std::vector<std::size_t> ray_permutation;

  friend bool operator==(const LatticeAut& a, const LatticeAut& b) { return a.matrix == b.matrix; }
  friend bool operator<(const LatticeAut& a, const LatticeAut& b) { return a.matrix < b.matrix; }
};

/// a then-composed-with b as maps of M: x -> a(b(x)).
inline LatticeAut compose(const LatticeAut& a, const LatticeAut& b) {
  LatticeAut c;
  c.matrix = a.matrix * b.matrix;
  c.det = a.det * b.det;
  c.ray_permutation.resize(a.ray_permutation.size());
  // (AB)^T v_i = B^T (A^T v_i)
  for (std::size_t i = 0; i < c.ray_permutation.size(); ++i) c.ray_permutation[i] = b.ray_permutation[a.ray_permutation[i]];
  return c;
}

inline LatticeAut inverse(const LatticeAut& a) {
  LatticeAut c;
  c.matrix = unimodular_inverse(a.matrix);
  c.det = a.det;
  c.ray_permutation.resize(a.ray_permutation.size());
  for (std::size_t i = 0; i < c.ray_permutation.size(); ++i) c.ray_permutation[a.ray_permutation[i]] = i;
  return c;
}

/// Returns the automorphism if A is unimodular, A^T permutes the rays and the
/// induced permutation maps maximal cones onto maximal cones.
inline std::optional<LatticeAut> as_fan_automorphism(const ValidatedFan& fan, const IntMatrix& a) {
  const std::size_t n = fan.rank();
  if (a.rows() != n || a.cols() != n) return std::nullopt;
  const Integer d = determinant(a);
  if (d != 1 && d != -1) return std::nullopt;

  std::map<IntVector, std::size_t> index;
  for (std::size_t i = 0; i < fan.num_rays(); ++i) index.emplace(fan.ray(i), i);
  const IntMatrix at = a.transpose();
  LatticeAut out{a, d == 1 ? 1 : -1, {}};
  std::vector<bool> hit(fan.num_rays(), false);
  for (std::size_t i = 0; i < fan.num_rays(); ++i) {
    auto it = index.find(at * fan.ray(i));
    if (it == index.end() || hit[it->second]) return std::nullopt;
    hit[it->second] = true;
    out.ray_permutation.push_back(it->second);
  }
  const std::set<Cone> cones(fan.max_cones().begin(), fan.max_cones().end());
  for (const auto& c : fan.max_cones()) {
    Cone image;
    for (auto i : c) image.push_back(out.ray_permutation[i]);
    std::sort(image.begin(), image.end());
    if (!cones.count(image)) return std::nullopt;
  }
  return out;
}

namespace detail {

/// First n rays (greedy in index order) that form a rational basis.
inline std::vector<std::size_t> anchor_rays(const ValidatedFan& fan) {
  std::vector<std::size_t> anchors;
  std::vector<IntVector> chosen;
  for (std::size_t i = 0; i < fan.num_rays() && anchors.size() < fan.rank(); ++i) {
    chosen.push_back(fan.ray(i));
    if (rank(chosen, fan.rank()) == chosen.size())
      anchors.push_back(i);
    else
      chosen.pop_back();
  }
  return anchors;
}

inline void verify_group(const std::vector<LatticeAut>& group, const std::string& what) {
  const std::set<LatticeAut> members(group.begin(), group.end());
  auto fail = [&](const std::string& why) { return InvariantViolation("GroupAxiomViolation", what + ": " + why); };
  if (group.empty()) throw fail("empty");
  const std::size_t n = group.front().matrix.rows();
  if (!members.count(LatticeAut{IntMatrix::identity(n), 1, {}})) throw fail("identity missing");
  for (const auto& a : group) {
    if (!members.count(inverse(a))) throw fail("not closed under inverse");
    for (const auto& b : group)
      if (!members.count(compose(a, b))) throw fail("not closed under composition");
  }
}

}  // namespace detail

/// Every element of Aut_Delta M, sorted by matrix entries. For each injective
/// assignment of a fixed basis of rays to rays, the candidate transpose is
/// determined by a linear solve; it is kept when integral, unimodular and
/// fan-preserving.
inline std::vector<LatticeAut> lattice_automorphisms(const ValidatedFan& fan) {
  const std::size_t n = fan.rank();
  const std::size_t r = fan.num_rays();
  const auto anchors = detail::anchor_rays(fan);

  // B V_a = V_s, so B = V_s V_a^{-1}.
  std::vector<IntVector> anchor_cols;
  for (auto i : anchors) anchor_cols.push_back(fan.ray(i));
  const IntMatrix va = IntMatrix::from_columns(anchor_cols);
  std::vector<RatVector> va_inv_cols;
  for (std::size_t k = 0; k < n; ++k) {
    IntVector e(n);
    e[k] = 1;
    va_inv_cols.push_back(*solve_square(va.to_rows(), e));
  }

  std::set<LatticeAut> found;
  std::vector<std::size_t> image(n);
  std::vector<bool> used(r, false);
  std::function<void(std::size_t)> assign = [&](std::size_t depth) {
    if (depth == n) {
      // B = V_s * V_a^{-1}; A = B^T.
      IntMatrix b(n, n);
      for (std::size_t row = 0; row < n; ++row)
        for (std::size_t col = 0; col < n; ++col) {
          Rational s = 0;
          for (std::size_t k = 0; k < n; ++k) s += Rational(fan.ray(image[k])[row]) * va_inv_cols[col][k];
          if (!is_integral(s)) return;
          b(row, col) = boost::multiprecision::numerator(s);
        }
      if (auto aut = as_fan_automorphism(fan, b.transpose())) found.insert(std::move(*aut));
      return;
    }
    for (std::size_t j = 0; j < r; ++j) {
      if (used[j]) continue;
      used[j] = true;
      image[depth] = j;
      assign(depth + 1);
      used[j] = false;
    }
  };
  assign(0);

  std::vector<LatticeAut> group(found.begin(), found.end());
  detail::verify_group(group, "Aut_Delta M");
  return group;
}

/// alpha -> alpha + sum_i v_i(alpha) beta_i, with beta_i the semisimple root
/// associated to (v_i, v_{p(i)}) (zero when p fixes i). The resulting
/// automorphism permutes the rays by p^{-1}, so p -> weyl_embedding(p) is a
/// homomorphism for composition of permutations (p o q)(i) = p(q(i)).
inline LatticeAut weyl_embedding(const ValidatedFan& fan, const RayClasses& classes,
                                 const std::vector<std::size_t>& p) {
  const std::size_t n = fan.rank();
  const std::size_t r = fan.num_rays();
  if (p.size() != r) throw InputError("LengthMismatch", "permutation has the wrong length");
  for (std::size_t i = 0; i < r; ++i)
    if (p[i] >= r || classes.class_of[p[i]] != classes.class_of[i])
      throw InputError("NotClassPermutation", "permutation does not preserve the ray classes", {long(i)});

  IntMatrix a = IntMatrix::identity(n);
  for (std::size_t i = 0; i < r; ++i) {
    if (p[i] == i) continue;
    const IntVector& beta = classes.ss_root.at({i, p[i]}).alpha;
    const IntVector& v = fan.ray(i);
    for (std::size_t row = 0; row < n; ++row)
      for (std::size_t col = 0; col < n; ++col) a(row, col) += beta[row] * v[col];
  }
  auto aut = as_fan_automorphism(fan, a);
  if (!aut)
    throw InvariantViolation("NotInAutDelta", "class permutation does not induce a fan automorphism: " + to_string(a));
  return *aut;
}

struct ComponentGroupReport {
  std::vector<LatticeAut> aut_delta;
  std::vector<LatticeAut> weyl_image;
  std::vector<LatticeAut> cosets;  // lexicographically least element of each coset g W
  std::size_t order = 0;           // |Aut_Delta M| / prod l_c!
  Integer weyl_order;              // prod l_c!
};

/// Every permutation of the rays that maps each class onto itself.
inline std::vector<std::vector<std::size_t>> class_permutations(const RayClasses& classes, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> p(r);
  for (std::size_t i = 0; i < r; ++i) p[i] = i;
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == classes.size()) {
      out.push_back(p);
      return;
    }
    std::vector<std::size_t> members = classes.classes[c];
    std::vector<std::size_t> images = members;
    do {
      for (std::size_t k = 0; k < members.size(); ++k) p[members[k]] = images[k];
      rec(c + 1);
    } while (std::next_permutation(images.begin(), images.end()));
    for (auto m : members) p[m] = m;
  };
  rec(0);
  return out;
}

inline ComponentGroupReport component_group(const ValidatedFan& fan, const RayClasses& classes) {
  const std::size_t r = fan.num_rays();
  ComponentGroupReport out;
  out.aut_delta = lattice_automorphisms(fan);
  const std::set<LatticeAut> aut(out.aut_delta.begin(), out.aut_delta.end());

  out.weyl_order = 1;
  for (const auto& c : classes.classes)
    for (std::size_t k = 2; k <= c.size(); ++k) out.weyl_order *= k;

  const auto perms = class_permutations(classes, r);
  std::map<std::vector<std::size_t>, LatticeAut> image_of;
  std::set<LatticeAut> weyl;
  for (const auto& p : perms) {
    LatticeAut w = weyl_embedding(fan, classes, p);
    if (!aut.count(w)) throw InvariantViolation("NotInAutDelta", "Weyl element missing from Aut_Delta M");
    weyl.insert(w);
    image_of.emplace(p, std::move(w));
  }
  if (Integer(weyl.size()) != out.weyl_order)
    throw InvariantViolation("WeylNotInjective", "class permutations do not embed injectively");

  // Homomorphism on generators: adjacent transpositions inside each class.
  for (const auto& c : classes.classes)
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
      std::vector<std::size_t> g(r);
      for (std::size_t i = 0; i < r; ++i) g[i] = i;
      std::swap(g[c[k]], g[c[k + 1]]);
      const LatticeAut& wg = image_of.at(g);
      for (const auto& [p, wp] : image_of) {
        std::vector<std::size_t> pg(r);
        for (std::size_t i = 0; i < r; ++i) pg[i] = p[g[i]];
        if (!(image_of.at(pg) == compose(wp, wg)))
          throw InvariantViolation("WeylNotHomomorphism", "Weyl embedding is not multiplicative");
      }
    }

  for (const auto& g : out.aut_delta) {
    const LatticeAut gi = inverse(g);
    for (const auto& w : weyl)
      if (!weyl.count(compose(compose(g, w), gi)))
        throw InvariantViolation("WeylNotNormal", "Weyl image is not normal in Aut_Delta M");
  }

  std::set<LatticeAut> assigned;
  for (const auto& g : out.aut_delta) {
    if (assigned.count(g)) continue;
    out.cosets.push_back(g);
    for (const auto& w : weyl) assigned.insert(compose(g, w));
  }
  out.weyl_image.assign(weyl.begin(), weyl.end());
  out.order = out.cosets.size();
  if (Integer(out.order) * out.weyl_order != Integer(out.aut_delta.size()))
    throw InvariantViolation("CosetMismatch", "cosets do not partition Aut_Delta M evenly");
  return out;
}

inline ComponentGroupReport component_group(const ValidatedFan& fan) {
  return component_group(fan, ray_classes(fan, roots_of(fan)));
}

}  // namespace toric
