#pragma once

#include "toric/errors.hpp"
#include "toric/intlin.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace toric {

using Cone = std::vector<std::size_t>;  // sorted ray indices

/// A fan as given by the user: primitive rays in the dual lattice and the
/// maximal cones as sets of ray indices. Ray order is significant; every
/// report indexes rays by their position here.
struct Fan {
  std::string name;
  std::size_t rank = 0;
  std::vector<IntVector> rays;
  std::vector<Cone> max_cones;
};

/// A fan that passed validate(). Immutable; the only way to build one is
/// through validate().
class ValidatedFan {
 public:
  const Fan& fan() const noexcept { return fan_; }
  const std::string& name() const noexcept { return fan_.name; }
  std::size_t rank() const noexcept { return fan_.rank; }
  std::size_t num_rays() const noexcept { return fan_.rays.size(); }
  const IntVector& ray(std::size_t i) const { return fan_.rays.at(i); }
  const std::vector<IntVector>& rays() const noexcept { return fan_.rays; }
  const std::vector<Cone>& max_cones() const noexcept { return fan_.max_cones; }

  /// r x n matrix of v : M -> Z^r (row i is ray i).
  const IntMatrix& ray_matrix() const noexcept { return ray_matrix_; }

  /// Codimension-one faces of the maximal cones, each shared by two cones.
  const std::vector<Cone>& walls() const noexcept { return walls_; }

  /// v_i(alpha).
  Integer evaluate(std::size_t i, const IntVector& alpha) const { return dot(fan_.rays.at(i), alpha); }

  /// v(alpha) = (v_1(alpha), ..., v_r(alpha)).
  IntVector evaluate(const IntVector& alpha) const { return ray_matrix_ * alpha; }

  friend ValidatedFan validate(const Fan& fan);

 private:
  ValidatedFan() = default;

  Fan fan_;
  IntMatrix ray_matrix_;
  std::vector<Cone> walls_;
};

namespace detail {

inline std::string cone_label(const Cone& c) {
  std::string s = "{";
  for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
  return s + "}";
}

inline std::vector<long> as_indices(const Cone& c) { return {c.begin(), c.end()}; }

/// Facets of a full-dimensional strongly convex cone, as ray-index sets.
inline std::set<Cone> cone_facets(const std::vector<IntVector>& rays, const Cone& cone, std::size_t n) {
  std::set<Cone> facets;
  for_each_subset(cone.size(), n - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<IntVector> sub;
    for (auto k : idx) sub.push_back(rays[cone[k]]);
    auto h = nullspace(sub, n);
    if (h.size() != 1) return true;
    bool pos = false, neg = false;
    Cone face;
    for (auto i : cone) {
      const Integer s = dot(h.front(), rays[i]);
      if (s > 0) pos = true;
      if (s < 0) neg = true;
      if (s == 0) face.push_back(i);
    }
    if (!(pos && neg)) facets.insert(face);
    return true;
  });
  return facets;
}

}  // namespace detail

/// Checks the structural and completeness-proxy conditions:
///   rays primitive and pairwise distinct;
///   rays positively span (no nonzero alpha with v_i(alpha) >= 0 for all i);
///   each maximal cone strongly convex and full-dimensional;
///   every wall of a maximal cone lies in exactly two maximal cones.
/// Support coverage and face-intersection compatibility are not checked.
inline ValidatedFan validate(const Fan& input) {
  const std::size_t n = input.rank;
  const std::size_t r = input.rays.size();
  if (n == 0) throw InputError("MalformedFan", "rank must be at least 1");
  if (r == 0) throw InputError("MalformedFan", "fan has no rays");
  for (std::size_t i = 0; i < r; ++i)
    if (input.rays[i].size() != n)
      throw InputError("MalformedFan", "ray " + std::to_string(i) + " has length " +
                                           std::to_string(input.rays[i].size()) + ", expected " + std::to_string(n),
                       {static_cast<long>(i)});
  if (input.max_cones.empty()) throw InputError("MalformedFan", "fan has no cones");

  ValidatedFan out;
  out.fan_ = input;
  for (auto& c : out.fan_.max_cones) {
    if (c.empty()) throw InputError("MalformedFan", "empty maximal cone");
    for (auto i : c)
      if (i >= r) throw InputError("MalformedFan", "cone index " + std::to_string(i) + " out of range");
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      throw InputError("MalformedFan", "cone " + detail::cone_label(c) + " repeats a ray");
  }

  const auto& rays = out.fan_.rays;
  for (std::size_t i = 0; i < r; ++i) {
    Integer g = 0;
    for (const auto& x : rays[i]) g = gcd(g, x);
    if (g != 1)
      throw InputError("NonPrimitiveRay", "ray " + std::to_string(i) + " " + to_string(rays[i]) + " is not primitive",
                       {static_cast<long>(i)});
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (rays[i] == rays[j])
        throw InputError("DuplicateRay", "rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide",
                         {static_cast<long>(i), static_cast<long>(j)});

  // Positive spanning <=> the cone {alpha : v_i(alpha) >= 0} is zero.
  RationalPolytopeSpec dual{n, {}, {}};
  for (const auto& v : rays) dual.inequalities.push_back({v, 0});
  if (auto d = recession_direction(dual))
    throw InputError("NotPositivelySpanning",
                     "rays do not positively span: every ray is nonnegative on " + to_string(*d));

  {
    std::set<Cone> seen;
    for (const auto& c : out.fan_.max_cones)
      if (!seen.insert(c).second) throw InputError("MalformedFan", "cone " + detail::cone_label(c) + " listed twice");
  }

  for (const auto& c : out.fan_.max_cones) {
    // Strongly convex <=> no nonzero lambda >= 0 with sum lambda_k u_k = 0.
    RationalPolytopeSpec relations{c.size(), {}, {}};
    for (std::size_t coord = 0; coord < n; ++coord) {
      IntVector row(c.size());
      for (std::size_t k = 0; k < c.size(); ++k) row[k] = rays[c[k]][coord];
      relations.equalities.push_back({row, 0});
    }
    for (std::size_t k = 0; k < c.size(); ++k) {
      IntVector e(c.size());
      e[k] = 1;
      relations.inequalities.push_back({e, 0});
    }
    if (recession_direction(relations))
      throw InputError("NotStronglyConvex", "cone " + detail::cone_label(c) + " contains a line",
                       detail::as_indices(c));
    std::vector<IntVector> gens;
    for (auto i : c) gens.push_back(rays[i]);
    if (rank(gens, n) != n)
      throw InputError("ConeNotFullDimensional", "cone " + detail::cone_label(c) + " is not full-dimensional",
                       detail::as_indices(c));
  }

  std::map<Cone, int> wall_count;
  for (const auto& c : out.fan_.max_cones)
    for (const auto& f : detail::cone_facets(rays, c, n)) ++wall_count[f];
  for (const auto& [facet, count] : wall_count) {
    if (count != 2)
      throw InputError("WallConditionFailed",
                       "facet " + detail::cone_label(facet) + " lies in " + std::to_string(count) +
                           " maximal cones, expected 2",
                       detail::as_indices(facet));
    out.walls_.push_back(facet);
  }

  out.ray_matrix_ = IntMatrix::from_rows(rays);
  return out;
}

}  // namespace toric
