#pragma once

// Root system of the toric variety: lattice vectors alpha with v_i(alpha) = -1
// for one ray and v_j(alpha) >= 0 for all others, their semisimple
// classification, the induced equivalence on rays and the partial order on
// the equivalence classes.

#include "toric/classgroup.hpp"
#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace toric {

struct Root {
  IntVector alpha;
  std::size_t ray = 0;  // the unique i with v_i(alpha) = -1
  bool semisimple = false;
  std::optional<std::size_t> partner;  // j with v_j(alpha) = 1, iff semisimple

  friend bool operator==(const Root&, const Root&) = default;
};

/// (ray, alpha) order used for every root list in the library.
inline bool root_order(const Root& a, const Root& b) {
  return a.ray != b.ray ? a.ray < b.ray : a.alpha < b.alpha;
}

/// Constraint system {v_i(alpha) = -1, v_j(alpha) >= 0 for j != i}.
inline RationalPolytopeSpec root_constraints(const ValidatedFan& fan, std::size_t i) {
  RationalPolytopeSpec spec{fan.rank(), {{fan.ray(i), -1}}, {}};
  for (std::size_t j = 0; j < fan.num_rays(); ++j)
    if (j != i) spec.inequalities.push_back({fan.ray(j), 0});
  return spec;
}

/// All roots, unclassified, sorted by (ray, alpha).
inline std::vector<Root> enumerate_roots(const ValidatedFan& fan) {
  std::vector<Root> roots;
  for (std::size_t i = 0; i < fan.num_rays(); ++i)
    for (auto& alpha : polytope_lattice_points(root_constraints(fan, i))) roots.push_back({std::move(alpha), i, false, {}});
  return roots;
}

/// Marks alpha semisimple iff -alpha is also a root, and records the partner
/// ray. A semisimple root must evaluate to (-1 at its ray, +1 at the partner,
/// 0 elsewhere).
inline std::vector<Root> classify_roots(const ValidatedFan& fan, std::vector<Root> roots) {
  std::set<IntVector> present;
  for (const auto& r : roots) present.insert(r.alpha);
  for (auto& root : roots) {
    root.semisimple = present.count(-root.alpha) > 0;
    root.partner.reset();
    if (!root.semisimple) continue;
    const IntVector values = fan.evaluate(root.alpha);
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (k == root.ray) continue;
      if (values[k] == 1 && !root.partner) {
        root.partner = k;
      } else if (values[k] != 0) {
        throw InvariantViolation("InternalInconsistency",
                                 "semisimple root " + to_string(root.alpha) + " of ray " + std::to_string(root.ray) +
                                     " has values " + to_string(values),
                                 {static_cast<long>(root.ray)});
      }
    }
    if (!root.partner)
      throw InvariantViolation("InternalInconsistency",
                               "semisimple root " + to_string(root.alpha) + " has no partner ray",
                               {static_cast<long>(root.ray)});
  }
  std::sort(roots.begin(), roots.end(), root_order);
  return roots;
}

inline std::vector<Root> roots_of(const ValidatedFan& fan) { return classify_roots(fan, enumerate_roots(fan)); }

/// Partition of the rays into classes of linearly equivalent divisors; two
/// rays are equivalent iff a semisimple root connects them.
struct RayClasses {
  std::vector<std::vector<std::size_t>> classes;  // sorted members; classes ordered by smallest member
  std::vector<std::size_t> class_of;              // ray -> class index
  std::map<std::pair<std::size_t, std::size_t>, Root> ss_root;  // (i, j), i != j, same class

  std::size_t size() const noexcept { return classes.size(); }
  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> s;
    for (const auto& c : classes) s.push_back(c.size());
    return s;
  }
};

inline RayClasses ray_classes(const ValidatedFan& fan, const std::vector<Root>& roots, const ClassGroupData& cg) {
  const std::size_t r = fan.num_rays();
  std::vector<std::size_t> parent(r);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  RayClasses out;
  for (const auto& root : roots) {
    if (!root.semisimple) continue;
    const auto key = std::make_pair(root.ray, *root.partner);
    if (!out.ss_root.emplace(key, root).second)
      throw InvariantViolation("InternalInconsistency",
                               "two semisimple roots associated to (" + std::to_string(key.first) + "," +
                                   std::to_string(key.second) + ")",
                               {static_cast<long>(key.first), static_cast<long>(key.second)});
    parent[find(root.ray)] = find(*root.partner);
  }

  std::map<std::size_t, std::size_t> root_to_class;
  out.class_of.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    auto [it, inserted] = root_to_class.emplace(find(i), out.classes.size());
    if (inserted) out.classes.emplace_back();
    out.classes[it->second].push_back(i);
    out.class_of[i] = it->second;
  }

  // Every ordered pair in a class must be joined directly, and the classes
  // must coincide with equality of divisor classes.
  std::vector<ClassElement> degree;
  for (std::size_t i = 0; i < r; ++i) degree.push_back(ray_class(cg, i));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      const bool same = out.class_of[i] == out.class_of[j];
      if (same && !out.ss_root.count({i, j}))
        throw InvariantViolation("InternalInconsistency",
                                 "rays " + std::to_string(i) + " and " + std::to_string(j) +
                                     " are equivalent but no semisimple root joins them",
                                 {static_cast<long>(i), static_cast<long>(j)});
      if (same != (degree[i] == degree[j]))
        throw InvariantViolation("InternalInconsistency",
                                 "semisimple-root equivalence and divisor-class equality disagree on rays " +
                                     std::to_string(i) + ", " + std::to_string(j),
                                 {static_cast<long>(i), static_cast<long>(j)});
    }
  return out;
}

inline RayClasses ray_classes(const ValidatedFan& fan, const std::vector<Root>& roots) {
  return ray_classes(fan, roots, class_group(fan));
}

/// Strict partial order on the classes: F < F' iff a non-semisimple root of a
/// ray of F is positive on a ray of F'. Depth is the length of the longest
/// chain strictly below a class (0 for minimal classes).
struct OrderedClasses {
  std::vector<std::vector<bool>> less;  // less[a][b] <=> class a < class b
  std::vector<std::size_t> depth;
  std::vector<std::vector<std::size_t>> layers;  // layers[d] = classes of depth d

  bool precedes(std::size_t a, std::size_t b) const { return less.at(a).at(b); }
};

inline OrderedClasses class_order(const ValidatedFan& fan, const std::vector<Root>& roots, const RayClasses& classes) {
  const std::size_t r = fan.num_rays();
  const std::size_t k = classes.size();

  std::vector<std::vector<bool>> ray_less(r, std::vector<bool>(r, false));
  for (const auto& root : roots) {
    if (root.semisimple) continue;
    const IntVector values = fan.evaluate(root.alpha);
    for (std::size_t j = 0; j < r; ++j)
      if (values[j] > 0) ray_less[root.ray][j] = true;
  }

  OrderedClasses out;
  out.less.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (ray_less[i][j]) out.less[classes.class_of[i]][classes.class_of[j]] = true;

  auto violation = [](const std::string& what, std::vector<long> idx) {
    return InvariantViolation("OrderViolation", what, std::move(idx));
  };
  for (std::size_t a = 0; a < k; ++a) {
    if (out.less[a][a]) throw violation("class " + std::to_string(a) + " precedes itself", {long(a)});
    for (std::size_t b = 0; b < k; ++b) {
      if (!out.less[a][b]) continue;
      if (out.less[b][a])
        throw violation("classes " + std::to_string(a) + " and " + std::to_string(b) + " precede each other",
                        {long(a), long(b)});
      for (std::size_t c = 0; c < k; ++c)
        if (out.less[b][c] && !out.less[a][c])
          throw violation("order is not transitive on classes " + std::to_string(a) + ", " + std::to_string(b) +
                              ", " + std::to_string(c),
                          {long(a), long(b), long(c)});
      // The relation holds between every pair of members, not just one.
      for (auto i : classes.classes[a])
        for (auto j : classes.classes[b])
          if (!ray_less[i][j])
            throw violation("ray " + std::to_string(i) + " does not precede ray " + std::to_string(j) +
                                " although their classes are ordered",
                            {long(i), long(j)});
    }
  }

  // Longest chain below each class; the relation is acyclic at this point.
  out.depth.assign(k, 0);
  std::vector<bool> done(k, false);
  for (std::size_t pass = 0; pass < k; ++pass)
    for (std::size_t b = 0; b < k; ++b) {
      if (done[b]) continue;
      bool ready = true;
      std::size_t d = 0;
      for (std::size_t a = 0; a < k; ++a)
        if (out.less[a][b]) {
          if (!done[a]) {
            ready = false;
            break;
          }
          d = std::max(d, out.depth[a] + 1);
        }
      if (ready) {
        out.depth[b] = d;
        done[b] = true;
      }
    }
  const std::size_t max_depth = k ? *std::max_element(out.depth.begin(), out.depth.end()) : 0;
  out.layers.assign(k ? max_depth + 1 : 0, {});
  for (std::size_t a = 0; a < k; ++a) out.layers[out.depth[a]].push_back(a);
  return out;
}

}  // namespace toric
