#pragma once

// Structure of the connected automorphism group Aut0 = R_u x| (prod GL_F)/T_N:
// the reductive part, the layering of the unipotent radical, the
// representations of each GL_F on the unipotent pieces, and the radical.

#include "toric/classgroup.hpp"
#include "toric/roots.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace toric {

struct ReductiveDescription {
  std::vector<std::size_t> gl_factors;  // class sizes, in class order
  std::size_t torus_free_rank = 0;      // T_N: rank r - n ...
  std::vector<Integer> torus_torsion;   // ... and torsion of N
  long dimension = 0;                   // sum l^2 - (r - n)
};

struct UnipotentLayer {
  std::size_t depth = 0;
  std::vector<std::size_t> classes;
  std::size_t dimension = 0;  // non-semisimple roots carried by these classes
};

struct UnipotentDescription {
  std::vector<UnipotentLayer> layers;       // one per depth, including empty ones
  std::vector<std::size_t> chain_dimensions;  // dim L_d = sum of layer dimensions up to d
  std::size_t total_dimension = 0;

  std::size_t nontrivial_layers() const {
    std::size_t c = 0;
    for (const auto& l : layers) c += l.dimension > 0;
    return c;
  }
};

enum class RepKind {
  DualStandard,     // V_F as copies of E_F^*
  SymmetricPowers,  // V_k as a sum of S^n E_F, for class(v_k) < F
  Trivial,          // GL_F acts trivially on V_k
};

inline const char* to_string(RepKind k) {
  switch (k) {
    case RepKind::DualStandard: return "dual_standard";
    case RepKind::SymmetricPowers: return "symmetric_powers";
    case RepKind::Trivial: return "trivial";
  }
  return "?";
}

struct RepSummand {
  std::size_t degree = 0;
  std::size_t multiplicity = 0;
  friend bool operator==(const RepSummand&, const RepSummand&) = default;
};

/// How GL_F (F = acting_class) acts on one unipotent piece. For DualStandard
/// the target is the class F itself (V_F); otherwise it is a single ray v_k.
struct RepDecomposition {
  std::size_t acting_class = 0;
  RepKind kind = RepKind::Trivial;
  std::optional<std::size_t> target_class;
  std::optional<std::size_t> target_ray;
  std::size_t dimension = 0;
  std::vector<RepSummand> summands;
};

struct RadicalDescription {
  std::size_t semisimple_span_rank = 0;  // rank of M' = <semisimple roots>
  std::size_t quotient_free_rank = 0;    // M/M'
  std::vector<Integer> quotient_torsion;
  std::size_t unipotent_dimension = 0;
};

struct Aut0Report {
  std::size_t rank = 0;
  std::size_t num_rays = 0;
  std::size_t total_dimension = 0;
  std::size_t num_roots = 0;
  std::size_t num_semisimple = 0;
  std::size_t num_nonsemisimple = 0;
  ReductiveDescription reductive;
  UnipotentDescription unipotent;
  std::vector<RepDecomposition> representations;
  RadicalDescription radical;

  ClassGroupData class_group;
  std::vector<Root> roots;
  RayClasses classes;
  OrderedClasses order;
};

inline ReductiveDescription reductive_part(const RayClasses& classes, const ClassGroupData& cg) {
  ReductiveDescription out;
  out.gl_factors = classes.sizes();
  out.torus_free_rank = cg.free_rank;
  out.torus_torsion = cg.torsion;
  long squares = 0;
  for (auto l : out.gl_factors) squares += static_cast<long>(l * l);
  out.dimension = squares - static_cast<long>(cg.free_rank);
  return out;
}

inline UnipotentDescription unipotent_structure(const OrderedClasses& order, const RayClasses& classes,
                                                const std::vector<Root>& roots) {
  UnipotentDescription out;
  std::vector<std::size_t> per_class(classes.size(), 0);
  for (const auto& root : roots)
    if (!root.semisimple) ++per_class[classes.class_of[root.ray]];
  std::size_t running = 0;
  for (std::size_t d = 0; d < order.layers.size(); ++d) {
    UnipotentLayer layer{d, order.layers[d], 0};
    for (auto c : layer.classes) layer.dimension += per_class[c];
    running += layer.dimension;
    out.chain_dimensions.push_back(running);
    out.layers.push_back(std::move(layer));
  }
  out.total_dimension = running;
  return out;
}

/// For each class F and each ray v_k carrying non-semisimple roots:
///   v_k in F        -> V_F is h copies of E_F^* (reported once per class);
///   class(v_k) < F  -> V_k splits into S^n E_F, one copy per group of roots
///                      sharing their values on the rays outside F;
///   otherwise       -> trivial action.
inline std::vector<RepDecomposition> rep_decomposition(const ValidatedFan& fan, const RayClasses& classes,
                                                       const OrderedClasses& order, const std::vector<Root>& roots) {
  const std::size_t r = fan.num_rays();
  std::vector<std::vector<const Root*>> nonss(r);
  for (const auto& root : roots)
    if (!root.semisimple) nonss[root.ray].push_back(&root);

  std::vector<RepDecomposition> out;
  for (std::size_t f = 0; f < classes.size(); ++f) {
    const auto& members = classes.classes[f];
    const std::size_t l = members.size();
    std::vector<bool> in_f(r, false);
    for (auto i : members) in_f[i] = true;

    const std::size_t h = nonss[members.front()].size();
    for (auto i : members)
      if (nonss[i].size() != h)
        throw InvariantViolation("DecompositionMismatch",
                                 "rays " + std::to_string(members.front()) + " and " + std::to_string(i) +
                                     " of one class carry different numbers of non-semisimple roots",
                                 {long(members.front()), long(i)});
    if (h > 0) {
      RepDecomposition rep;
      rep.acting_class = f;
      rep.kind = RepKind::DualStandard;
      rep.target_class = f;
      rep.dimension = h * l;
      rep.summands.push_back({1, h});
      out.push_back(std::move(rep));
    }

    for (std::size_t k = 0; k < r; ++k) {
      if (in_f[k] || nonss[k].empty()) continue;
      RepDecomposition rep;
      rep.acting_class = f;
      rep.target_ray = k;
      rep.dimension = nonss[k].size();
      if (!order.precedes(classes.class_of[k], f)) {
        rep.kind = RepKind::Trivial;
        rep.summands.push_back({0, rep.dimension});
        out.push_back(std::move(rep));
        continue;
      }
      rep.kind = RepKind::SymmetricPowers;
      // key: values on rays outside F -> (F-degree, group size)
      std::map<IntVector, std::pair<Integer, std::size_t>> groups;
      for (const Root* root : nonss[k]) {
        const IntVector values = fan.evaluate(root->alpha);
        IntVector key;
        Integer degree = 0;
        for (std::size_t j = 0; j < r; ++j) {
          if (in_f[j])
            degree += values[j];
          else
            key.push_back(values[j]);
        }
        auto [it, inserted] = groups.emplace(key, std::make_pair(degree, 0));
        if (it->second.first != degree)
          throw InvariantViolation("DecompositionMismatch",
                                   "roots of ray " + std::to_string(k) + " in one group have different degrees",
                                   {long(k)});
        ++it->second.second;
      }
      std::map<std::size_t, std::size_t> multiplicity;
      for (const auto& [key, group] : groups) {
        const auto degree = static_cast<std::size_t>(to_int64(group.first));
        const Integer expected = binomial(static_cast<std::int64_t>(degree + l - 1), static_cast<std::int64_t>(l - 1));
        if (expected != group.second)
          throw InvariantViolation("DecompositionMismatch",
                                   "ray " + std::to_string(k) + ": group of degree " + std::to_string(degree) +
                                       " has " + std::to_string(group.second) + " roots, expected " + expected.str(),
                                   {long(k), long(f)});
        ++multiplicity[degree];
      }
      for (const auto& [degree, m] : multiplicity) rep.summands.push_back({degree, m});
      out.push_back(std::move(rep));
    }
  }
  return out;
}

inline RadicalDescription radical_part(const ValidatedFan& fan, const std::vector<Root>& roots,
                                       std::size_t unipotent_dimension) {
  RadicalDescription out;
  std::vector<IntVector> ss;
  for (const auto& root : roots)
    if (root.semisimple) ss.push_back(root.alpha);
  out.unipotent_dimension = unipotent_dimension;
  if (ss.empty()) {
    out.quotient_free_rank = fan.rank();
    return out;
  }
  const IntMatrix span = IntMatrix::from_columns(ss);
  out.semisimple_span_rank = rank(span);
  const auto quotient = cokernel(span);
  out.quotient_free_rank = quotient.free_rank;
  out.quotient_torsion = quotient.torsion;
  return out;
}

inline Aut0Report aut0_report(const ValidatedFan& fan) {
  Aut0Report rep;
  rep.rank = fan.rank();
  rep.num_rays = fan.num_rays();
  rep.class_group = class_group(fan);
  rep.roots = roots_of(fan);
  rep.classes = ray_classes(fan, rep.roots, rep.class_group);
  rep.order = class_order(fan, rep.roots, rep.classes);

  rep.num_roots = rep.roots.size();
  for (const auto& root : rep.roots) (root.semisimple ? rep.num_semisimple : rep.num_nonsemisimple) += 1;
  rep.total_dimension = rep.rank + rep.num_roots;

  rep.reductive = reductive_part(rep.classes, rep.class_group);
  rep.unipotent = unipotent_structure(rep.order, rep.classes, rep.roots);
  rep.representations = rep_decomposition(fan, rep.classes, rep.order, rep.roots);
  rep.radical = radical_part(fan, rep.roots, rep.unipotent.total_dimension);

  auto mismatch = [](const std::string& what) { return InvariantViolation("AccountingMismatch", what); };

  const long structural = rep.reductive.dimension + static_cast<long>(rep.unipotent.total_dimension);
  if (structural != static_cast<long>(rep.total_dimension))
    throw mismatch("n + #roots = " + std::to_string(rep.total_dimension) + " but reductive + unipotent = " +
                   std::to_string(structural));

  std::size_t expected_ss = 0;
  for (auto l : rep.reductive.gl_factors) expected_ss += l * (l - 1);
  if (expected_ss != rep.num_semisimple)
    throw mismatch(std::to_string(rep.num_semisimple) + " semisimple roots, class sizes predict " +
                   std::to_string(expected_ss));

  std::vector<std::size_t> ss_per_ray(rep.num_rays, 0);
  for (const auto& root : rep.roots)
    if (root.semisimple) ++ss_per_ray[root.ray];
  for (std::size_t i = 0; i < rep.num_rays; ++i)
    if (ss_per_ray[i] + 1 != rep.classes.classes[rep.classes.class_of[i]].size())
      throw mismatch("ray " + std::to_string(i) + " has " + std::to_string(ss_per_ray[i]) +
                     " semisimple roots, inconsistent with its class size");

  if (rep.radical.semisimple_span_rank + rep.radical.quotient_free_rank != rep.rank)
    throw mismatch("rank(M') + rank(M/M') != n");
  if (rep.class_group.torsion.empty() &&
      static_cast<long>(rep.radical.quotient_free_rank) !=
          static_cast<long>(rep.classes.size()) - static_cast<long>(rep.class_group.free_rank))
    throw mismatch("rank(M/M') = " + std::to_string(rep.radical.quotient_free_rank) + ", expected k - (r - n) = " +
                   std::to_string(long(rep.classes.size()) - long(rep.class_group.free_rank)));
  return rep;
}

/// "Aut0 = R_u x| (GL_2 x GL_1 x GL_1)/T_N"-style formula; R_u is omitted
/// when trivial.
inline std::string structure_formula(const Aut0Report& rep) {
  std::string s = "Aut0 = ";
  if (rep.unipotent.total_dimension > 0) s += "R_u ⋊ ";
  s += "(";
  for (std::size_t i = 0; i < rep.reductive.gl_factors.size(); ++i)
    s += (i ? " × " : "") + std::string("GL_") + std::to_string(rep.reductive.gl_factors[i]);
  s += ")/T_N";
  return s;
}

}  // namespace toric
