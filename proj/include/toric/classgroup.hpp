#pragma once

// Divisor class group N = Z^r / v(M) of the toric variety and the global
// sections of torus-invariant divisors.

#include "toric/fan.hpp"
#include "toric/intlin.hpp"

#include <vector>

namespace toric {

/// An element of N in invariant-factor coordinates: free part plus torsion
/// residues, each normalized to [0, d).
struct ClassElement {
  IntVector free;
  IntVector torsion;

  bool is_zero() const { return toric::is_zero(free) && toric::is_zero(torsion); }
  friend bool operator==(const ClassElement&, const ClassElement&) = default;
  friend bool operator<(const ClassElement& a, const ClassElement& b) {
    return a.free != b.free ? a.free < b.free : a.torsion < b.torsion;
  }
};

struct ClassGroupData {
  IntMatrix v_matrix;  // r x n, row i = ray i
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  // pi(x) = selected rows of U x, with U from the Smith form U v V = D.
  IntMatrix U;
  std::vector<std::size_t> free_rows;
  std::vector<std::size_t> torsion_rows;

  std::size_t num_rays() const noexcept { return v_matrix.rows(); }
};

inline ClassGroupData class_group(const ValidatedFan& fan) {
  ClassGroupData data;
  data.v_matrix = fan.ray_matrix();
  const auto inv = cokernel_invariants(data.v_matrix);
  const auto snf = smith_normal_form(data.v_matrix);
  data.free_rank = inv.free_rank;
  data.torsion = inv.torsion;
  data.U = snf.U;
  const auto diag = snf.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i)
    if (diag[i] > 1) data.torsion_rows.push_back(i);
  for (std::size_t i = diag.size(); i < data.v_matrix.rows(); ++i) data.free_rows.push_back(i);
  return data;
}

/// pi(n) = [sum n_i H_i].
inline ClassElement divisor_class(const ClassGroupData& data, const IntVector& n) {
  if (n.size() != data.num_rays())
    throw InputError("LengthMismatch", "divisor has " + std::to_string(n.size()) + " coefficients, expected " +
                                           std::to_string(data.num_rays()));
  const IntVector y = data.U * n;
  ClassElement c;
  for (auto i : data.free_rows) c.free.push_back(y[i]);
  for (std::size_t k = 0; k < data.torsion_rows.size(); ++k)
    c.torsion.push_back(mod_floor(y[data.torsion_rows[k]], data.torsion[k]));
  return c;
}

/// [H_i] for ray i.
inline ClassElement ray_class(const ClassGroupData& data, std::size_t i) {
  IntVector e(data.num_rays());
  e.at(i) = 1;
  return divisor_class(data, e);
}

/// Lattice points alpha with v_i(alpha) + n_i >= 0 for every ray, i.e. the
/// monomial basis of the global sections of O(sum n_i H_i).
inline std::vector<IntVector> sections(const ValidatedFan& fan, const IntVector& n) {
  if (n.size() != fan.num_rays())
    throw InputError("LengthMismatch", "divisor has " + std::to_string(n.size()) + " coefficients, expected " +
                                           std::to_string(fan.num_rays()));
  RationalPolytopeSpec spec{fan.rank(), {}, {}};
  for (std::size_t i = 0; i < fan.num_rays(); ++i) spec.inequalities.push_back({fan.ray(i), -n[i]});
  return polytope_lattice_points(spec);
}

}  // namespace toric
