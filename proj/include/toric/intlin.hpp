#pragma once

// Exact integer and rational linear algebra: Smith normal form, cokernels,
// primitive vectors, and lattice points of rational polyhedra.

#include "toric/errors.hpp"
#include "toric/integer.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace toric {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// All rows must have equal length. An empty list gives a 0x0 matrix.
  static IntMatrix from_rows(const std::vector<IntVector>& rows) {
    if (rows.empty()) return {};
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw InputError("LengthMismatch", "ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_columns(const std::vector<IntVector>& cols) {
    return from_rows(cols).transpose();
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Integer>& entries() const noexcept { return data_; }

  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  IntVector col(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<IntVector> to_rows() const {
    std::vector<IntVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntVector operator*(const IntVector& x) const {
    IntVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Lexicographic on (rows, cols, row-major entries).
  friend bool operator<(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

inline std::string to_string(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) s += (i ? "," : "") + to_string(m.row(i));
  return s + "]";
}

// ---------------------------------------------------------------------------
// Rational elimination

namespace detail {

using RatRows = std::vector<RatVector>;

inline RatRows to_rational(const std::vector<IntVector>& rows) {
  RatRows out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

/// In-place reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(RatRows& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < a.size(); ++c) {
    std::size_t p = lead;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[lead]);
    const Rational inv = 1 / a[lead][c];
    for (auto& x : a[lead]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == lead || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[lead][j];
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

/// Scales a rational vector to the primitive integer vector on the same ray.
inline IntVector primitive_multiple(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) {
    const Integer d = boost::multiprecision::denominator(x);
    l = l / gcd(l, d) * d;
  }
  IntVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = boost::multiprecision::numerator(Rational(v[i] * l));
    g = gcd(g, out[i]);
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace detail

inline std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols) {
  auto a = detail::to_rational(rows);
  return detail::rref(a, cols).size();
}

inline std::size_t rank(const IntMatrix& m) { return rank(m.to_rows(), m.cols()); }

/// Integer basis of {x : row . x = 0 for every row}; one primitive vector per
/// free column, in column order.
inline std::vector<IntVector> nullspace(const std::vector<IntVector>& rows, std::size_t cols) {
  auto a = detail::to_rational(rows);
  const auto pivots = detail::rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<IntVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][free];
    basis.push_back(detail::primitive_multiple(v));
  }
  return basis;
}

/// Unique solution of the square system a x = b, or nullopt when singular.
inline std::optional<RatVector> solve_square(const std::vector<IntVector>& a, const IntVector& b) {
  const std::size_t n = a.size();
  detail::RatRows aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RatVector row(a[i].begin(), a[i].end());
    row.emplace_back(b[i]);
    aug.push_back(std::move(row));
  }
  const auto pivots = detail::rref(aug, n);
  if (pivots.size() < n) return std::nullopt;
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

/// Fraction-free (Bareiss) determinant.
inline Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InputError("NotSquare", "determinant of a non-square matrix");
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Inverse of a unimodular matrix; throws if |det| != 1.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  detail::RatRows aug;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector row(2 * n);
    for (std::size_t j = 0; j < n; ++j) row[j] = m(i, j);
    row[n + i] = 1;
    aug.push_back(std::move(row));
  }
  const auto pivots = detail::rref(aug, n);
  if (pivots.size() < n) throw InputError("NotUnimodular", "singular matrix");
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_integral(aug[i][n + j])) throw InputError("NotUnimodular", "inverse is not integral");
      inv(i, j) = boost::multiprecision::numerator(aug[i][n + j]);
    }
  return inv;
}

// ---------------------------------------------------------------------------
// Smith normal form

struct SnfResult {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal, d_1 | d_2 | ...
  IntMatrix V;  // cols x cols, unimodular

  std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
};

/// U * A * V = D by pivot-and-reduce over arbitrary-precision integers.
inline SnfResult smith_normal_form(const IntMatrix& a) {
  if (a.empty()) throw InputError("EmptyMatrix", "smith_normal_form of an empty matrix");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  auto swap_r = [&](std::size_t i, std::size_t j) {
    d.swap_rows(i, j);
    u.swap_rows(i, j);
  };
  auto swap_c = [&](std::size_t i, std::size_t j) {
    d.swap_cols(i, j);
    v.swap_cols(i, j);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d(i, j) != 0 && (!best || abs(d(i, j)) < abs(d(best->first, best->second)))) best = {i, j};
    if (!best) break;
    swap_r(t, best->first);
    swap_c(t, best->second);

    for (bool done = false; !done;) {
      done = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = d(i, t) / d(t, t);
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (d(i, t) != 0) {
          swap_r(i, t);
          done = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = d(t, j) / d(t, t);
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (d(t, j) != 0) {
          swap_c(j, t);
          done = false;
        }
      }
      if (!done) continue;
      // Divisibility: fold an offending row into the pivot row and repeat.
      for (std::size_t i = t + 1; i < m && done; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row(t, i, 1);
            u.add_row(t, i, 1);
            done = false;
            break;
          }
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

struct CokernelInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, in divisibility order

  friend bool operator==(const CokernelInvariants&, const CokernelInvariants&) = default;
};

/// Z^rows / A(Z^cols) for any A, injective or not.
inline CokernelInvariants cokernel(const IntMatrix& a) {
  CokernelInvariants out;
  if (a.empty()) {
    out.free_rank = a.rows();
    return out;
  }
  const auto snf = smith_normal_form(a);
  std::size_t nonzero = 0;
  for (const auto& x : snf.diagonal()) {
    if (x == 0) continue;
    ++nonzero;
    if (x > 1) out.torsion.push_back(x);
  }
  out.free_rank = a.rows() - nonzero;
  return out;
}

/// Cokernel of an injective map Z^cols -> Z^rows; rejects rank-deficient A.
inline CokernelInvariants cokernel_invariants(const IntMatrix& a) {
  if (a.empty() || rank(a) < a.cols())
    throw InputError("NotInjective", "matrix columns are linearly dependent; the map is not injective");
  return cokernel(a);
}

inline IntVector primitive(const IntVector& v) {
  if (is_zero(v)) throw InputError("ZeroVector", "primitive() of the zero vector");
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  IntVector out = v;
  for (auto& x : out) x /= g;
  return out;
}

// ---------------------------------------------------------------------------
// Rational polyhedra

struct LinearConstraint {
  IntVector normal;
  Integer constant;
};

/// {x in Q^dimension : <w,x> = c for equalities, <w,x> >= c for inequalities}.
struct RationalPolytopeSpec {
  std::size_t dimension = 0;
  std::vector<LinearConstraint> equalities;
  std::vector<LinearConstraint> inequalities;

  bool contains(const IntVector& x) const {
    for (const auto& e : equalities)
      if (dot(e.normal, x) != e.constant) return false;
    for (const auto& e : inequalities)
      if (dot(e.normal, x) < e.constant) return false;
    return true;
  }
};

namespace detail {

inline void check_dimensions(const RationalPolytopeSpec& spec) {
  for (const auto* list : {&spec.equalities, &spec.inequalities})
    for (const auto& c : *list)
      if (c.normal.size() != spec.dimension)
        throw InputError("LengthMismatch", "constraint normal has length " + std::to_string(c.normal.size()) +
                                               ", expected " + std::to_string(spec.dimension));
}

inline std::vector<IntVector> all_normals(const RationalPolytopeSpec& spec) {
  std::vector<IntVector> rows;
  for (const auto& c : spec.equalities) rows.push_back(c.normal);
  for (const auto& c : spec.inequalities) rows.push_back(c.normal);
  return rows;
}

inline bool rational_feasible(const RationalPolytopeSpec& spec, const RatVector& x) {
  auto eval = [&](const IntVector& w) {
    Rational s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * x[i];
    return s;
  };
  for (const auto& c : spec.equalities)
    if (eval(c.normal) != c.constant) return false;
  for (const auto& c : spec.inequalities)
    if (eval(c.normal) < c.constant) return false;
  return true;
}

/// Calls f(indices) for every k-subset of {0..m-1} in lexicographic order;
/// stops early when f returns false.
template <class F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(static_cast<const std::vector<std::size_t>&>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Vertices of a pointed polyhedron, lexicographically sorted. Each vertex is
/// the unique solution of some n constraints taken with equality that also
/// satisfies the whole system. Returns nothing for an empty polyhedron (and for
/// one with a nonzero lineality space, which has no vertices).
inline std::vector<RatVector> polytope_vertices(const RationalPolytopeSpec& spec) {
  detail::check_dimensions(spec);
  const std::size_t n = spec.dimension;
  std::vector<LinearConstraint> rows = spec.equalities;
  rows.insert(rows.end(), spec.inequalities.begin(), spec.inequalities.end());
  std::set<RatVector> found;
  if (n == 0) {
    if (detail::rational_feasible(spec, {})) found.insert(RatVector{});
    return {found.begin(), found.end()};
  }
  detail::for_each_subset(rows.size(), n, [&](const std::vector<std::size_t>& idx) {
    std::vector<IntVector> a;
    IntVector b;
    for (auto i : idx) {
      a.push_back(rows[i].normal);
      b.push_back(rows[i].constant);
    }
    if (auto x = solve_square(a, b); x && detail::rational_feasible(spec, *x)) found.insert(std::move(*x));
    return true;
  });
  return {found.begin(), found.end()};
}

/// A nonzero primitive direction d with <w,d> = 0 on equalities and
/// <w,d> >= 0 on inequalities, if one exists.
inline std::optional<IntVector> recession_direction(const RationalPolytopeSpec& spec) {
  detail::check_dimensions(spec);
  const std::size_t n = spec.dimension;
  if (n == 0) return std::nullopt;
  const auto normals = detail::all_normals(spec);
  if (auto lineality = nullspace(normals, n); !lineality.empty()) return lineality.front();

  RationalPolytopeSpec cone{n, {}, {}};
  for (const auto& c : spec.equalities) cone.equalities.push_back({c.normal, 0});
  for (const auto& c : spec.inequalities) cone.inequalities.push_back({c.normal, 0});

  // Pointed cone: nonzero iff it has an extreme ray, which spans the
  // one-dimensional kernel of some n-1 independent constraints.
  std::optional<IntVector> ray;
  detail::for_each_subset(normals.size(), n - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<IntVector> sub;
    for (auto i : idx) sub.push_back(normals[i]);
    auto kernel = nullspace(sub, n);
    if (kernel.size() != 1) return true;
    for (const auto& d : {kernel.front(), IntVector(-kernel.front())})
      if (cone.contains(d)) {
        ray = d;
        return false;
      }
    return true;
  });
  return ray;
}

/// Every integer point of the polyhedron, sorted lexicographically. Throws
/// InputError("Unbounded") when the polyhedron is nonempty and unbounded.
inline std::vector<IntVector> polytope_lattice_points(const RationalPolytopeSpec& spec) {
  detail::check_dimensions(spec);
  const std::size_t n = spec.dimension;
  if (n == 0) return spec.contains({}) ? std::vector<IntVector>{IntVector{}} : std::vector<IntVector>{};

  const auto lineality = nullspace(detail::all_normals(spec), n);
  if (!lineality.empty()) {
    // Nonempty iff its slice orthogonal to the lineality space has a vertex.
    RationalPolytopeSpec slice = spec;
    for (const auto& l : lineality) slice.equalities.push_back({l, 0});
    if (!polytope_vertices(slice).empty())
      throw InputError("Unbounded", "constraint system has a recession direction " + to_string(lineality.front()));
    return {};
  }

  const auto vertices = polytope_vertices(spec);
  if (vertices.empty()) return {};
  if (auto d = recession_direction(spec))
    throw InputError("Unbounded", "constraint system has a recession direction " + to_string(*d));

  IntVector lo(n), hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    lo[k] = ceil(vertices.front()[k]);
    hi[k] = floor(vertices.front()[k]);
    for (const auto& v : vertices) {
      lo[k] = std::min(lo[k], ceil(v[k]));
      hi[k] = std::max(hi[k], floor(v[k]));
    }
    if (lo[k] > hi[k]) return {};
  }

  std::vector<IntVector> points;
  IntVector x = lo;
  while (true) {
    if (spec.contains(x)) points.push_back(x);
    std::size_t k = n;
    while (k > 0 && x[k - 1] == hi[k - 1]) {
      x[k - 1] = lo[k - 1];
      --k;
    }
    if (k == 0) break;
    ++x[k - 1];
  }
  return points;
}

}  // namespace toric
