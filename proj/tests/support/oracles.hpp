#pragma once

// Brute-force reference computations used only by the tests. They work on
// 64-bit integers with naive formulas (cofactor determinants, Cramer's rule,
// exhaustive scans) and share no code path with the library algorithms.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace toric::oracle {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;

inline long long det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      Vec row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return total;
}

inline void subsets(std::size_t m, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < m; ++i) {
    cur.push_back(i);
    subsets(m, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(m, k, 0, cur, out);
  return out;
}

/// Determinantal divisors: gcd of all k x k minors, k = 1..min(m,n). The
/// Smith invariant factors are d_k = D_k / D_{k-1}.
inline std::vector<long long> determinantal_divisors(const Mat& a) {
  const std::size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
  std::vector<long long> out;
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    long long g = 0;
    for (const auto& rows : subsets(m, k))
      for (const auto& cols : subsets(n, k)) {
        Mat sub;
        for (auto i : rows) {
          Vec row;
          for (auto j : cols) row.push_back(a[i][j]);
          sub.push_back(row);
        }
        g = std::gcd(g, std::llabs(det(sub)));
      }
    out.push_back(g);
  }
  return out;
}

inline std::vector<long long> invariant_factors(const Mat& a) {
  const auto dd = determinantal_divisors(a);
  std::vector<long long> out;
  long long prev = 1;
  for (auto d : dd) {
    if (d == 0) {
      out.push_back(0);
      continue;
    }
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

struct Fraction {
  long long num, den;
};

/// Vertices of {x : rows_eq x = c, rows_ineq x >= c} by Cramer's rule over
/// all n-subsets; vertex coordinates returned as fractions.
inline std::vector<std::vector<Fraction>> vertices(const Mat& eq, const Vec& eq_c, const Mat& ineq, const Vec& ineq_c,
                                                   std::size_t n) {
  Mat rows = eq;
  rows.insert(rows.end(), ineq.begin(), ineq.end());
  Vec rhs = eq_c;
  rhs.insert(rhs.end(), ineq_c.begin(), ineq_c.end());
  std::vector<std::vector<Fraction>> out;
  for (const auto& idx : subsets(rows.size(), n)) {
    Mat a;
    for (auto i : idx) a.push_back(rows[i]);
    const long long d = det(a);
    if (d == 0) continue;
    std::vector<Fraction> x;
    for (std::size_t k = 0; k < n; ++k) {
      Mat ak = a;
      for (std::size_t r = 0; r < n; ++r) ak[r][k] = rhs[idx[r]];
      x.push_back({det(ak), d});
    }
    // feasibility: d * (row . x) compared with d * c, sign-adjusted
    auto scaled = [&](const Vec& w) {
      long long s = 0;
      for (std::size_t k = 0; k < n; ++k) s += w[k] * x[k].num;
      return s;  // = d * (w . x)
    };
    bool ok = true;
    for (std::size_t i = 0; i < eq.size() && ok; ++i) ok = scaled(eq[i]) == d * eq_c[i];
    for (std::size_t i = 0; i < ineq.size() && ok; ++i)
      ok = d > 0 ? scaled(ineq[i]) >= d * ineq_c[i] : scaled(ineq[i]) <= d * ineq_c[i];
    if (ok) out.push_back(x);
  }
  return out;
}

/// Every point of [-bound, bound]^n satisfying the system, lexicographic.
inline std::vector<Vec> box_scan(const Mat& eq, const Vec& eq_c, const Mat& ineq, const Vec& ineq_c, std::size_t n,
                                 long long bound) {
  std::vector<Vec> out;
  Vec x(n, -bound);
  while (true) {
    bool ok = true;
    auto dotp = [&](const Vec& w) {
      long long s = 0;
      for (std::size_t k = 0; k < n; ++k) s += w[k] * x[k];
      return s;
    };
    for (std::size_t i = 0; i < eq.size() && ok; ++i) ok = dotp(eq[i]) == eq_c[i];
    for (std::size_t i = 0; i < ineq.size() && ok; ++i) ok = dotp(ineq[i]) >= ineq_c[i];
    if (ok) out.push_back(x);
    std::size_t k = n;
    while (k > 0 && x[k - 1] == bound) {
      x[k - 1] = -bound;
      --k;
    }
    if (k == 0) break;
    ++x[k - 1];
  }
  return out;
}

/// All 2x2 integer matrices with entries in [-bound, bound] whose transpose
/// permutes the given rank-2 rays and maps cones (as index sets) to cones.
inline std::set<Mat> brute_force_automorphisms_rank2(const Mat& rays, const std::vector<std::vector<std::size_t>>& cones,
                                                     long long bound = 3) {
  std::set<Mat> out;
  std::set<std::vector<std::size_t>> cone_set;
  for (auto c : cones) {
    std::sort(c.begin(), c.end());
    cone_set.insert(c);
  }
  for (long long a = -bound; a <= bound; ++a)
    for (long long b = -bound; b <= bound; ++b)
      for (long long c = -bound; c <= bound; ++c)
        for (long long d = -bound; d <= bound; ++d) {
          if (std::llabs(a * d - b * c) != 1) continue;
          // A = [[a,b],[c,d]], A^T v = (a v0 + c v1, b v0 + d v1)
          std::vector<std::size_t> perm;
          bool ok = true;
          for (const auto& v : rays) {
            const Vec img = {a * v[0] + c * v[1], b * v[0] + d * v[1]};
            auto it = std::find(rays.begin(), rays.end(), img);
            if (it == rays.end()) {
              ok = false;
              break;
            }
            perm.push_back(static_cast<std::size_t>(it - rays.begin()));
          }
          if (!ok) continue;
          for (const auto& cone : cone_set) {
            std::vector<std::size_t> img;
            for (auto i : cone) img.push_back(perm[i]);
            std::sort(img.begin(), img.end());
            if (!cone_set.count(img)) ok = false;
          }
          if (ok) out.insert(Mat{{a, b}, {c, d}});
        }
  return out;
}

}  // namespace toric::oracle
