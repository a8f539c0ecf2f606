#include "support/oracles.hpp"
#include "toric/intlin.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace toric;

namespace {

IntMatrix to_matrix(const oracle::Mat& m) {
  std::vector<IntVector> rows;
  for (const auto& r : m) rows.emplace_back(r.begin(), r.end());
  return IntMatrix::from_rows(rows);
}

oracle::Mat random_matrix(std::mt19937& rng, std::size_t m, std::size_t n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  oracle::Mat a(m, oracle::Vec(n));
  for (auto& row : a)
    for (auto& x : row) x = d(rng);
  return a;
}

void expect_snf_valid(const IntMatrix& a) {
  const auto s = smith_normal_form(a);
  EXPECT_EQ(s.U * a * s.V, s.D);
  EXPECT_TRUE(abs(determinant(s.U)) == 1);
  EXPECT_TRUE(abs(determinant(s.V)) == 1);
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) {
        EXPECT_EQ(s.D(i, j), 0);
      }
  const auto d = s.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_GE(d[i], 0);
    if (i + 1 < d.size() && d[i] != 0) {
      EXPECT_EQ(d[i + 1] % d[i], 0) << "divisibility chain at " << i;
    }
    if (d[i] == 0 && i + 1 < d.size()) {
      EXPECT_EQ(d[i + 1], 0);
    }
  }
}

}  // namespace

// [TRIVIAL] diag(2,3) has invariant factors 1, 6.
TEST(SmithNormalForm, Diag23) {
  const auto s = smith_normal_form(to_matrix({{2, 0}, {0, 3}}));
  EXPECT_EQ(s.diagonal(), (std::vector<Integer>{1, 6}));
  expect_snf_valid(to_matrix({{2, 0}, {0, 3}}));
}

// [DERIVED] invariant factors agree with gcds of k x k minors.
TEST(SmithNormalForm, MatchesDeterminantalDivisors) {
  const std::vector<oracle::Mat> cases = {
      {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}},
      {{1, 0}, {0, 1}, {-1, -2}},
      {{6, 4}, {4, 6}},
      {{0, 0}, {0, 0}},
      {{3}},
  };
  for (const auto& m : cases) {
    const auto d = smith_normal_form(to_matrix(m)).diagonal();
    const auto expected = oracle::invariant_factors(m);
    ASSERT_EQ(d.size(), expected.size());
    for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(d[i], expected[i]);
    expect_snf_valid(to_matrix(m));
  }
}

// Property: random 4x4 (and rectangular) matrices satisfy U A V = D, the
// divisibility chain and the minor-gcd oracle.
TEST(SmithNormalForm, RandomProperty) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + trial % 4, n = 1 + (trial / 4) % 4;
    const auto a = random_matrix(rng, m, n, 6);
    expect_snf_valid(to_matrix(a));
    const auto d = smith_normal_form(to_matrix(a)).diagonal();
    const auto expected = oracle::invariant_factors(a);
    for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(d[i], expected[i]);
  }
}

TEST(SmithNormalForm, EmptyMatrixRejected) {
  EXPECT_THROW(smith_normal_form(IntMatrix(0, 0)), Error);
}

// [DERIVED] coker of the P(1,2,1) ray matrix is Z; of 2Z is Z/2.
TEST(Cokernel, Examples) {
  auto c = cokernel_invariants(to_matrix({{1, 0}, {0, 1}, {-1, -2}}));
  EXPECT_EQ(c.free_rank, 1u);
  EXPECT_TRUE(c.torsion.empty());
  c = cokernel_invariants(to_matrix({{2}}));
  EXPECT_EQ(c.free_rank, 0u);
  EXPECT_EQ(c.torsion, (std::vector<Integer>{2}));
  c = cokernel_invariants(to_matrix({{1, 1}, {1, -1}, {0, 1}}));
  EXPECT_EQ(c.free_rank, 1u);
  EXPECT_TRUE(c.torsion.empty());
  c = cokernel_invariants(to_matrix({{2, 0}, {0, 3}}));
  EXPECT_EQ(c.torsion, (std::vector<Integer>{6}));
  EXPECT_THROW(cokernel_invariants(to_matrix({{1, 1}, {2, 2}})), InputError);
}

// Property: row and column permutations do not change the cokernel.
TEST(Cokernel, PermutationInvariance) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_matrix(rng, 4, 2, 5);
    if (rank(to_matrix(a)) < 2) continue;
    const auto base = cokernel_invariants(to_matrix(a));
    std::shuffle(a.begin(), a.end(), rng);
    for (auto& row : a) std::swap(row[0], row[1]);
    const auto shuffled = cokernel_invariants(to_matrix(a));
    EXPECT_EQ(base.free_rank, shuffled.free_rank);
    EXPECT_EQ(base.torsion, shuffled.torsion);
  }
}

TEST(Primitive, Examples) {
  EXPECT_EQ(primitive(IntVector{4, -6}), (IntVector{2, -3}));
  EXPECT_EQ(primitive(IntVector{0, -5, 0}), (IntVector{0, -1, 0}));
  EXPECT_EQ(primitive(IntVector{1, 2}), (IntVector{1, 2}));
  EXPECT_THROW(primitive(IntVector{0, 0}), InputError);
}

TEST(LinearAlgebra, RankNullspaceDeterminant) {
  EXPECT_EQ(rank(to_matrix({{1, 2}, {2, 4}})), 1u);
  const auto ns = nullspace({IntVector{1, 2, 3}}, 3);
  EXPECT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_EQ(dot(IntVector{1, 2, 3}, v), 0);
  EXPECT_EQ(determinant(to_matrix({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}})), 18);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_matrix(rng, 4, 4, 4);
    EXPECT_EQ(determinant(to_matrix(a)), oracle::det(a));
  }
  const auto x = solve_square({IntVector{1, 0}, IntVector{-1, -1}}, IntVector{-1, 0});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], -1);
  EXPECT_EQ((*x)[1], 1);
}

// [DERIVED] triangle x >= 0, y >= 0, x + y <= 2 has 6 lattice points.
TEST(LatticePoints, Triangle) {
  RationalPolytopeSpec spec{2, {}, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, -2}}};
  const auto pts = polytope_lattice_points(spec);
  EXPECT_EQ(pts, (std::vector<IntVector>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}}));
}

TEST(LatticePoints, EmptyAndUnbounded) {
  RationalPolytopeSpec empty{2, {}, {{{1, 0}, 1}, {{-1, 0}, 0}}};
  EXPECT_TRUE(polytope_lattice_points(empty).empty());
  RationalPolytopeSpec no_integer_point{1, {}, {{{2}, 1}, {{-2}, -1}}};
  EXPECT_TRUE(polytope_lattice_points(no_integer_point).empty());
  RationalPolytopeSpec ray{2, {}, {{{1, 0}, 0}, {{0, 1}, 0}}};
  EXPECT_THROW(polytope_lattice_points(ray), InputError);
  RationalPolytopeSpec strip{2, {}, {{{1, 0}, 0}, {{-1, 0}, -1}}};
  EXPECT_THROW(polytope_lattice_points(strip), InputError);
  RationalPolytopeSpec bad{2, {}, {{{1, 0, 0}, 0}}};
  EXPECT_THROW(polytope_lattice_points(bad), InputError);
}

// Property: random bounded systems agree with the Cramer-rule vertex bound
// plus a brute-force box scan.
TEST(LatticePoints, RandomBoxOracle) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-3, 3), cst(-4, 1);
  int bounded = 0;
  for (int trial = 0; trial < 200 && bounded < 40; ++trial) {
    const std::size_t n = 2 + trial % 2;
    oracle::Mat ineq;
    oracle::Vec ineq_c;
    RationalPolytopeSpec spec{n, {}, {}};
    for (std::size_t k = 0; k < n + 2; ++k) {
      oracle::Vec w(n);
      for (auto& x : w) x = coef(rng);
      const long long c = cst(rng);
      ineq.push_back(w);
      ineq_c.push_back(c);
      spec.inequalities.push_back({IntVector(w.begin(), w.end()), c});
    }
    if (recession_direction(spec)) continue;
    const auto verts = oracle::vertices({}, {}, ineq, ineq_c, n);
    if (verts.empty()) {
      EXPECT_TRUE(polytope_lattice_points(spec).empty());
      continue;
    }
    ++bounded;
    long long b = 0;
    for (const auto& v : verts)
      for (const auto& f : v) b = std::max(b, std::llabs(f.num) / std::llabs(f.den) + 1);
    const auto expected = oracle::box_scan({}, {}, ineq, ineq_c, n, b + 1);
    const auto got = polytope_lattice_points(spec);
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i], IntVector(expected[i].begin(), expected[i].end()));
  }
  EXPECT_GT(bounded, 10);
}
