#include "support/fans.hpp"
#include "toric/autstructure.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace toric;
using namespace toric::testing;

namespace {

const RepDecomposition* find_rep(const Aut0Report& rep, std::size_t acting_class, RepKind kind,
                                 std::optional<std::size_t> ray = std::nullopt) {
  for (const auto& d : rep.representations)
    if (d.acting_class == acting_class && d.kind == kind && (!ray || d.target_ray == ray)) return &d;
  return nullptr;
}

// Both sides of the dimension identity from separate inputs: the left from
// the lattice rank and the raw root count, the right from class sizes.
void expect_accounting(const ValidatedFan& fan) {
  const auto roots = roots_of(fan);
  const auto cls = ray_classes(fan, roots);
  std::size_t nonss = 0, ss = 0;
  for (const auto& r : roots) (r.semisimple ? ss : nonss)++;
  long sum_sq = 0, sum_pairs = 0;
  for (const auto& c : cls.classes) {
    sum_sq += long(c.size() * c.size());
    sum_pairs += long(c.size() * (c.size() - 1));
  }
  const long n = long(fan.rank()), r = long(fan.num_rays());
  EXPECT_EQ(n + long(roots.size()), sum_sq - (r - n) + long(nonss));
  EXPECT_EQ(long(ss), sum_pairs);
  const auto rep = aut0_report(fan);
  EXPECT_EQ(long(rep.total_dimension), n + long(roots.size()));
  EXPECT_EQ(rep.reductive.dimension + long(rep.unipotent.total_dimension), long(rep.total_dimension));
}

}  // namespace

TEST(Aut0, ProjectiveSpaces) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto rep = aut0_report(validate(projective_space(n)));
    EXPECT_EQ(rep.total_dimension, (n + 1) * (n + 1) - 1);
    EXPECT_EQ(rep.reductive.gl_factors, (std::vector<std::size_t>{n + 1}));
    EXPECT_EQ(rep.reductive.torus_free_rank, 1u);
    EXPECT_EQ(rep.unipotent.total_dimension, 0u);
    EXPECT_EQ(structure_formula(rep), "Aut0 = (GL_" + std::to_string(n + 1) + ")/T_N");
  }
}

TEST(Aut0, P1xP1) {
  const auto rep = aut0_report(corpus("P1xP1"));
  EXPECT_EQ(rep.total_dimension, 6u);
  EXPECT_EQ(rep.reductive.gl_factors, (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(rep.reductive.torus_free_rank, 2u);
}

// [DERIVED] F_a: dim = a + 5 = 4 + (a + 1); one unipotent layer; V_{v4} is
// S^a E_F for F = {v1, v3}, of dimension C(a+1, 1).
TEST(Aut0, Hirzebruch) {
  for (long a = 1; a <= 3; ++a) {
    const auto rep = aut0_report(validate(hirzebruch(a)));
    EXPECT_EQ(long(rep.total_dimension), a + 5);
    EXPECT_EQ(rep.reductive.dimension, 4);
    EXPECT_EQ(long(rep.unipotent.total_dimension), a + 1);
    EXPECT_EQ(rep.unipotent.nontrivial_layers(), 1u);
    const auto* d = find_rep(rep, rep.classes.class_of[0], RepKind::SymmetricPowers, 3);
    ASSERT_NE(d, nullptr);
    EXPECT_EQ(d->summands, (std::vector<RepSummand>{{std::size_t(a), 1}}));
    EXPECT_EQ(Integer(d->dimension), binomial(a + 1, 1));
    EXPECT_EQ(rep.radical.semisimple_span_rank, 1u);
    EXPECT_EQ(rep.radical.quotient_free_rank, 1u);
  }
}

// [DERIVED] P(1,2,1): 7 = 4 + 3 and V_{v2} = S^2 E_F for F = {v1, v3}.
TEST(Aut0, Weighted) {
  const auto rep = aut0_report(corpus("P121"));
  EXPECT_EQ(rep.total_dimension, 7u);
  EXPECT_EQ(rep.reductive.dimension, 4);
  EXPECT_EQ(rep.unipotent.total_dimension, 3u);
  EXPECT_EQ(rep.num_semisimple, 2u);
  EXPECT_EQ(rep.num_nonsemisimple, 3u);
  const auto* d = find_rep(rep, rep.classes.class_of[0], RepKind::SymmetricPowers, 1);
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->summands, (std::vector<RepSummand>{{2, 1}}));
  EXPECT_EQ(d->dimension, 3u);
  const auto* dual = find_rep(rep, rep.classes.class_of[1], RepKind::DualStandard);
  ASSERT_NE(dual, nullptr);
  EXPECT_EQ(dual->summands, (std::vector<RepSummand>{{1, 3}}));
}

// Property: every symmetric-power summand has dimension C(n + l - 1, l - 1)
// and the summands add up to the piece dimension.
TEST(Aut0, RepDimensionsConsistent) {
  std::vector<Fan> fans;
  for (const auto& name : corpus_names()) fans.push_back(load_fan(name));
  fans.push_back(product(hirzebruch(2), projective_space(1)));
  for (const auto& f : fans) {
    const auto rep = aut0_report(validate(f));
    for (const auto& d : rep.representations) {
      const std::size_t l = rep.classes.classes[d.acting_class].size();
      Integer total = 0;
      for (const auto& s : d.summands) {
        if (d.kind == RepKind::SymmetricPowers)
          total += s.multiplicity * binomial(long(s.degree + l - 1), long(l - 1));
        else if (d.kind == RepKind::DualStandard)
          total += s.multiplicity * l;
        else
          total += s.multiplicity;
      }
      EXPECT_EQ(total, Integer(d.dimension)) << f.name;
    }
  }
}

TEST(Aut0, AccountingOnCorpus) {
  for (const auto& name : corpus_names()) expect_accounting(corpus(name));
}

TEST(Aut0, AccountingOnRandomFans) {
  std::mt19937 rng(23);
  for (int i = 0; i < 40; ++i) expect_accounting(validate(random_rank2_fan(rng)));
  for (int i = 0; i < 8; ++i) expect_accounting(validate(product(random_rank2_fan(rng, 2, 4), projective_space(1))));
}

// Property: if N is free, rank(M/M') = k - (r - n).
TEST(Aut0, RadicalRank) {
  for (const auto& name : corpus_names()) {
    const auto rep = aut0_report(corpus(name));
    if (!rep.class_group.torsion.empty()) continue;
    EXPECT_EQ(long(rep.radical.quotient_free_rank),
              long(rep.classes.size()) - long(rep.num_rays - rep.rank))
        << name;
  }
}
