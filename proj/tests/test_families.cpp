#include <gtest/gtest.h>

#include "bkn/families.hpp"
#include "bkn/iso.hpp"
#include "bkn/oracle.hpp"
#include "support/generators.hpp"

using namespace bkn;

namespace {

const CaseLabel kFourGeneric{CaseKind::FourGeneric, {1, 3, 5, 7}, 0, 0};

FamilyPoint five_single(int l, int beta) { return {CaseLabel{CaseKind::FiveSingle, {}, 0, l}, {Scalar(beta)}}; }

std::vector<Scalar> sums_vec(const Rank2Module& m) {
  std::vector<Scalar> out;
  for (int i : kOddIndices) out.push_back(b_sums(m).at(i).constant_term());
  return out;
}

std::vector<Scalar> V(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Representative, PlacesSumsOnOddPositions) {
  EXPECT_EQ(sums_vec(representative({kFourGeneric, {Scalar(2)}})), V({1, 2, -1, -2, 0}));
  EXPECT_EQ(sums_vec(representative(five_single(3, 3))), V({3, 1, -1, -4, 1}));
  EXPECT_EQ(sums_vec(representative({CaseLabel{CaseKind::FiveGeneric, {}, 0, 0}, {Scalar(2), Scalar(3)}})),
            V({2, -7, 3, 1, 1}));
  const auto m = representative({kFourGeneric, {Scalar(2)}});
  for (int i = 2; i <= kN; i += 2) EXPECT_TRUE(m.tuple().b(i).is_zero());
}

TEST(Representative, RejectsExcludedParameters) {
  for (int beta : {-1, 0, 1}) EXPECT_THROW(representative({kFourGeneric, {Scalar(beta)}}), InvalidParameter);
  for (int beta : {0, -1, -2}) EXPECT_THROW(representative(five_single(3, beta)), InvalidParameter);
  EXPECT_THROW(representative({kFourGeneric, {}}), InvalidParameter);
  // (α, γ) = (1, -1) gives B = (1, -2, -1, 1, 1), where B_5 + B_7 = 0.
  EXPECT_THROW(representative({CaseLabel{CaseKind::FiveGeneric, {}, 0, 0}, {Scalar(1), Scalar(-1)}}),
               InvalidParameter);
}

TEST(Representative, EveryFiveSingleRotationIsConsistent) {
  for (int l : kOddIndices) {
    const auto m = representative(five_single(l, 3));
    EXPECT_EQ(classify_case(m), (CaseLabel{CaseKind::FiveSingle, {}, 0, l}));
    EXPECT_EQ(*invariant(m).value, Scalar(16));
  }
}

TEST(Invariant, Examples) {
  const auto inv = invariant(representative({kFourGeneric, {Scalar(2)}}));
  EXPECT_EQ(inv.value_name, "beta_squared");
  EXPECT_EQ(*inv.value, Scalar(4));
  const auto five = invariant(representative(five_single(3, 3)));
  EXPECT_EQ(five.value_name, "one_plus_beta_squared");
  EXPECT_EQ(*five.value, Scalar(16));
  const auto three = invariant(Rank2Module(CoeffTuple::from_sums({1, 0, 1, 0, -2})));
  EXPECT_EQ(three.label, (CaseLabel{CaseKind::Three, {1, 5, 9}, 0, 0}));
  EXPECT_FALSE(three.value.has_value());
  EXPECT_THROW(invariant(Rank2Module(CoeffTuple::from_sums({0, 0, 0, 0, 0}))), NotIndecomposable);
}

TEST(Invariant, FourGenericModuliAgreeWithOracle) {
  const std::vector<int> betas{2, 3, 5, -2, -3};
  for (int b : betas)
    for (int g : betas) {
      const auto mb = representative({kFourGeneric, {Scalar(b)}}, 4);
      const auto mg = representative({kFourGeneric, {Scalar(g)}}, 4);
      const bool want = b * b == g * g;
      EXPECT_EQ(decide_isomorphic(mb, mg).isomorphic, want);
      EXPECT_EQ(iso_oracle(mb, mg, 4).isomorphic, want) << b << " " << g;
      EXPECT_EQ(invariant(mb) == invariant(mg), want);
    }
}

TEST(Invariant, FiveSingleModuliAtEveryRotation) {
  const std::vector<int> betas{1, 2, -3, -4};
  for (int l : {1, 7})
    for (int b : betas)
      for (int g : betas) {
        const auto mb = representative(five_single(l, b), 4), mg = representative(five_single(l, g), 4);
        const bool want = (1 + b) * (1 + b) == (1 + g) * (1 + g);
        EXPECT_EQ(decide_isomorphic(mb, mg).isomorphic, want);
        EXPECT_EQ(iso_oracle(mb, mg, 4).isomorphic, want) << l << ": " << b << " " << g;
      }
}

TEST(Invariant, IsAnIsomorphismInvariant) {
  testkit::Rng rng(51);
  for (const auto kind : testkit::indecomposable_kinds()) {
    if (kind == CaseKind::FiveGeneric) continue;
    for (int k = 0; k < 15; ++k) {
      const auto s = testkit::sums_of_kind(kind, rng);
      const auto c = k % 2 ? testkit::related_sums(s, rng) : std::optional(testkit::sums_with_profile(s, rng));
      if (!c) continue;
      const Rank2Module a(testkit::lift_sums(s, rng, 4)), b(testkit::lift_sums(*c, rng, 4));
      EXPECT_EQ(invariant(a) == invariant(b), decide_isomorphic(a, b).isomorphic) << case_kind_name(kind);
    }
  }
}

TEST(Invariant, MatchesTheFamilyParameter) {
  testkit::Rng rng(52);
  for (int k = 0; k < 10; ++k) {
    const auto s = testkit::sums_of_kind(CaseKind::FourGeneric, rng);
    const Rank2Module m(testkit::lift_sums(s, rng, 4));
    const auto label = classify_case(m);
    const auto inv = invariant(m);
    // When β² is a rational square, M is isomorphic to M_β at the same positions.
    mpz_class num = inv.value->get_num(), den = inv.value->get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) continue;
    const Scalar beta(mpz_class(sqrt(num)), mpz_class(sqrt(den)));
    if (beta == 1) continue;
    const auto rep = representative({CaseLabel{CaseKind::FourGeneric, label.indices, 0, 0}, {beta}}, 4);
    EXPECT_TRUE(decide_isomorphic(m, rep).isomorphic);
    EXPECT_TRUE(iso_oracle(m, rep, 4).isomorphic);
  }
}

TEST(RigidClasses, CountsAndPairwiseDistinct) {
  const auto points = enumerate_rigid_classes();
  ASSERT_EQ(points.size(), 25u);
  int three = 0, split = 0, dbl = 0;
  std::vector<Rank2Module> reps;
  for (const auto& p : points) {
    three += p.label.kind == CaseKind::Three;
    split += p.label.kind == CaseKind::FourSplit;
    dbl += p.label.kind == CaseKind::FiveDouble;
    reps.push_back(representative(p, 4));
    EXPECT_TRUE(is_indecomposable(reps.back()));
  }
  EXPECT_EQ(three, 10);
  EXPECT_EQ(split, 10);
  EXPECT_EQ(dbl, 5);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) EXPECT_FALSE(decide_isomorphic(reps[i], reps[j]).isomorphic);
}

TEST(RigidClasses, EveryModuleOfARigidCaseMatchesOneRepresentative) {
  testkit::Rng rng(53);
  const auto points = enumerate_rigid_classes();
  for (const auto kind : {CaseKind::Three, CaseKind::FourSplit, CaseKind::FiveDouble})
    for (int k = 0; k < 10; ++k) {
      const Rank2Module m(testkit::lift_sums(testkit::sums_of_kind(kind, rng), rng, 4));
      int matches = 0;
      for (const auto& p : points) matches += classify_case(m) == p.label;
      EXPECT_EQ(matches, 1);
    }
}
