#include <gtest/gtest.h>

#include "support.hpp"
#include "tn2/algebra.hpp"

using namespace tn2;
using namespace tn2::testing;

TEST(Bracket, TableExamples) {
  EXPECT_EQ(bracket(L(1), L(-1)), L(0, 2));
  EXPECT_EQ(bracket(G(1), Q(-1)), L(0, 2) + H(0, 2));
  EXPECT_TRUE(bracket(H(3), H(5)).is_zero());
  EXPECT_EQ(bracket(Q(2), G(1)), L(3, 2) - H(3, 4));
}

TEST(Bracket, FullTable) {
  for (int m = -4; m <= 4; ++m) {
    for (int n = -4; n <= 4; ++n) {
      EXPECT_EQ(bracket(L(m), L(n)), L(m + n, m - n));
      EXPECT_EQ(bracket(L(m), H(n)), H(m + n, -n));
      EXPECT_EQ(bracket(L(m), G(n)), G(m + n, m - n));
      EXPECT_EQ(bracket(L(m), Q(n)), Q(m + n, -n));
      EXPECT_EQ(bracket(H(m), G(n)), G(m + n));
      EXPECT_EQ(bracket(H(m), Q(n)), Q(m + n, -1));
      EXPECT_EQ(bracket(G(m), Q(n)), L(m + n, 2) - H(m + n, 2 * n));
      EXPECT_TRUE(bracket(G(m), G(n)).is_zero());
      EXPECT_TRUE(bracket(Q(m), Q(n)).is_zero());
      EXPECT_TRUE(bracket(H(m), H(n)).is_zero());
    }
  }
}

TEST(Bracket, BilinearAndZero) {
  Element x = L(1, 2) + G(0, Scalar(1, 3));
  Element y = Q(-1) - H(2);
  EXPECT_EQ(bracket(x, y), Scalar(2) * bracket(L(1), Q(-1)) - Scalar(2) * bracket(L(1), H(2)) +
                               Scalar(1, 3) * bracket(G(0), Q(-1)) - Scalar(1, 3) * bracket(G(0), H(2)));
  EXPECT_TRUE(bracket(Element(), L(1)).is_zero());
}

TEST(Bracket, MixingAlgebrasThrows) {
  Element w = witt().element(Family::L, 1);
  EXPECT_THROW((void)bracket(w, L(2)), AlgebraError);
  EXPECT_THROW((void)witt().element(Family::G, 0), AlgebraError);
}

TEST(Jacobi, Examples) {
  Generator l0{Family::L, 0};
  EXPECT_TRUE(jacobi_defect(T(), l0, l0, l0).is_zero());
  EXPECT_TRUE(jacobi_defect(T(), {Family::L, 1}, {Family::G, 0}, {Family::Q, -1}).is_zero());
}

TEST(LinearCombine, Examples) {
  std::vector<std::pair<Scalar, Element>> a{{Scalar(1), L(0)}, {Scalar(-1), L(0)}};
  EXPECT_TRUE(linear_combine(a).is_zero());
  std::vector<std::pair<Scalar, Element>> b{{Scalar(2), L(0)}, {Scalar(3), H(1)}};
  EXPECT_EQ(linear_combine(b), L(0, 2) + H(1, 3));
  std::vector<std::pair<Scalar, Element>> c{{Scalar(1, 2), G(0, 2)}};
  EXPECT_EQ(linear_combine(c), G(0));
}

TEST(Axioms, TopologicalSweeps) {
  const IndexRange r{-3, 3};
  for (const auto& report : {check_super_skew(T(), r), check_super_jacobi(T(), r), check_grading(T(), r),
                             check_parity(T(), r)}) {
    EXPECT_TRUE(report.passed()) << report.check << ": " << report.counterexample.value_or("");
    EXPECT_GT(report.cases, 0u);
  }
}

TEST(Axioms, WittSweeps) {
  const IndexRange r{-5, 5};
  EXPECT_TRUE(check_super_skew(witt(), r).passed());
  EXPECT_TRUE(check_super_jacobi(witt(), r).passed());
  EXPECT_TRUE(check_grading(witt(), r).passed());
  EXPECT_EQ(witt().generators(r).size(), 11u);
}

TEST(Axioms, BrokenTableIsCaught) {
  // [L_m, L_n] = (m + n) L_{m+n} is neither skew nor Jacobi.
  AlgebraSpec broken("broken", {Family::L}, [](const Generator& x, const Generator& y)
                         -> std::optional<AlgebraSpec::Terms> {
    return AlgebraSpec::Terms{{Generator{Family::L, x.index + y.index}, Scalar(x.index + y.index)}};
  });
  auto skew = check_super_skew(broken, {-2, 2});
  EXPECT_FALSE(skew.passed());
  EXPECT_TRUE(skew.counterexample.has_value());
}

TEST(Generators, CanonicalOrderAndRanges) {
  auto gens = T().generators({-1, 1});
  ASSERT_EQ(gens.size(), 12u);
  EXPECT_TRUE(std::is_sorted(gens.begin(), gens.end()));
  EXPECT_EQ(parse_range("-5..5"), (IndexRange{-5, 5}));
  EXPECT_EQ(parse_range("0..0").size(), 1);
  EXPECT_THROW((void)parse_range("3..1"), std::invalid_argument);
  EXPECT_THROW((void)parse_range("1-3"), std::invalid_argument);
}
