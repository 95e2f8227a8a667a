#include <gtest/gtest.h>

#include "specoh/coxeter.hpp"
#include "specoh/errors.hpp"

using namespace specoh;

TEST(Coxeter, FaceIdentities) {
  for (const auto& g : enumerate_compositions(5, 4))
    for (int j = 1; j <= 2; ++j)
      for (int i = 0; i < j; ++i)
        EXPECT_EQ(coxeter_face(i, coxeter_face(j, g)), coxeter_face(j - 1, coxeter_face(i, g)));
  EXPECT_THROW(coxeter_face(3, enumerate_compositions(3, 3).front()), InvalidArgument);
}

TEST(Coxeter, CoboundarySquaresToZero) {
  for (int j = 2; j <= 6; ++j) {
    const CoxeterComplex cx(j);
    for (int p = -1; p + 1 <= j - 2; ++p) EXPECT_TRUE((cx.coboundary(p + 1) * cx.coboundary(p)).is_zero());
  }
}

TEST(Coxeter, ReducedCohomologyOfASphere) {
  for (int j = 1; j <= 6; ++j) {
    const auto dims = CoxeterComplex(j).cohomology_dimensions();
    ASSERT_EQ(dims.size(), static_cast<std::size_t>(j));
    for (std::size_t k = 0; k < dims.size(); ++k) EXPECT_EQ(dims[k], k + 1 == dims.size() ? 1u : 0u) << j;
  }
}

TEST(Coxeter, PermutationsActBySign) {
  for (int j = 2; j <= 5; ++j) {
    const CoxeterComplex cx(j);
    const Vector xi = cx.top_generator();
    EXPECT_FALSE(cx.top_is_coboundary(xi));
    for (const auto& sigma : all_permutations(j)) {
      Vector v = cx.act_on_top(sigma, xi);
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= Rational(sigma.sign()) * xi[k];
      EXPECT_TRUE(cx.top_is_coboundary(v)) << sigma.to_string();
    }
  }
}

TEST(Coxeter, LevelsAreCompositions) {
  const CoxeterComplex cx(4);
  EXPECT_EQ(cx.level(-1).size(), 1u);
  EXPECT_EQ(cx.level(0).size(), 14u);
  EXPECT_EQ(cx.level(2).size(), 24u);
  EXPECT_THROW(cx.level(3), InvalidArgument);
  for (std::size_t k = 0; k < cx.level(1).size(); ++k) EXPECT_EQ(cx.index_of(1, cx.level(1)[k]), k);
}
