#include <gtest/gtest.h>

#include <random>

#include "parity_forge/dissection.hpp"
#include "parity_forge/special_series.hpp"
#include "support.hpp"

using namespace parity_forge;

TEST(dissection, extract_relabels) {
  const series s = make_series({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, 10);
  EXPECT_EQ(extract(s, 3, 1), make_series({1, 4, 7, 10}, 3));
  EXPECT_EQ(extract(s, 3, 2), make_series({2, 5, 8}, 2));
  EXPECT_EQ(extract(s, 1, 0), s);
}

TEST(dissection, component_keeps_exponents) {
  EXPECT_EQ(component(theta_D(9), 3, 1), make_series({0, -2, 0, 0, 2}, 9));
  EXPECT_EQ(component(theta_D(9), 3, 0), make_series({1, 0, 0, 0, 0, 0, 0, 0, 0, -2}, 9));
}

TEST(dissection, rejects_bad_progressions) {
  const series s = make_series({1, 2, 3}, 2);
  EXPECT_THROW(extract(s, 0, 0), std::invalid_argument);
  EXPECT_THROW(extract(s, 3, 3), std::invalid_argument);
  EXPECT_THROW(extract(s, 5, 4), std::out_of_range);
  EXPECT_THROW(component(s, 2, 2), std::invalid_argument);
}

class dissection_properties : public ::testing::TestWithParam<unsigned> {
 protected:
  std::mt19937_64 rng{GetParam()};
};

TEST_P(dissection_properties, components_reassemble) {
  const series s = pf_test::random_series(rng, 101);
  for (std::size_t m : {2u, 3u, 7u, 27u}) {
    series sum = series::zero(integer_ring{}, s.order());
    for (std::size_t r = 0; r < m; ++r) sum = sum + component(s, m, r);
    EXPECT_EQ(sum, s) << "m=" << m;
  }
}

TEST_P(dissection_properties, components_are_disjoint) {
  const series s = pf_test::random_series(rng, 60);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t t = 0; t < 3; ++t) {
      if (r == t) continue;
      const series a = component(s, 3, r), b = component(s, 3, t);
      for (std::size_t e = 0; e <= s.order(); ++e) {
        EXPECT_TRUE(a.coeff(e) == 0 || b.coeff(e) == 0);
      }
    }
  }
}

TEST_P(dissection_properties, extract_undoes_dilate_and_shift) {
  const series s = pf_test::random_series(rng, 90);
  for (std::size_t m : {2u, 3u, 9u}) {
    const series d = dilate(s, m);
    EXPECT_EQ(extract(d, m, 0), truncate(s, d.order() / m));
    for (std::size_t r = 1; r < m; ++r) EXPECT_TRUE(extract(d, m, r).is_zero());
    const series shifted = shift(d, 1);
    EXPECT_EQ(extract(shifted, m, 1), truncate(s, (d.order() - 1) / m));
  }
}

TEST_P(dissection_properties, extract_of_component_matches_extract) {
  const series s = pf_test::random_series(rng, 80);
  EXPECT_EQ(extract(component(s, 3, 2), 3, 2), extract(s, 3, 2));
}

INSTANTIATE_TEST_SUITE_P(seeds, dissection_properties, ::testing::Values(5u, 6u, 77u));
