#include <gtest/gtest.h>

#include "degenkit/arrangement.hpp"
#include "degenkit/errors.hpp"
#include "support/oracles.hpp"

namespace {

using degenkit::BigInt;
using degenkit::grothring::GrothClass;
namespace gr = degenkit::grothring;

TEST(Binomial, MatchesPascal) {
  for (int n = 0; n <= 40; ++n) {
    for (int k = -1; k <= n + 1; ++k) EXPECT_EQ(gr::binomial(n, k), oracle::pascal_binomial(n, k)) << n << "," << k;
  }
}

TEST(Binomial, ExactBeyondSixtyFourBits) {
  // C(100, 50), digits fixed.
  EXPECT_EQ(gr::binomial(100, 50), BigInt("100891344545564193334812497256"));
}

TEST(ArrangementClass, SingleHyperplaneIsProjectiveSpace) {
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(gr::arrangement_class_closed(1, n), gr::proj_space_class(n));
    EXPECT_EQ(gr::arrangement_class_recursive(1, n), gr::proj_space_class(n));
  }
}

TEST(ArrangementClass, PointsOnALine) { EXPECT_EQ(gr::arrangement_class_closed(5, 0), GrothClass({5})); }

TEST(ArrangementClass, SmallExamples) {
  EXPECT_EQ(gr::arrangement_class_closed(2, 1), GrothClass({1, 2}));
  EXPECT_EQ(gr::arrangement_class_closed(3, 1), GrothClass({0, 3}));
  EXPECT_EQ(gr::arrangement_class_recursive(2, 1), GrothClass({1, 2}));
  EXPECT_EQ(gr::arrangement_class_inclusion_exclusion(2, 1), GrothClass({1, 2}));
  EXPECT_EQ(gr::arrangement_class_inclusion_exclusion(3, 1), GrothClass({0, 3}));
  EXPECT_EQ(gr::reduce_mod_L(gr::arrangement_class_inclusion_exclusion(3, 1)), 0);
  EXPECT_EQ(gr::reduce_mod_L(gr::arrangement_class_inclusion_exclusion(4, 2)), 2);
  EXPECT_EQ(gr::reduce_mod_L(gr::arrangement_class_closed(3, 2)), 1);
  EXPECT_EQ(gr::arrangement_class_recursive(4, 2), gr::arrangement_class_closed(4, 2));
}

TEST(ArrangementClass, ClosedMatchesSubsetSizeOracle) {
  for (int r = 1; r <= 14; ++r) {
    for (int n = 0; n <= 12; ++n) {
      EXPECT_EQ(oracle::coeffs_of(gr::arrangement_class_closed(r, n)), oracle::arrangement_by_subset_size(r, n))
          << "r=" << r << " n=" << n;
    }
  }
}

// Point counts of coordinate-hyperplane arrangements over small prime fields.
TEST(ArrangementClass, MatchesFiniteFieldPointCounts) {
  for (int n = 0; n <= 3; ++n) {
    for (int r = 1; r <= n + 2; ++r) {
      const GrothClass cls = gr::arrangement_class_closed(r, n);
      for (long long q : {2, 3, 5}) {
        EXPECT_EQ(cls.evaluate(q), oracle::coordinate_arrangement_points(r, n, q)) << "r=" << r << " n=" << n << " q=" << q;
      }
    }
  }
}

TEST(ArrangementClass, TripleAgreementGrid) {
  for (int r = 1; r <= 13; ++r) {
    for (int n = 0; n <= 12; ++n) {
      const auto closed = gr::arrangement_class_closed(r, n);
      EXPECT_EQ(closed, gr::arrangement_class_recursive(r, n)) << r << "," << n;
      EXPECT_EQ(closed, gr::arrangement_class_inclusion_exclusion(r, n)) << r << "," << n;
    }
  }
}

TEST(ArrangementClass, CongruenceModL) {
  for (int n = 0; n <= 12; ++n) {
    for (int r = 1; r <= n + 1; ++r) EXPECT_EQ(gr::reduce_mod_L(gr::arrangement_class_closed(r, n)), 1) << r << "," << n;
    EXPECT_EQ(gr::reduce_mod_L(gr::arrangement_class_closed(n + 2, n)), n % 2 == 0 ? 2 : 0) << n;
  }
}

TEST(ArrangementClass, LargeInputsAgree) {
  EXPECT_EQ(gr::arrangement_class_closed(30, 30), gr::arrangement_class_recursive(30, 30));
  EXPECT_EQ(gr::arrangement_class_closed(30, 12), gr::arrangement_class_inclusion_exclusion(30, 12));
}

TEST(ArrangementClass, RejectsBadArguments) {
  EXPECT_THROW(gr::arrangement_class_closed(0, 2), std::invalid_argument);
  EXPECT_THROW(gr::arrangement_class_recursive(2, -1), std::invalid_argument);
  EXPECT_THROW(gr::arrangement_class_inclusion_exclusion(0, 0), std::invalid_argument);
  EXPECT_THROW(gr::arrangement_class_inclusion_exclusion(31, 3), degenkit::ResourceLimitError);
}

TEST(BinomialCongruence, Examples) {
  EXPECT_EQ(gr::binomial_congruence_check(1, 0), 1);
  EXPECT_EQ(gr::binomial_congruence_check(4, 3), 1);
  EXPECT_EQ(gr::binomial_congruence_check(7, 10), 1);
  for (int n = 0; n <= 20; ++n)
    for (int r = 1; r <= n + 1; ++r) EXPECT_EQ(gr::binomial_congruence_check(r, n), 1);
  EXPECT_THROW(gr::binomial_congruence_check(5, 2), std::invalid_argument);
  EXPECT_THROW(gr::binomial_congruence_check(0, 2), std::invalid_argument);
}

}  // namespace
