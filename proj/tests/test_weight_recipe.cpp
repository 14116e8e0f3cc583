#include <gtest/gtest.h>

#include "serrewt/character_matching.hpp"
#include "serrewt/interval_combinatorics.hpp"
#include "serrewt/weight_recipe.hpp"

using namespace serrewt;

namespace {

SerreWeight W(const char* text, int p = 5, int s = 1) { return parse_weight(text, p, s); }

// Oracle: scan every integer shift for the window condition.
int oracle_x(int alpha, int delta, int p, int e) {
  int found = 99;
  for (int x = -5; x <= 5; ++x) {
    int v = alpha + x * p;
    if (v >= 1 + 2 * delta - (e - 1) && v <= p + 2 * delta - (e - 1)) {
      EXPECT_EQ(found, 99) << "window admits two shifts";
      found = x;
    }
  }
  return found;
}

SerreWeight weight_with_alpha(const std::vector<int>& alpha, int p) {
  std::vector<int> k;
  for (int a : alpha) k.push_back(p + 1 - a);
  return make_weight(p, k, std::vector<int>(alpha.size(), 0));
}

}  // namespace

TEST(WeightRecipe, XVectorExamples) {
  EXPECT_EQ(x_vector(W("F(4,0)"), {0}, make_params(5, 1, 1)).x, std::vector<int>{1});
  EXPECT_EQ(x_vector(W("F(0,0)"), {0}, make_params(5, 1, 2)).x, std::vector<int>{0});
  EXPECT_EQ(x_vector(W("F(4,0)"), {1}, make_params(5, 1, 2)).x, std::vector<int>{1});
}

TEST(WeightRecipe, XVectorMatchesOracle) {
  for (int p : {3, 5, 7}) {
    for (int e = 1; e <= p - 1; ++e) {
      LocalParams P = make_params(p, 1, e);
      for (int d = 0; d < e; ++d) {
        for (int a = 0; a < p; ++a) {
          int x = x_vector_from_alpha({a}, {d}, P).x[0];
          EXPECT_EQ(x, oracle_x(a, d, p, e));
          EXPECT_GE(x, -1);
          EXPECT_LE(x, 1);
        }
      }
    }
  }
}

TEST(WeightRecipe, DeltaRegularity) {
  EXPECT_TRUE(is_delta_regular(W("F(1,1)"), {0}, make_params(5, 1, 2)));
  EXPECT_FALSE(is_delta_regular(W("F(4,0)"), {0}, make_params(5, 1, 1)));
  // p = 3, e = 2, delta = 1: window [2, 4], so only alpha = 2 is regular.
  LocalParams P = make_params(3, 1, 2);
  for (const auto& sig : enumerate_weights(3, 1)) {
    int a = alpha_profile(sig)[0];
    EXPECT_EQ(is_delta_regular(sig, {1}, P), oracle_x(a, 1, 3, 2) == 0);
  }
}

TEST(WeightRecipe, ThetaCarry) {
  EXPECT_EQ(theta_carry({1}), std::vector<int>{1});
  EXPECT_EQ(theta_carry({1, 0}), (std::vector<int>{1, 1}));
  EXPECT_EQ(theta_carry({1, -1}), (std::vector<int>{-1, 1}));
  EXPECT_THROW(theta_carry({0, 0}), std::logic_error);
}

TEST(WeightRecipe, ScriptSExamples) {
  EXPECT_EQ(script_s_sets(W("F(1,1)"), {0}, make_params(5, 1, 2)), (SubsetCollection{{}}));
  EXPECT_EQ(script_s_sets(W("F(4,0)"), {0}, make_params(5, 1, 1)), (SubsetCollection{{}, {0}}));
  // alpha = (0, 4) gives x = (1, 0). Only j = 1 sees x_{j+1} = x_0 = 1, and
  // the interval side agrees: [[0,0]] has predecessor 1.
  LocalParams P2 = make_params(5, 2, 1);
  EXPECT_EQ(script_s_sets(weight_with_alpha({0, 4}, 5), {0, 0}, P2), (SubsetCollection{{}, {1}}));
  EXPECT_EQ(s_sets_via_intervals({0, 4}, {0, 0}, P2), (SubsetCollection{{}, {1}}));
}

TEST(WeightRecipe, ScriptSDependsOnlyOnDifference) {
  for (int p : {3, 5}) {
    for (int s : {1, 2}) {
      for (int e = 1; e <= p - 1; ++e) {
        LocalParams P = make_params(p, s, e);
        for (const auto& d : all_deltas(s, e)) {
          for (const auto& sig : enumerate_weights(p, s)) {
            SubsetCollection got = script_s_sets(sig, d, P);
            EXPECT_TRUE(got.count({}));
            if (is_delta_regular(sig, d, P)) EXPECT_EQ(got, SubsetCollection{{}});
            SerreWeight base = make_weight(p, sig.k, std::vector<int>(s, 0));
            EXPECT_EQ(got, script_s_sets(base, d, P));
          }
        }
      }
    }
  }
}

TEST(WeightRecipe, RDeltaExamples) {
  LocalParams P = make_params(5, 1, 2);
  EXPECT_EQ(format_weight_set(r_delta(W("F(1,1)"), {1}, P)), "F(3,1)");
  EXPECT_EQ(format_weight_set(r_delta(W("F(1,1)"), {0}, P)), "F(0,0), F(4,0)");
  EXPECT_EQ(format_weight_set(r_delta(W("F(4,2)"), {0}, P)), "F(5,3)");
}

TEST(WeightRecipe, PredictedFixtureExamples) {
  LocalParams P = make_params(5, 1, 2);
  EXPECT_EQ(format_weight_set(predicted_weight_set(make_cuspidal(make_character(5, 2, 2)), P)),
            "F(0,0), F(4,0), F(3,1), F(5,3)");
  EXPECT_EQ(format_weight_set(predicted_weight_set(make_cuspidal(make_character(5, 2, 4)), P)),
            "F(2,0), F(4,2), F(3,3), F(7,3)");
  auto lam = make_character(5, 1, 1);
  EXPECT_EQ(format_weight_set(predicted_weight_set(make_split(lam, lam), P)),
            "F(0,0), F(4,0), F(3,1)");
}

TEST(WeightRecipe, RejectsNonGenuineAndBadDelta) {
  LocalParams P = make_params(5, 1, 2);
  InertialType fake{TypeKind::Cuspidal, {}, {}, make_character(5, 2, 6)};
  EXPECT_THROW(predicted_weight_set(fake, P), std::invalid_argument);
  InertialType t = make_cuspidal(make_character(5, 2, 2));
  EXPECT_THROW(predicted_weight_set_for_delta(t, {2}, P), std::invalid_argument);
  EXPECT_THROW(predicted_weight_set_for_delta(t, {0}, make_params(5, 1, 5)), std::invalid_argument);
}

TEST(WeightRecipe, UnramifiedAgreesWithClosedForm) {
  // At e = 1 the recipe and the closed form must agree for every type.
  for (int p : {3, 5}) {
    for (int s : {1, 2}) {
      LocalParams P = make_params(p, s, 1);
      for (i64 M = 0; M < P.mod_2s(); ++M) {
        TameCharacter phi = make_character(p, 2 * s, M);
        if (s % niveau(phi) == 0) continue;
        InertialType t = make_cuspidal(phi);
        EXPECT_EQ(predicted_weight_set(t, P), closed_form_weight_set(t, P)) << "M=" << M;
      }
    }
  }
}

TEST(WeightRecipe, PredictionInvariances) {
  LocalParams P = make_params(5, 1, 3);
  for (i64 M = 0; M < P.mod_2s(); ++M) {
    TameCharacter phi = make_character(5, 2, M);
    if (niveau(phi) == 1) continue;
    EXPECT_EQ(predicted_weight_set(make_cuspidal(phi), P),
              predicted_weight_set(make_cuspidal(power(phi, 5)), P));
  }
  for (i64 a = 0; a < 4; ++a) {
    for (i64 b = 0; b < 4; ++b) {
      auto x = make_character(5, 1, a);
      auto y = make_character(5, 1, b);
      EXPECT_EQ(predicted_weight_set(make_split(x, y), P), predicted_weight_set(make_split(y, x), P));
    }
  }
}

TEST(WeightRecipe, LargeEIsDeterminantFilter) {
  for (int e : {5, 6, 9}) {
    LocalParams P = make_params(5, 1, e);
    InertialType t = make_cuspidal(make_character(5, 2, 2));
    WeightSet got = predicted_weight_set(t, P);
    WeightSet expect;
    for (const auto& w : enumerate_weights(5, 1)) {
      if (det_exponent(w, P) == type_determinant(t)) expect.insert(w);
    }
    EXPECT_EQ(got, expect);
  }
}
