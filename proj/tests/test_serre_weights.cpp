#include <gtest/gtest.h>

#include <set>

#include "serrewt/serre_weights.hpp"

using namespace serrewt;

namespace {

// Oracle: every digit tuple (k, w) with w not all p - 1.
std::vector<std::pair<std::vector<int>, std::vector<int>>> oracle_digits(int p, int s) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  i64 total = ipow(p, 2 * s);
  for (i64 code = 0; code < total; ++code) {
    std::vector<int> k(s);
    std::vector<int> w(s);
    i64 x = code;
    for (int j = 0; j < s; ++j) {
      k[j] = static_cast<int>(x % p) + 2;
      x /= p;
      w[j] = static_cast<int>(x % p);
      x /= p;
    }
    bool all_top = true;
    for (int v : w) all_top = all_top && v == p - 1;
    if (!all_top) out.emplace_back(k, w);
  }
  return out;
}

WeightSet oracle_from_residues(i64 c, i64 d, const LocalParams& P) {
  WeightSet out;
  i64 M = P.mod_s();
  for (const auto& w : enumerate_weights(P.p, P.s)) {
    if (mod_floor(w.a - c, M) == 0 && mod_floor(w.b - d, M) == 0) out.insert(w);
  }
  return out;
}

}  // namespace

TEST(SerreWeights, EnumerationCountsAndDistinctness) {
  EXPECT_EQ(enumerate_weights(5, 1).size(), 20u);
  EXPECT_EQ(enumerate_weights(3, 1).size(), 6u);
  EXPECT_EQ(enumerate_weights(3, 2).size(), 72u);
  for (int p : {3, 5}) {
    for (int s : {1, 2}) {
      const auto& all = enumerate_weights(p, s);
      std::set<std::pair<i64, i64>> ab;
      for (const auto& w : all) ab.insert({w.a, w.b});
      EXPECT_EQ(ab.size(), all.size());
      EXPECT_EQ(static_cast<i64>(all.size()), (ipow(p, s) - 1) * ipow(p, s));
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    }
  }
}

TEST(SerreWeights, EnumerationMatchesDigitOracle) {
  for (int p : {3, 5}) {
    for (int s : {1, 2}) {
      std::set<SerreWeight> from_oracle;
      for (const auto& [k, w] : oracle_digits(p, s)) from_oracle.insert(make_weight(p, k, w));
      const auto& all = enumerate_weights(p, s);
      EXPECT_EQ(from_oracle, std::set<SerreWeight>(all.begin(), all.end()));
    }
  }
}

TEST(SerreWeights, DistinctEndpointsOfSameClass) {
  SerreWeight lo = make_weight(5, {2}, {0});
  SerreWeight hi = make_weight(5, {6}, {0});
  EXPECT_EQ(format_weight(lo), "F(0,0)");
  EXPECT_EQ(format_weight(hi), "F(4,0)");
  EXPECT_FALSE(lo == hi);
  EXPECT_THROW(make_weight(5, {2}, {4}), std::invalid_argument);
  EXPECT_THROW(make_weight(5, {7}, {0}), std::invalid_argument);
}

TEST(SerreWeights, FromResiduesExamples) {
  LocalParams P = make_params(5, 1, 1);
  EXPECT_EQ(format_weight_set(weights_from_residues(0, 0, P)), "F(0,0), F(4,0)");
  EXPECT_EQ(format_weight_set(weights_from_residues(3, 1, P)), "F(3,1)");
  EXPECT_EQ(format_weight_set(weights_from_residues(1, 1, make_params(3, 1, 1))), "F(1,1), F(3,1)");
}

TEST(SerreWeights, FromResiduesMatchesScan) {
  for (int p : {3, 5}) {
    for (int s : {1, 2}) {
      LocalParams P = make_params(p, s, 1);
      i64 M = P.mod_s();
      for (i64 c = -M; c < 2 * M; c += 1) {
        for (i64 d = 0; d < M; ++d) {
          EXPECT_EQ(weights_from_residues(c, d, P), oracle_from_residues(c, d, P));
        }
      }
    }
  }
}

TEST(SerreWeights, ResidueRoundTrip) {
  for (int p : {3, 5}) {
    for (int s : {1, 2}) {
      LocalParams P = make_params(p, s, 1);
      for (const auto& w : enumerate_weights(p, s)) {
        EXPECT_TRUE(weights_from_residues(w.a, w.b, P).count(w));
      }
    }
  }
}

TEST(SerreWeights, AlphaProfile) {
  EXPECT_EQ(alpha_profile(make_weight(5, {2}, {0})), std::vector<int>{4});
  EXPECT_EQ(alpha_profile(make_weight(5, {4}, {1})), std::vector<int>{2});
  EXPECT_EQ(alpha_profile(make_weight(5, {6, 2}, {0, 0})), (std::vector<int>{0, 4}));
}

TEST(SerreWeights, DeterminantExamples) {
  LocalParams P = make_params(5, 1, 2);
  EXPECT_EQ(det_exponent(parse_weight("F(0,0)", 5, 1), P).exponent, 2);
  EXPECT_EQ(det_exponent(parse_weight("F(3,1)", 5, 1), P).exponent, 2);
  for (const char* w : {"F(0,0)", "F(3,1)", "F(5,3)", "F(4,0)"}) {
    EXPECT_EQ(det_exponent(parse_weight(w, 5, 1), P).exponent, 2) << w;
  }
  EXPECT_EQ(det_exponent(parse_weight("F(0,0)", 5, 1), make_params(5, 1, 4)).exponent, 0);
}

TEST(SerreWeights, DeterminantFilterPartitionsWeights) {
  for (int p : {3, 5}) {
    for (int s : {1, 2}) {
      LocalParams P = make_params(p, s, 2);
      size_t total = 0;
      for (i64 D = 0; D < P.mod_s(); ++D) {
        WeightSet set = weights_with_determinant(make_character(p, s, D), P);
        for (const auto& w : set) EXPECT_EQ(det_exponent(w, P).exponent, D);
        total += set.size();
      }
      EXPECT_EQ(total, enumerate_weights(p, s).size());
    }
  }
}

TEST(SerreWeights, ParseAcceptsUnreducedTwist) {
  EXPECT_EQ(parse_weight("F(6,4)", 5, 1), parse_weight("F(2,0)", 5, 1));
  EXPECT_EQ(parse_weight("F(7,3)", 5, 1).k, std::vector<int>{6});
  EXPECT_THROW(parse_weight("F(1,3)", 5, 1), std::invalid_argument);
  EXPECT_THROW(parse_weight("G(1,1)", 5, 1), std::invalid_argument);
}
