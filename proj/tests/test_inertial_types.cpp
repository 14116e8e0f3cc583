#include <gtest/gtest.h>

#include "serrewt/inertial_types.hpp"

using namespace serrewt;

namespace {

// Oracle for the JH criterion: sigma is a constituent iff some labeling
// makes prod lambda^{w+k-2} prod psi_lift^{p+1-k} equal phi or phi^q.
WeightSet oracle_jh(i64 phi, int p, int s) {
  int n = 2 * s;
  i64 N = ipow(p, n) - 1;
  auto place = [&](int i) { return ipow(p, (n - i) % n) % N; };
  WeightSet out;
  for (const auto& sig : enumerate_weights(p, s)) {
    for (int lab = 0; lab < (1 << s); ++lab) {
      i64 E = 0;
      for (int j = 0; j < s; ++j) {
        int lift = ((lab >> j) & 1) ? j + s : j;
        E += (sig.w[j] + sig.k[j] - 2) * (place(j) + place(j + s));
        E += (p + 1 - sig.k[j]) * place(lift);
      }
      E = mod_floor(E, N);
      if (E == phi || E == mod_floor(phi * ipow(p, s), N)) out.insert(sig);
    }
  }
  return out;
}

}  // namespace

TEST(InertialTypes, SplitIsUnordered) {
  auto a = make_character(5, 1, 3);
  auto b = make_character(5, 1, 1);
  EXPECT_TRUE(same_type(make_split(a, b), make_split(b, a)));
  EXPECT_FALSE(same_type(make_split(a, a), make_split(a, b)));
}

TEST(InertialTypes, CuspidalIsPairOfConjugates) {
  auto t1 = make_cuspidal(make_character(5, 2, 2));
  auto t2 = make_cuspidal(make_character(5, 2, 10));
  EXPECT_TRUE(same_type(t1, t2));
  EXPECT_EQ(describe_type(t1), "Cuspidal(psi^2)");
  EXPECT_TRUE(same_rep(attach_v(t1), attach_v(t2)));
}

TEST(InertialTypes, CuspidalRejectsNonGenuine) {
  try {
    make_cuspidal(make_character(5, 2, 6));
    FAIL() << "expected rejection";
  } catch (const std::invalid_argument& ex) {
    EXPECT_NE(std::string(ex.what()).find("niveau 1"), std::string::npos) << ex.what();
  }
}

TEST(InertialTypes, AttachV) {
  auto lam = make_character(5, 1, 1);
  GenericFiberRep ps = attach_v(make_split(lam, lam));
  EXPECT_EQ(ps.kind, RepKind::PrincipalSeries);
  EXPECT_EQ(ps.chi1, lam);
  EXPECT_EQ(ps.chi2, lam);
  GenericFiberRep cr = attach_v(make_cuspidal(make_character(5, 2, 2)));
  EXPECT_EQ(cr.kind, RepKind::CuspidalRep);
}

TEST(InertialTypes, DeterminantOfTypes) {
  LocalParams P = make_params(5, 1, 2);
  (void)P;
  // phi^{q+1} = psi^{12} = lambda^2 for phi = psi^2.
  EXPECT_EQ(type_determinant(make_cuspidal(make_character(5, 2, 2))).exponent, 2);
  EXPECT_EQ(type_determinant(make_split(make_character(5, 1, 2), make_character(5, 1, 3))).exponent,
            1);
}

TEST(InertialTypes, JhExamples) {
  LocalParams P = make_params(5, 1, 2);
  EXPECT_EQ(format_weight_set(jh_constituents_cuspidal(make_character(5, 2, 2), P)),
            "F(1,1), F(4,2)");
  EXPECT_EQ(format_weight_set(jh_constituents_cuspidal(make_character(5, 2, 4), P)),
            "F(0,0), F(3,1)");
  EXPECT_EQ(format_weight_set(jh_constituents_cuspidal(make_character(5, 2, 10), P)),
            "F(1,1), F(4,2)");
}

TEST(InertialTypes, JhMatchesOracleAndInvariants) {
  for (int p : {3, 5}) {
    for (int s : {1, 2}) {
      LocalParams P = make_params(p, s, 1);
      i64 N = P.mod_2s();
      for (i64 M = 0; M < N; ++M) {
        TameCharacter phi = make_character(p, 2 * s, M);
        if (s % niveau(phi) == 0) continue;
        WeightSet jh = jh_constituents_cuspidal(phi, P);
        EXPECT_EQ(jh, oracle_jh(M, p, s)) << "p=" << p << " s=" << s << " M=" << M;
        EXPECT_EQ(jh, jh_constituents_cuspidal(power(phi, ipow(p, s)), P));
        EXPECT_GE(jh.size(), 1u);
        EXPECT_LE(jh.size(), static_cast<size_t>(1 << s));
        // phi^{q+1} = prod psi_i^{2w + k - 2}, read at level s.
        for (const auto& sig : jh) {
          i64 expect = 0;
          for (int j = 0; j < s; ++j) {
            expect += (2 * sig.w[j] + sig.k[j] - 2) * psi_exponent(p, s, j);
          }
          EXPECT_EQ(restrict_to_single(power(phi, P.q() + 1)), make_character(p, s, expect));
        }
      }
    }
  }
}
