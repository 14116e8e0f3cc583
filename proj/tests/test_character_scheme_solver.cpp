#include <gtest/gtest.h>

#include "serrewt/character_scheme_solver.hpp"

using namespace serrewt;

namespace {

std::vector<std::vector<int>> k_vectors(int p, int s) {
  std::vector<std::vector<int>> out;
  i64 total = ipow(p, s);
  for (i64 code = 0; code < total; ++code) {
    std::vector<int> k(s);
    i64 x = code;
    for (int j = 0; j < s; ++j) {
      k[j] = static_cast<int>(x % p) + 2;
      x /= p;
    }
    out.push_back(k);
  }
  return out;
}

// Oracle: integer solutions a of a' = b_next - p b_i + (p^s - 1) a with
// 0 <= a' <= e (p^s - 1), scanned over a generous window.
std::vector<CaseSolution> oracle_case(i64 b_i, i64 b_next, const LocalParams& P) {
  i64 M = P.mod_s();
  std::vector<CaseSolution> out;
  for (i64 a = -3 * P.p; a <= 3 * P.p + P.e; ++a) {
    i64 ap = b_next - P.p * b_i + M * a;
    if (ap >= 0 && ap <= P.e * M) out.push_back({a, ap});
  }
  return out;
}

// Oracle: integer span of the cyclic shifts of (p, 0, ..., 0, -1), by
// scanning bounded coefficient vectors.
bool oracle_lattice(const std::vector<i64>& v, int p) {
  int s = static_cast<int>(v.size());
  if (s == 1) return mod_floor(v[0], p - 1) == 0;
  int bound = 3 * p;
  int width = 2 * bound + 1;
  i64 total = ipow(width, s);
  for (i64 code = 0; code < total; ++code) {
    std::vector<i64> c(s);
    i64 x = code;
    for (int t = 0; t < s; ++t) {
      c[t] = x % width - bound;
      x /= width;
    }
    std::vector<i64> sum(s, 0);
    for (int t = 0; t < s; ++t) {
      sum[t] += p * c[t];
      sum[(t + s - 1) % s] -= c[t];
    }
    if (sum == v) return true;
  }
  return false;
}

}  // namespace

TEST(CharacterSchemeSolver, NuConventions) {
  std::set<int> S{1};
  EXPECT_EQ(nu_value(NuConvention::Self, S, 1, 3), 1);
  EXPECT_EQ(nu_value(NuConvention::Successor, S, 0, 3), 1);
  EXPECT_EQ(nu_value(NuConvention::Predecessor, S, 2, 3), 1);
  EXPECT_EQ(nu_value(NuConvention::Successor, S, 1, 3), 0);
  // At s = 1 all three readings coincide.
  for (auto nu : {NuConvention::Self, NuConvention::Successor, NuConvention::Predecessor}) {
    EXPECT_EQ(nu_value(nu, {0}, 0, 1), 1);
    EXPECT_EQ(nu_value(nu, {}, 0, 1), 0);
  }
  EXPECT_EQ(parse_nu_convention("predecessor"), NuConvention::Predecessor);
  EXPECT_THROW(parse_nu_convention("sideways"), std::invalid_argument);
}

TEST(CharacterSchemeSolver, ThetaFamilyAtDegreeOne) {
  LocalParams P = make_params(5, 1, 2);
  for (int k = 3; k <= 6; ++k) {
    SerreWeight sig = make_weight(5, {k}, {0});
    auto fam = theta_family(sig, P);
    std::set<std::pair<i64, i64>> got;
    for (const auto& th : fam) got.insert(borel_exponents(th));
    // T empty gives (k - 2, p - 1); T = {tau} gives (0, k - 2), mod p - 1.
    std::set<std::pair<i64, i64>> expect{{(k - 2) % 4, 0}, {0, (k - 2) % 4}};
    EXPECT_EQ(got, expect) << "k=" << k;
  }
  auto trivial = theta_family(make_weight(5, {2}, {0}), P);
  ASSERT_EQ(trivial.size(), 1u);
  EXPECT_EQ(borel_exponents(trivial[0]), (std::pair<i64, i64>{0, 0}));
}

TEST(CharacterSchemeSolver, CaseClassification) {
  EXPECT_EQ(classify_case(true, false), SchemeCase::Case1);
  EXPECT_EQ(classify_case(false, true), SchemeCase::Case2);
  EXPECT_EQ(classify_case(true, true), SchemeCase::Case3);
  EXPECT_EQ(classify_case(false, false), SchemeCase::Case4);
}

TEST(CharacterSchemeSolver, CaseTableExamples) {
  LocalParams P = make_params(5, 1, 2);
  auto as = [](const std::vector<CaseSolution>& v) {
    std::vector<i64> out;
    for (const auto& c : v) out.push_back(c.a);
    return out;
  };
  EXPECT_EQ(as(solve_case(SchemeCase::Case1, 2, 2, 4, P)), (std::vector<i64>{0, 1}));
  EXPECT_EQ(as(solve_case(SchemeCase::Case3, 2, 2, 4, P)), (std::vector<i64>{0, 1, 2}));
  EXPECT_EQ(as(solve_case(SchemeCase::Case2, 2, 2, 4, P)), (std::vector<i64>{3, 4}));
}

TEST(CharacterSchemeSolver, CaseTablesMatchBruteForce) {
  for (int p : {3, 5}) {
    for (int s : {1, 2}) {
      for (int e = 1; e <= p - 1; ++e) {
        LocalParams P = make_params(p, s, e);
        for (const auto& k : k_vectors(p, s)) {
          BorelCharacter th{p, std::vector<int>(s, 0), k};
          if (!is_nontrivial_theta(th)) continue;
          auto c = c_values(th);
          for (int i = 0; i < s; ++i) {
            int nx = (i + 1) % s;
            i64 ci = c[i];
            i64 cn = c[nx];
            EXPECT_EQ(solve_case(SchemeCase::Case1, ci, cn, k[nx], P), oracle_case(0, cn, P));
            EXPECT_EQ(solve_case(SchemeCase::Case2, ci, cn, k[nx], P), oracle_case(ci, 0, P));
            EXPECT_EQ(solve_case(SchemeCase::Case3, ci, cn, k[nx], P), oracle_case(0, 0, P));
            EXPECT_EQ(solve_case(SchemeCase::Case4, ci, cn, k[nx], P), oracle_case(ci, cn, P));
          }
        }
      }
    }
  }
}

TEST(CharacterSchemeSolver, OmegaTableRows) {
  EXPECT_EQ(omega_exponent(true, false, 4, 0, false, 2), 1);
  EXPECT_EQ(omega_exponent(false, true, 4, 1, false, 2), 4);
}

TEST(CharacterSchemeSolver, PhiSetExample) {
  LocalParams P = make_params(5, 1, 2);
  SerreWeight sig = make_weight(5, {4}, {0});
  for (const auto& th : theta_family(sig, P)) {
    CharacterPairSet phi = phi_set(th, P);
    EXPECT_TRUE(phi.count(pair_key(8, P)));
    EXPECT_TRUE(phi.count(pair_key(4, P)));
    EXPECT_EQ(phi, omega_set(th, P));
  }
  EXPECT_EQ(intersection_phi(sig, P), (CharacterPairSet{pair_key(4, P), pair_key(8, P)}));
}

TEST(CharacterSchemeSolver, PhiEqualsOmegaAtDegreeOne) {
  for (int p : {3, 5, 7}) {
    for (int e = 1; e <= p - 1; ++e) {
      LocalParams P = make_params(p, 1, e);
      for (const auto& sig : enumerate_weights(p, 1)) {
        if (sig.w[0] != 0) continue;
        for (const auto& th : theta_family(sig, P)) {
          if (!is_nontrivial_theta(th)) continue;
          EXPECT_EQ(phi_set(th, P), omega_set(th, P));
        }
      }
    }
  }
}

TEST(CharacterSchemeSolver, TrivialThetaMatchesFilter) {
  LocalParams P = make_params(5, 1, 2);
  SerreWeight sig = make_weight(5, {2}, {0});
  CharacterPairSet expect;
  // a_0, a_1 in [0, 2] with phi^{q+1} = psi^{(k - 2 + e)(q + 1)}.
  for (int a0 = 0; a0 <= 2; ++a0) {
    for (int a1 = 0; a1 <= 2; ++a1) {
      i64 E = a0 + 5 * a1;
      if (mod_floor(E * 6 - 2 * 6, 24) == 0) expect.insert(pair_key(E, P));
    }
  }
  EXPECT_EQ(trivial_theta_set(sig, P), expect);
  EXPECT_EQ(intersection_phi(sig, P), expect);
}

TEST(CharacterSchemeSolver, LatticeMembership) {
  EXPECT_TRUE(lattice_member({5, 0, -1}, 5));
  EXPECT_TRUE(lattice_member({0, 0}, 3));
  EXPECT_FALSE(lattice_member({1, 0}, 3));
  for (int p : {3, 5}) {
    for (int s : {1, 2, 3}) {
      if (p == 5 && s == 3) continue;
      int width = 2 * p + 1;
      for (i64 code = 0; code < ipow(width, s); ++code) {
        std::vector<i64> v(s);
        i64 x = code;
        for (int t = 0; t < s; ++t) {
          v[t] = x % width - p;
          x /= width;
        }
        EXPECT_EQ(lattice_member(v, p), oracle_lattice(v, p));
      }
    }
  }
}

TEST(CharacterSchemeSolver, MuVanishesOnDisplayedSolutions) {
  // a_i + a_{i+s} = k_{i+1} - 2 + e for the displayed exponents.
  std::vector<int> k{4, 3};
  int e = 2;
  for (int d0 = 0; d0 < e; ++d0) {
    for (int d1 = 0; d1 < e; ++d1) {
      std::vector<i64> a{k[1] - 1 + d1, k[0] - 1 + d0, e - 1 - d1, e - 1 - d0};
      EXPECT_EQ(mu_vector(a, k, e), (std::vector<i64>{0, 0}));
    }
  }
  EXPECT_THROW(mu_vector({1, 2}, k, e), std::invalid_argument);
}
