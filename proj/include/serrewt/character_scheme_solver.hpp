// Borel characters theta, the character sets Phi(theta) and Omega_e(theta),
// the four-case parameter solver and the intersection computation behind the
// level-2s result for irreducible local representations.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "serrewt/character_matching.hpp"
#include "serrewt/serre_weights.hpp"

namespace serrewt {

// nu_S(tau_j) in {0, 1}: membership in S of tau_j itself, of its successor
// tau_{j+1}, or of its predecessor tau_{j-1}.
enum class NuConvention { Self, Successor, Predecessor };

std::string to_string(NuConvention nu);
NuConvention parse_nu_convention(const std::string& text);
int nu_value(NuConvention nu, const std::set<int>& S, int j, int s);

// theta(diag(a, d) n) = prod_j tau_j(ad)^{w'_j} tau_j(d)^{k'_j - 2}, stored by
// the digits (w', k') that produced it. Digits may leave the weight ranges
// (for example k'_j - 2 = -1), so they are kept verbatim.
struct BorelCharacter {
  int p = 0;
  std::vector<int> wp;
  std::vector<int> kp;

  auto operator<=>(const BorelCharacter&) const = default;
};

// Canonical level-s exponents (u, v) of theta = prod tau(a)^u tau(d)^v.
std::pair<i64, i64> borel_exponents(const BorelCharacter& theta);
bool same_character(const BorelCharacter& x, const BorelCharacter& y);

// c_j = sum_t p^t (k'_{j-t} - 2).
std::vector<i64> c_values(const BorelCharacter& theta);
// True when 0 < c_j < p^s - 1 for every j.
bool is_nontrivial_theta(const BorelCharacter& theta);

// theta_T for every T subset of I, after normalizing w = 0. Returns the
// single trivial character when every k_j = 2.
std::vector<BorelCharacter> theta_family(const SerreWeight& sigma, const LocalParams& params,
                                         NuConvention nu = NuConvention::Successor);

enum class SchemeCase { Case1 = 1, Case2 = 2, Case3 = 3, Case4 = 4 };

struct CaseSolution {
  i64 a = 0;
  i64 a_prime = 0;
  auto operator<=>(const CaseSolution&) const = default;
};

// Case from (b_i, b_{i+1}): (0, c) -> 1, (c, 0) -> 2, (0, 0) -> 3, (c, c) -> 4.
SchemeCase classify_case(bool b_i_zero, bool b_next_zero);

// Tabulated solutions (a_i, a'_i) of a'_i = b_{i+1} - p b_i + (p^s - 1) a_i
// with 0 <= a'_i <= e (p^s - 1), given c_i, c_{i+1} and k_{i+1}.
std::vector<CaseSolution> solve_case(SchemeCase which, i64 c_i, i64 c_next, int k_next,
                                     const LocalParams& params);

// Unordered pairs {phi, phi^q} are represented by the smaller canonical
// level-2s exponent.
using CharacterPairSet = std::set<i64>;
i64 pair_key(i64 exponent, const LocalParams& params);

// Phi(theta) from the (S, epsilon, delta) data. Throws for trivial theta.
CharacterPairSet phi_set(const BorelCharacter& theta, const LocalParams& params,
                         NuConvention nu = NuConvention::Successor);

// Exponent a_{i-1} of psi_i from the six-row table, given whether
// b_{i-1} and b_i vanish.
i64 omega_exponent(bool b_prev_zero, bool b_cur_zero, int k_i, int delta_prime,
                   bool successor_in_s_prime, int e);

// Omega_e(theta) from the (S', r, delta') data. Throws for trivial theta.
CharacterPairSet omega_set(const BorelCharacter& theta, const LocalParams& params);

// Membership in the lattice spanned by the cyclic shifts of
// (p, 0, ..., 0, -1), tested by sum_i v_i p^{s-i} = 0 mod p^s - 1.
bool lattice_member(const std::vector<i64>& v, int p);

// mu_i = a_i + a_{i+s} - (k_{i+1} - 2 + e) for a vector a over Z/2sZ.
std::vector<i64> mu_vector(const std::vector<i64>& a, const std::vector<int>& k, int e);

// Intersection of Phi(theta) over theta_family(sigma), twisted back by the
// w-digits of sigma. Routes all-k = 2 weights to trivial_theta_set.
CharacterPairSet intersection_phi(const SerreWeight& sigma, const LocalParams& params,
                                  NuConvention nu = NuConvention::Successor);

// All phi = prod psi_i^{a_i} with a_i in [0, e] satisfying
// phi^{q+1} = prod psi_i^{2w + k - 2 + e}, twisted by the w-digits.
CharacterPairSet trivial_theta_set(const SerreWeight& sigma, const LocalParams& params);

// The displayed target set prod lambda^w psi_lift^{k-1+delta} psi_other^{e-1-delta}.
CharacterPairSet displayed_character_set(const SerreWeight& sigma, const LocalParams& params);

}  // namespace serrewt
