// Exact arithmetic on characters of tame inertia written in fundamental
// characters psi_i of level n.
//
// Indexing convention: psi_{i-1} = psi_i^p, hence psi_i = psi_0^{p^{n-i}}.
// This is the opposite of the convention psi_{i+1} = psi_i^p used elsewhere
// in the literature; only the convention below is supported.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace serrewt {

using i64 = std::int64_t;

// Documents the single supported indexing convention (see file comment).
inline constexpr bool kFrobeniusLowersIndex = true;

// Local data at the place: residue characteristic p, residue degree s,
// ramification index e.
struct LocalParams {
  int p = 0;
  int s = 0;
  int e = 0;

  i64 q() const;       // p^s
  i64 mod_s() const;   // p^s - 1, modulus for level-s exponents
  i64 mod_2s() const;  // p^{2s} - 1, modulus for level-2s exponents
};

bool is_prime(int n);

// Validates p prime >= 3, s >= 1, e >= 1 and a size bound keeping p^{2s}
// inside comfortable 64-bit range. Throws std::invalid_argument.
LocalParams make_params(int p, int s, int e);

i64 ipow(i64 base, int exp);

// Representative of a mod m in [0, m - 1] for any sign of a.
i64 mod_floor(i64 a, i64 m);

// Canonical psi_0-exponent of psi_i at level n, that is p^{(n-i) mod n}.
i64 psi_exponent(int p, int n, int i);

// Canonical exponent of lambda_j (level s) viewed at level 2s, which is
// psi_j * psi_{j+s}.
i64 lambda_exponent_double(int p, int s, int j);

// A character of tame inertia of level n, stored by its canonical exponent
// M in [0, p^n - 2] with respect to psi_0.
struct TameCharacter {
  int p = 0;
  int level = 0;
  i64 exponent = 0;

  auto operator<=>(const TameCharacter&) const = default;
};

// Sum of m_i p^{n-i} reduced mod p^n - 1.
i64 canonical_exponent(const std::vector<i64>& m, int n, int p);

TameCharacter make_character(int p, int level, i64 exponent);
TameCharacter character_from_vector(int p, const std::vector<i64>& m);

// chi -> chi^p.
TameCharacter frobenius_twist(const TameCharacter& chi);

// Smallest divisor d of the level with M p^d = M mod p^n - 1.
int niveau(const TameCharacter& chi);

// Group operations. mul throws std::invalid_argument on level or prime
// mismatch.
TameCharacter mul(const TameCharacter& a, const TameCharacter& b);
TameCharacter inv(const TameCharacter& chi);
TameCharacter power(const TameCharacter& chi, i64 k);

// Inflation from level s to level 2s: M -> (q + 1) M.
TameCharacter inflate_to_double(const TameCharacter& chi);

// Inverse of inflation for a level-2s character of niveau dividing s.
// Throws std::invalid_argument when the character is genuine at level 2s.
TameCharacter restrict_to_single(const TameCharacter& chi);

std::string to_string(const TameCharacter& chi);

}  // namespace serrewt
