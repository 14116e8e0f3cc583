// Serre weights F(a,b) at a place with residue field of size p^s.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "serrewt/tame_characters.hpp"

namespace serrewt {

// det^{w_j} Sym^{k_j - 2} over all embeddings j in Z/sZ, stored by digits.
// Derived presentation: b = sum w_j p^{s-j}, a - b = sum (k_j - 2) p^{s-j}
// reduced mod p^s - 1, except that all k_j = 2 gives a - b = 0 and all
// k_j = p + 1 gives a - b = p^s - 1.
struct SerreWeight {
  int p = 0;
  std::vector<int> k;
  std::vector<int> w;
  i64 a = 0;
  i64 b = 0;

  int s() const { return static_cast<int>(k.size()); }
  i64 r() const { return a - b; }
};

// Total order by (b, a - b), then by digits; equality is digit equality.
bool operator<(const SerreWeight& x, const SerreWeight& y);
bool operator==(const SerreWeight& x, const SerreWeight& y);

using WeightSet = std::set<SerreWeight>;

// Throws std::invalid_argument if a digit is out of range or all w_j = p - 1.
SerreWeight make_weight(int p, std::vector<int> k, std::vector<int> w);

// Printed form F(a,b).
std::string format_weight(const SerreWeight& sigma);
std::string format_weight_set(const WeightSet& set, const std::string& sep = ", ");

// Digits d_j with value = sum d_j p^{s-j} mod p^s - 1, d_j in [0, p-1], not all
// equal to p - 1.
std::vector<int> residue_digits(i64 value, int p, int s);

// Weights F(a,b) with b = d and a = c mod p^s - 1. Returns both F(b,b) and
// F(b + p^s - 1, b) when c = d.
WeightSet weights_from_residues(i64 c, i64 d, const LocalParams& params);

// alpha(j) = p + 1 - k_j.
std::vector<int> alpha_profile(const SerreWeight& sigma);

// All (p^s - 1) p^s weights sorted by (b, a - b).
const std::vector<SerreWeight>& enumerate_weights(int p, int s);

// lambda_0^{a + b + e sum_j p^j} as a level-s character.
TameCharacter det_exponent(const SerreWeight& sigma, const LocalParams& params);

// All weights whose det_exponent equals the given level-s character.
WeightSet weights_with_determinant(const TameCharacter& det, const LocalParams& params);

// Parses "F(a,b)" at the given (p, s); b is read mod p^s - 1, so F(6,4)
// and F(2,0) name the same weight at p = 5, s = 1. Throws
// std::invalid_argument.
SerreWeight parse_weight(const std::string& text, int p, int s);

}  // namespace serrewt
