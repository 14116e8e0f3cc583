#include "serrewt/tame_characters.hpp"

#include <stdexcept>

namespace serrewt {

i64 LocalParams::q() const { return ipow(p, s); }
i64 LocalParams::mod_s() const { return ipow(p, s) - 1; }
i64 LocalParams::mod_2s() const { return ipow(p, 2 * s) - 1; }

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

LocalParams make_params(int p, int s, int e) {
  if (!is_prime(p) || p < 3) {
    throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
  }
  if (s < 1) throw std::invalid_argument("s must be >= 1");
  if (e < 1) throw std::invalid_argument("e must be >= 1");
  // Keep p^{2s} well below 2^62 so products of two exponents never overflow
  // after reduction.
  double bound = 1.0;
  for (int i = 0; i < 2 * s; ++i) bound *= p;
  if (bound > 1e9) throw std::invalid_argument("p^{2s} too large for exact enumeration");
  return LocalParams{p, s, e};
}

i64 ipow(i64 base, int exp) {
  i64 r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

i64 mod_floor(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 psi_exponent(int p, int n, int i) {
  int shift = static_cast<int>(mod_floor(n - i, n));
  return mod_floor(ipow(p, shift), ipow(p, n) - 1);
}

i64 lambda_exponent_double(int p, int s, int j) {
  i64 N = ipow(p, 2 * s) - 1;
  return mod_floor(psi_exponent(p, 2 * s, j) + psi_exponent(p, 2 * s, j + s), N);
}

i64 canonical_exponent(const std::vector<i64>& m, int n, int p) {
  if (n < 1 || static_cast<int>(m.size()) != n) {
    throw std::invalid_argument("exponent vector length must equal the level");
  }
  i64 N = ipow(p, n) - 1;
  i64 acc = 0;
  for (int i = 0; i < n; ++i) {
    acc = mod_floor(acc + mod_floor(m[i], N) * psi_exponent(p, n, i), N);
  }
  return acc;
}

TameCharacter make_character(int p, int level, i64 exponent) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  return TameCharacter{p, level, mod_floor(exponent, ipow(p, level) - 1)};
}

TameCharacter character_from_vector(int p, const std::vector<i64>& m) {
  int n = static_cast<int>(m.size());
  return TameCharacter{p, n, canonical_exponent(m, n, p)};
}

TameCharacter frobenius_twist(const TameCharacter& chi) {
  return make_character(chi.p, chi.level, chi.exponent * chi.p);
}

int niveau(const TameCharacter& chi) {
  i64 N = ipow(chi.p, chi.level) - 1;
  for (int d = 1; d <= chi.level; ++d) {
    if (chi.level % d != 0) continue;
    if (mod_floor(chi.exponent * ipow(chi.p, d), N) == chi.exponent) return d;
  }
  return chi.level;
}

TameCharacter mul(const TameCharacter& a, const TameCharacter& b) {
  if (a.level != b.level || a.p != b.p) {
    throw std::invalid_argument("mul: characters of different levels");
  }
  return make_character(a.p, a.level, a.exponent + b.exponent);
}

TameCharacter inv(const TameCharacter& chi) {
  return make_character(chi.p, chi.level, -chi.exponent);
}

TameCharacter power(const TameCharacter& chi, i64 k) {
  i64 N = ipow(chi.p, chi.level) - 1;
  return make_character(chi.p, chi.level, mod_floor(k, N) * chi.exponent);
}

TameCharacter inflate_to_double(const TameCharacter& chi) {
  i64 q = ipow(chi.p, chi.level);
  return make_character(chi.p, 2 * chi.level, (q + 1) * chi.exponent);
}

TameCharacter restrict_to_single(const TameCharacter& chi) {
  if (chi.level % 2 != 0) throw std::invalid_argument("restrict: odd level");
  int s = chi.level / 2;
  if (s % niveau(chi) != 0) {
    throw std::invalid_argument("restrict: character is genuine at level 2s");
  }
  i64 q = ipow(chi.p, s);
  // M = (q + 1) X mod q^2 - 1 forces (q + 1) | M.
  return make_character(chi.p, s, chi.exponent / (q + 1));
}

std::string to_string(const TameCharacter& chi) {
  return "chi[p=" + std::to_string(chi.p) + ",n=" + std::to_string(chi.level) +
         ",M=" + std::to_string(chi.exponent) + "]";
}

}  // namespace serrewt
