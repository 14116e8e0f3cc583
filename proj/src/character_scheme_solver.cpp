#include "serrewt/character_scheme_solver.hpp"

#include <stdexcept>

namespace serrewt {

namespace {

int wrap(int j, int n) { return static_cast<int>(mod_floor(j, n)); }

std::set<int> subset_from_mask(int mask, int s) {
  std::set<int> out;
  for (int j = 0; j < s; ++j) {
    if ((mask >> j) & 1) out.insert(j);
  }
  return out;
}

// Level-2s exponent of prod_j lambda_j^{w_j}.
i64 lambda_twist(const std::vector<int>& w, const LocalParams& params) {
  i64 E = 0;
  for (int j = 0; j < params.s; ++j) E += w[j] * lambda_exponent_double(params.p, params.s, j);
  return E;
}

void require_nontrivial(const BorelCharacter& theta) {
  if (!is_nontrivial_theta(theta)) {
    throw std::invalid_argument("theta is trivial on the relevant torus; use trivial_theta_set");
  }
}

}  // namespace

std::string to_string(NuConvention nu) {
  switch (nu) {
    case NuConvention::Self:
      return "self";
    case NuConvention::Successor:
      return "successor";
    case NuConvention::Predecessor:
      return "predecessor";
  }
  return "successor";
}

NuConvention parse_nu_convention(const std::string& text) {
  if (text == "self") return NuConvention::Self;
  if (text == "successor") return NuConvention::Successor;
  if (text == "predecessor") return NuConvention::Predecessor;
  throw std::invalid_argument("unknown nu convention: " + text);
}

int nu_value(NuConvention nu, const std::set<int>& S, int j, int s) {
  int t = j;
  if (nu == NuConvention::Successor) t = wrap(j + 1, s);
  if (nu == NuConvention::Predecessor) t = wrap(j - 1, s);
  return S.count(t) ? 1 : 0;
}

std::pair<i64, i64> borel_exponents(const BorelCharacter& theta) {
  int s = static_cast<int>(theta.wp.size());
  i64 M = ipow(theta.p, s) - 1;
  i64 u = 0;
  i64 v = 0;
  for (int j = 0; j < s; ++j) {
    i64 place = psi_exponent(theta.p, s, j);
    u += theta.wp[j] * place;
    v += (theta.wp[j] + theta.kp[j] - 2) * place;
  }
  return {mod_floor(u, M), mod_floor(v, M)};
}

bool same_character(const BorelCharacter& x, const BorelCharacter& y) {
  return x.p == y.p && x.wp.size() == y.wp.size() && borel_exponents(x) == borel_exponents(y);
}

std::vector<i64> c_values(const BorelCharacter& theta) {
  int s = static_cast<int>(theta.kp.size());
  std::vector<i64> c(s, 0);
  for (int j = 0; j < s; ++j) {
    for (int t = 0; t < s; ++t) c[j] += ipow(theta.p, t) * (theta.kp[wrap(j - t, s)] - 2);
  }
  return c;
}

bool is_nontrivial_theta(const BorelCharacter& theta) {
  i64 M = ipow(theta.p, static_cast<int>(theta.kp.size())) - 1;
  for (i64 c : c_values(theta)) {
    if (c <= 0 || c >= M) return false;
  }
  return true;
}

std::vector<BorelCharacter> theta_family(const SerreWeight& sigma, const LocalParams& params,
                                         NuConvention nu) {
  int p = params.p;
  int s = params.s;
  std::vector<BorelCharacter> out;
  bool all_two = true;
  for (int k : sigma.k) all_two = all_two && k == 2;
  if (all_two) {
    out.push_back(BorelCharacter{p, std::vector<int>(s, 0), std::vector<int>(s, 2)});
    return out;
  }
  std::set<BorelCharacter> seen;
  for (int mask = 0; mask < (1 << s); ++mask) {
    std::set<int> T = subset_from_mask(mask, s);
    BorelCharacter th{p, std::vector<int>(s), std::vector<int>(s)};
    for (int j = 0; j < s; ++j) {
      int n = nu_value(nu, T, j, s);
      if (T.count(j)) {
        th.wp[j] = p - 1;
        th.kp[j] = sigma.k[j] + 1 - n;  // k' - 2 = k - 1 - nu
      } else {
        th.wp[j] = sigma.k[j] - 2;
        th.kp[j] = p + 3 - sigma.k[j] - n;  // k' - 2 = p + 1 - k - nu
      }
    }
    if (seen.insert(th).second) out.push_back(th);
  }
  return out;
}

SchemeCase classify_case(bool b_i_zero, bool b_next_zero) {
  if (b_i_zero && !b_next_zero) return SchemeCase::Case1;
  if (!b_i_zero && b_next_zero) return SchemeCase::Case2;
  if (b_i_zero && b_next_zero) return SchemeCase::Case3;
  return SchemeCase::Case4;
}

std::vector<CaseSolution> solve_case(SchemeCase which, i64 c_i, i64 c_next, int k_next,
                                     const LocalParams& params) {
  i64 M = params.mod_s();
  int e = params.e;
  std::vector<CaseSolution> out;
  switch (which) {
    case SchemeCase::Case1:
      for (int t = 0; t <= e - 1; ++t) out.push_back({t, c_next + t * M});
      break;
    case SchemeCase::Case2: {
      // beta = -p c_i + (k_{i+1} - 1)(p^s - 1).
      i64 beta = -params.p * c_i + (k_next - 1) * M;
      for (int t = 0; t <= e - 1; ++t) out.push_back({k_next - 1 + t, beta + t * M});
      break;
    }
    case SchemeCase::Case3:
      for (int t = 0; t <= e; ++t) out.push_back({t, t * M});
      break;
    case SchemeCase::Case4:
      for (int t = 0; t <= e; ++t) out.push_back({k_next - 2 + t, t * M});
      break;
  }
  return out;
}

i64 pair_key(i64 exponent, const LocalParams& params) {
  i64 N = params.mod_2s();
  i64 E = mod_floor(exponent, N);
  return std::min(E, mod_floor(E * params.q(), N));
}

CharacterPairSet phi_set(const BorelCharacter& theta, const LocalParams& params, NuConvention nu) {
  require_nontrivial(theta);
  int p = params.p;
  int s = params.s;
  int e = params.e;
  CharacterPairSet out;
  i64 twist = lambda_twist(theta.wp, params);
  for (int smask = 0; smask < (1 << s); ++smask) {
    std::set<int> S = subset_from_mask(smask, s);
    for (int eps = 0; eps < (1 << s); ++eps) {
      for (const auto& d : all_deltas(s, e)) {
        i64 E = twist;
        for (int i = 0; i < 2 * s; ++i) {
          int j = i % s;
          // epsilon_j decides which lift of tau_j is the tilde lift.
          bool tilde = ((eps >> j) & 1) ? (i != j) : (i == j);
          int k = theta.kp[j];
          int n = nu_value(nu, S, j, s);
          i64 m = 0;
          if (S.count(j)) {
            m = tilde ? k - 2 + n + d[j] : e - 1 - d[j];
          } else {
            m = tilde ? p + e - 1 - d[j] : k - 2 + n + d[j];
          }
          E += m * psi_exponent(p, 2 * s, i);
        }
        out.insert(pair_key(E, params));
      }
    }
  }
  return out;
}

i64 omega_exponent(bool b_prev_zero, bool b_cur_zero, int k_i, int delta_prime,
                   bool successor_in_s_prime, int e) {
  if (b_prev_zero && !b_cur_zero) return e - 1 - delta_prime;
  if (!b_prev_zero && b_cur_zero) return k_i - 1 + delta_prime;
  if (b_prev_zero && b_cur_zero) return successor_in_s_prime ? e - 1 - delta_prime : e - delta_prime;
  return successor_in_s_prime ? k_i - 1 + delta_prime : k_i - 2 + delta_prime;
}

CharacterPairSet omega_set(const BorelCharacter& theta, const LocalParams& params) {
  require_nontrivial(theta);
  int p = params.p;
  int s = params.s;
  int e = params.e;
  CharacterPairSet out;
  i64 twist = lambda_twist(theta.wp, params);
  // bmask bit j set: b_{j+s} = c_j and b_j = 0; clear: b_j = c_j, b_{j+s} = 0.
  for (int bmask = 0; bmask < (1 << s); ++bmask) {
    std::vector<bool> b_zero(2 * s);
    for (int j = 0; j < s; ++j) {
      bool high = (bmask >> j) & 1;
      b_zero[j] = high;
      b_zero[j + s] = !high;
    }
    for (int smask = 0; smask < (1 << s); ++smask) {
      std::set<int> Sp = subset_from_mask(smask, s);
      for (const auto& d : all_deltas(s, e)) {
        i64 E = twist;
        for (int i = 0; i < 2 * s; ++i) {
          int j = i % s;
          bool prev_zero = b_zero[wrap(i - 1, 2 * s)];
          bool cur_zero = b_zero[i];
          i64 a = omega_exponent(prev_zero, cur_zero, theta.kp[j], d[j],
                                 Sp.count(wrap(j + 1, s)) > 0, e);
          E += a * psi_exponent(p, 2 * s, i);
        }
        out.insert(pair_key(E, params));
      }
    }
  }
  return out;
}

bool lattice_member(const std::vector<i64>& v, int p) {
  int s = static_cast<int>(v.size());
  i64 M = ipow(p, s) - 1;
  i64 acc = 0;
  for (int i = 0; i < s; ++i) acc = mod_floor(acc + mod_floor(v[i], M) * psi_exponent(p, s, i), M);
  return acc == 0;
}

std::vector<i64> mu_vector(const std::vector<i64>& a, const std::vector<int>& k, int e) {
  int s = static_cast<int>(k.size());
  if (static_cast<int>(a.size()) != 2 * s) throw std::invalid_argument("a must have length 2s");
  std::vector<i64> mu(s);
  for (int i = 0; i < s; ++i) mu[i] = a[i] + a[i + s] - (k[wrap(i + 1, s)] - 2 + e);
  return mu;
}

CharacterPairSet trivial_theta_set(const SerreWeight& sigma, const LocalParams& params) {
  int p = params.p;
  int s = params.s;
  int e = params.e;
  for (int k : sigma.k) {
    if (k != 2) throw std::invalid_argument("trivial_theta_set needs every k_j = 2");
  }
  i64 N = params.mod_2s();
  i64 q = params.q();
  i64 target = 0;
  for (int i = 0; i < 2 * s; ++i) {
    int j = i % s;
    target += (2 * sigma.w[j] + sigma.k[j] - 2 + e) * psi_exponent(p, 2 * s, i);
  }
  target = mod_floor(target, N);
  i64 twist = lambda_twist(sigma.w, params);
  CharacterPairSet out;
  i64 total = ipow(e + 1, 2 * s);
  for (i64 code = 0; code < total; ++code) {
    i64 E = 0;
    i64 v = code;
    for (int i = 0; i < 2 * s; ++i) {
      E += (v % (e + 1)) * psi_exponent(p, 2 * s, i);
      v /= (e + 1);
    }
    E = mod_floor(E + twist, N);
    if (mod_floor(E * (q + 1), N) == target) out.insert(pair_key(E, params));
  }
  return out;
}

CharacterPairSet intersection_phi(const SerreWeight& sigma, const LocalParams& params,
                                  NuConvention nu) {
  bool all_two = true;
  for (int k : sigma.k) all_two = all_two && k == 2;
  if (all_two) return trivial_theta_set(sigma, params);
  SerreWeight bare = make_weight(sigma.p, sigma.k, std::vector<int>(params.s, 0));
  CharacterPairSet acc;
  bool first = true;
  for (const auto& th : theta_family(bare, params, nu)) {
    CharacterPairSet ph = phi_set(th, params, nu);
    if (first) {
      acc = ph;
      first = false;
      continue;
    }
    CharacterPairSet next;
    for (i64 x : acc) {
      if (ph.count(x)) next.insert(x);
    }
    acc.swap(next);
  }
  i64 twist = lambda_twist(sigma.w, params);
  CharacterPairSet out;
  for (i64 x : acc) out.insert(pair_key(x + twist, params));
  return out;
}

CharacterPairSet displayed_character_set(const SerreWeight& sigma, const LocalParams& params) {
  CharacterPairSet out;
  for (const auto& d : all_deltas(params.s, params.e)) {
    for (int lab = 0; lab < (1 << params.s); ++lab) {
      out.insert(pair_key(double_matching_exponent(sigma, d, lab, params), params));
    }
  }
  return out;
}

}  // namespace serrewt
