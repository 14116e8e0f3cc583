#include "serrewt/weight_recipe.hpp"

#include <algorithm>
#include <stdexcept>

namespace serrewt {

namespace {

void require_small_e(const LocalParams& params) {
  if (params.e > params.p - 1) {
    throw std::invalid_argument("the delta recipe needs e <= p - 1");
  }
}

void require_delta(const DeltaVector& delta, const LocalParams& params) {
  if (static_cast<int>(delta.size()) != params.s) {
    throw std::invalid_argument("delta must have length s");
  }
  for (int d : delta) {
    if (d < 0 || d > params.e - 1) throw std::invalid_argument("delta_j out of [0, e-1]");
  }
}

int wrap(int j, int s) { return static_cast<int>(mod_floor(j, s)); }

// Condition (1)(a) or (1)(b) together with (2) for one j in S.
bool member_condition(int j, const std::set<int>& S, const std::vector<int>& alpha,
                      const CarryData& cd, const DeltaVector& delta, const LocalParams& params,
                      const RecipeOptions& options) {
  int p = params.p;
  int s = params.s;
  int e = params.e;
  const auto& x = cd.x;
  // Chains of length n use positions j+1..j+n and land on j+n+1.
  int max_n = s - 1;
  if (!options.allow_origin_wrap && s >= 2) max_n = s - 2;
  if (s == 1) max_n = 0;

  auto chain_ok = [&](bool lower, int target) {
    for (int n = 0; n <= max_n; ++n) {
      bool ok = true;
      for (int m = 1; m <= n && ok; ++m) {
        int t = wrap(j + m, s);
        int want = lower ? cd.window_low[t] : cd.window_high[t];
        int have = options.chain == ChainReading::AlphaChain ? alpha[t] : x[t];
        ok = (have == want) && S.count(t) == 0;
      }
      if (ok && x[wrap(j + n + 1, s)] == target) return true;
    }
    return false;
  };

  int shift = 2 * delta[j] - (e - 1);
  bool range_a = alpha[j] >= std::max(0, shift) && alpha[j] <= std::min(p - 1, p - 1 + shift);
  bool range_b = alpha[j] >= std::max(0, 2 + shift) && alpha[j] <= std::min(p - 1, p + 1 + shift);
  if ((x[j] == -1 || range_a) && chain_ok(true, 1)) return true;
  if ((x[j] == 1 || range_b) && chain_ok(false, -1)) return true;
  return false;
}

}  // namespace

CarryData x_vector_from_alpha(const std::vector<int>& alpha, const DeltaVector& delta,
                              const LocalParams& params) {
  require_small_e(params);
  require_delta(delta, params);
  int p = params.p;
  CarryData cd;
  for (int j = 0; j < params.s; ++j) {
    int lo = 1 + 2 * delta[j] - (params.e - 1);
    int hi = p + 2 * delta[j] - (params.e - 1);
    // The window has length p, so exactly one shift by a multiple of p fits.
    int x = 0;
    bool found = false;
    for (int cand = -2; cand <= 2 && !found; ++cand) {
      int v = alpha[j] + cand * p;
      if (v >= lo && v <= hi) {
        x = cand;
        found = true;
      }
    }
    if (!found) throw std::logic_error("x_vector: no shift lands in the window");
    cd.x.push_back(x);
    cd.window_low.push_back(lo);
    cd.window_high.push_back(hi);
  }
  return cd;
}

CarryData x_vector(const SerreWeight& sigma, const DeltaVector& delta, const LocalParams& params) {
  return x_vector_from_alpha(alpha_profile(sigma), delta, params);
}

bool is_delta_regular(const SerreWeight& sigma, const DeltaVector& delta,
                      const LocalParams& params) {
  auto cd = x_vector(sigma, delta, params);
  return std::all_of(cd.x.begin(), cd.x.end(), [](int v) { return v == 0; });
}

std::vector<int> theta_carry(const std::vector<int>& x) {
  int s = static_cast<int>(x.size());
  std::vector<int> theta(s, 0);
  for (int j = 0; j < s; ++j) {
    bool found = false;
    for (int n = 1; n <= s && !found; ++n) {
      int v = x[wrap(j + n, s)];
      if (v != 0) {
        theta[j] = v;
        found = true;
      }
    }
    if (!found) throw std::logic_error("theta_carry: x vanishes identically");
  }
  return theta;
}

SubsetCollection script_s_sets_from_alpha(const std::vector<int>& alpha, const DeltaVector& delta,
                                          const LocalParams& params,
                                          const RecipeOptions& options) {
  CarryData cd = x_vector_from_alpha(alpha, delta, params);
  SubsetCollection out;
  int s = params.s;
  for (int mask = 0; mask < (1 << s); ++mask) {
    std::set<int> S;
    for (int j = 0; j < s; ++j) {
      if ((mask >> j) & 1) S.insert(j);
    }
    bool ok = true;
    for (int j : S) {
      if (!member_condition(j, S, alpha, cd, delta, params, options)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(S);
  }
  return out;
}

SubsetCollection script_s_sets(const SerreWeight& sigma, const DeltaVector& delta,
                               const LocalParams& params, const RecipeOptions& options) {
  return script_s_sets_from_alpha(alpha_profile(sigma), delta, params, options);
}

WeightSet r_delta_branch(const SerreWeight& sigma, const DeltaVector& delta, const std::set<int>& S,
                         const LocalParams& params) {
  require_small_e(params);
  require_delta(delta, params);
  int p = params.p;
  int s = params.s;
  i64 correction = 0;
  if (!S.empty()) {
    std::vector<int> theta = theta_carry(x_vector(sigma, delta, params).x);
    for (int j : S) correction += theta[j] * psi_exponent(p, s, j);
  }
  i64 c = sigma.b + correction;
  i64 d = sigma.a - correction;
  for (int j = 0; j < s; ++j) {
    c -= (1 + delta[j]) * psi_exponent(p, s, j);
    d -= (params.e - 1 - delta[j]) * psi_exponent(p, s, j);
  }
  return weights_from_residues(c, d, params);
}

WeightSet r_delta(const SerreWeight& sigma, const DeltaVector& delta, const LocalParams& params,
                  const RecipeOptions& options) {
  WeightSet out;
  for (const auto& S : script_s_sets(sigma, delta, params, options)) {
    WeightSet part = r_delta_branch(sigma, delta, S, params);
    out.insert(part.begin(), part.end());
  }
  return out;
}

WeightSet predicted_weight_set_for_delta(const InertialType& t, const DeltaVector& delta,
                                         const LocalParams& params,
                                         const RecipeOptions& options) {
  require_small_e(params);
  require_delta(delta, params);
  if (t.kind == TypeKind::Split) return matching_set_split(t.chi1, t.chi2, delta, params);
  WeightSet out;
  for (const auto& sig : jh_constituents_cuspidal(t.phi, params)) {
    WeightSet part = r_delta(sig, delta, params, options);
    out.insert(part.begin(), part.end());
  }
  return out;
}

WeightSet predicted_weight_set(const InertialType& t, const LocalParams& params,
                               const RecipeOptions& options) {
  if (t.kind == TypeKind::Cuspidal) {
    // Re-validate genuineness in case the caller built the struct by hand.
    make_cuspidal(t.phi);
  }
  if (params.e >= params.p) return weights_with_determinant(type_determinant(t), params);
  WeightSet out;
  for (const auto& d : all_deltas(params.s, params.e)) {
    WeightSet part = predicted_weight_set_for_delta(t, d, params, options);
    out.insert(part.begin(), part.end());
  }
  return out;
}

}  // namespace serrewt
