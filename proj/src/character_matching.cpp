#include "serrewt/character_matching.hpp"

#include <stdexcept>

namespace serrewt {

std::vector<DeltaVector> all_deltas(int s, int e) {
  std::vector<DeltaVector> out;
  i64 total = ipow(e, s);
  for (i64 c = 0; c < total; ++c) {
    DeltaVector d(s);
    i64 x = c;
    for (int j = s - 1; j >= 0; --j) {
      d[j] = static_cast<int>(x % e);
      x /= e;
    }
    out.push_back(d);
  }
  return out;
}

i64 double_matching_exponent(const SerreWeight& sigma, const DeltaVector& delta, int labeling,
                             const LocalParams& params) {
  int p = params.p;
  int s = params.s;
  i64 E = 0;
  for (int j = 0; j < s; ++j) {
    bool swapped = (labeling >> j) & 1;
    int lift = swapped ? j + s : j;
    int other = swapped ? j : j + s;
    E += sigma.w[j] * lambda_exponent_double(p, s, j);
    E += (sigma.k[j] - 1 + delta[j]) * psi_exponent(p, 2 * s, lift);
    E += (params.e - 1 - delta[j]) * psi_exponent(p, 2 * s, other);
  }
  return mod_floor(E, params.mod_2s());
}

WeightSet matching_set_double(const TameCharacter& phi, const DeltaVector& delta,
                              const LocalParams& params) {
  if (phi.level != 2 * params.s) throw std::invalid_argument("phi must have level 2s");
  i64 N = params.mod_2s();
  i64 t1 = phi.exponent;
  i64 t2 = mod_floor(phi.exponent * params.q(), N);
  WeightSet out;
  for (const auto& sig : enumerate_weights(params.p, params.s)) {
    for (int lab = 0; lab < (1 << params.s); ++lab) {
      i64 E = double_matching_exponent(sig, delta, lab, params);
      if (E == t1 || E == t2) {
        out.insert(sig);
        break;
      }
    }
  }
  return out;
}

i64 split_matching_exponent(const SerreWeight& sigma, const DeltaVector& delta, int subset,
                            const LocalParams& params) {
  int s = params.s;
  i64 E = 0;
  for (int j = 0; j < s; ++j) {
    i64 place = psi_exponent(params.p, s, j);
    E += sigma.w[j] * place;
    if ((subset >> j) & 1) {
      E += (sigma.k[j] - 1 + delta[j]) * place;
    } else {
      E += (params.e - 1 - delta[j]) * place;
    }
  }
  return mod_floor(E, params.mod_s());
}

WeightSet matching_set_split(const TameCharacter& chi1, const TameCharacter& chi2,
                             const DeltaVector& delta, const LocalParams& params) {
  if (chi1.level != params.s || chi2.level != params.s) {
    throw std::invalid_argument("split characters must have level s");
  }
  int full = (1 << params.s) - 1;
  WeightSet out;
  for (const auto& sig : enumerate_weights(params.p, params.s)) {
    for (int J = 0; J <= full; ++J) {
      i64 x = split_matching_exponent(sig, delta, J, params);
      i64 y = split_matching_exponent(sig, delta, full ^ J, params);
      if ((x == chi1.exponent && y == chi2.exponent) ||
          (x == chi2.exponent && y == chi1.exponent)) {
        out.insert(sig);
        break;
      }
    }
  }
  return out;
}

WeightSet closed_form_weight_set(const InertialType& t, const LocalParams& params) {
  if (params.e >= params.p) return weights_with_determinant(type_determinant(t), params);
  WeightSet out;
  for (const auto& d : all_deltas(params.s, params.e)) {
    WeightSet part = (t.kind == TypeKind::Cuspidal)
                         ? matching_set_double(t.phi, d, params)
                         : matching_set_split(t.chi1, t.chi2, d, params);
    out.insert(part.begin(), part.end());
  }
  return out;
}

}  // namespace serrewt
