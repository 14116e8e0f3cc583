#include "serrewt/inertial_types.hpp"

#include <algorithm>
#include <stdexcept>

namespace serrewt {

InertialType make_split(const TameCharacter& chi1, const TameCharacter& chi2) {
  if (chi1.level != chi2.level || chi1.p != chi2.p) {
    throw std::invalid_argument("split type needs two characters of the same level");
  }
  InertialType t;
  t.kind = TypeKind::Split;
  t.chi1 = std::min(chi1, chi2);
  t.chi2 = std::max(chi1, chi2);
  return t;
}

InertialType make_cuspidal(const TameCharacter& phi) {
  if (phi.level % 2 != 0) throw std::invalid_argument("cuspidal type needs an even level");
  int s = phi.level / 2;
  int nv = niveau(phi);
  if (s % nv == 0) {
    throw std::invalid_argument("cuspidal exponent " + std::to_string(phi.exponent) +
                                " has niveau " + std::to_string(nv) + " dividing s = " +
                                std::to_string(s));
  }
  InertialType t;
  t.kind = TypeKind::Cuspidal;
  t.phi = pair_representative(phi);
  return t;
}

TameCharacter pair_representative(const TameCharacter& phi) {
  int s = phi.level / 2;
  TameCharacter conj = power(phi, ipow(phi.p, s));
  return std::min(phi, conj);
}

bool same_type(const InertialType& x, const InertialType& y) {
  if (x.kind != y.kind) return false;
  if (x.kind == TypeKind::Cuspidal) {
    return pair_representative(x.phi) == pair_representative(y.phi);
  }
  return std::min(x.chi1, x.chi2) == std::min(y.chi1, y.chi2) &&
         std::max(x.chi1, x.chi2) == std::max(y.chi1, y.chi2);
}

TameCharacter type_determinant(const InertialType& t) {
  if (t.kind == TypeKind::Split) return mul(t.chi1, t.chi2);
  int s = t.phi.level / 2;
  i64 q = ipow(t.phi.p, s);
  // phi^{q+1} = inflate(X) with X = M mod q - 1.
  return make_character(t.phi.p, s, mod_floor(t.phi.exponent, q - 1));
}

std::string describe_type(const InertialType& t) {
  if (t.kind == TypeKind::Cuspidal) {
    return "Cuspidal(psi^" + std::to_string(t.phi.exponent) + ")";
  }
  return "Split(lambda^" + std::to_string(t.chi1.exponent) + ", lambda^" +
         std::to_string(t.chi2.exponent) + ")";
}

GenericFiberRep attach_v(const InertialType& t) {
  GenericFiberRep v;
  if (t.kind == TypeKind::Split) {
    v.kind = RepKind::PrincipalSeries;
    v.chi1 = t.chi1;
    v.chi2 = t.chi2;
  } else {
    v.kind = RepKind::CuspidalRep;
    v.phi = pair_representative(t.phi);
  }
  return v;
}

bool same_rep(const GenericFiberRep& x, const GenericFiberRep& y) {
  if (x.kind != y.kind) return false;
  if (x.kind == RepKind::CuspidalRep) {
    return pair_representative(x.phi) == pair_representative(y.phi);
  }
  return std::min(x.chi1, x.chi2) == std::min(y.chi1, y.chi2) &&
         std::max(x.chi1, x.chi2) == std::max(y.chi1, y.chi2);
}

WeightSet jh_constituents_cuspidal(const TameCharacter& phi, const LocalParams& params) {
  int p = params.p;
  int s = params.s;
  if (phi.level != 2 * s || phi.p != p) throw std::invalid_argument("phi must have level 2s");
  i64 N = params.mod_2s();
  i64 target1 = phi.exponent;
  i64 target2 = mod_floor(phi.exponent * params.q(), N);
  WeightSet out;
  for (const auto& sig : enumerate_weights(p, s)) {
    i64 base = 0;
    for (int j = 0; j < s; ++j) {
      base += (sig.w[j] + sig.k[j] - 2) * lambda_exponent_double(p, s, j);
    }
    for (int lab = 0; lab < (1 << s); ++lab) {
      i64 E = base;
      for (int j = 0; j < s; ++j) {
        int lift = ((lab >> j) & 1) ? j + s : j;
        E += (p + 1 - sig.k[j]) * psi_exponent(p, 2 * s, lift);
      }
      E = mod_floor(E, N);
      if (E == target1 || E == target2) {
        out.insert(sig);
        break;
      }
    }
  }
  return out;
}

}  // namespace serrewt
