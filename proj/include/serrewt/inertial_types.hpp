// Tame inertial types, the attached characteristic-zero representation and
// the Jordan-Hoelder constituents of its reduction (cuspidal case).
#pragma once

#include <string>

#include "serrewt/serre_weights.hpp"
#include "serrewt/tame_characters.hpp"

namespace serrewt {

enum class TypeKind { Split, Cuspidal };

// Split(chi1, chi2) of level s (unordered), or Cuspidal(phi) of genuine level
// 2s standing for the unordered pair {phi, phi^q}.
struct InertialType {
  TypeKind kind = TypeKind::Split;
  TameCharacter chi1;
  TameCharacter chi2;
  TameCharacter phi;
};

// Throws std::invalid_argument on level mismatch.
InertialType make_split(const TameCharacter& chi1, const TameCharacter& chi2);
// Throws std::invalid_argument if niveau(phi) divides s.
InertialType make_cuspidal(const TameCharacter& phi);

// Equality as types: unordered for Split, up to phi -> phi^q for Cuspidal.
bool same_type(const InertialType& x, const InertialType& y);

// Canonical level-2s representative of {phi, phi^q}: the smaller exponent.
TameCharacter pair_representative(const TameCharacter& phi);

// Determinant of the type as a level-s character: chi1 chi2, or
// phi^{q+1} restricted to level s.
TameCharacter type_determinant(const InertialType& t);

std::string describe_type(const InertialType& t);

enum class RepKind { PrincipalSeries, CuspidalRep };

// I(chi1, chi2) or Theta(phi); the lambda-twist of the cuspidal case is
// absorbed into the level-2s exponent of phi.
struct GenericFiberRep {
  RepKind kind = RepKind::PrincipalSeries;
  TameCharacter chi1;
  TameCharacter chi2;
  TameCharacter phi;
};

GenericFiberRep attach_v(const InertialType& t);
bool same_rep(const GenericFiberRep& x, const GenericFiberRep& y);

// Constituents sigma for which some labeling of lifts gives
// {phi, phi^q} = {prod lambda_j^{w_j + k_j - 2} prod psi_{lift(j)}^{p+1-k_j}, conjugate}.
// Computed by scanning every weight and every labeling.
WeightSet jh_constituents_cuspidal(const TameCharacter& phi, const LocalParams& params);

}  // namespace serrewt
