// Closed-form descriptions of the predicted weight set, computed by
// exhaustive character-equation solving over all weights.
#pragma once

#include <vector>

#include "serrewt/inertial_types.hpp"
#include "serrewt/serre_weights.hpp"

namespace serrewt {

using DeltaVector = std::vector<int>;

// All delta in [0, e-1]^s, in lexicographic order.
std::vector<DeltaVector> all_deltas(int s, int e);

// Level-2s exponent of
//   prod_j lambda_j^{w_j} psi_{lift(j)}^{k_j - 1 + delta_j} psi_{other(j)}^{e - 1 - delta_j}
// where bit j of `labeling` selects lift(j) = j + s instead of j.
i64 double_matching_exponent(const SerreWeight& sigma, const DeltaVector& delta, int labeling,
                             const LocalParams& params);

// Weights for which some labeling of the lifts makes the pair {phi, phi^q}
// equal to the displayed diagonal pair.
WeightSet matching_set_double(const TameCharacter& phi, const DeltaVector& delta,
                              const LocalParams& params);

// Level-s exponent of
//   prod_j lambda_j^{w_j} prod_{j in J} lambda_j^{k_j - 1 + delta_j}
//   prod_{j not in J} lambda_j^{e - 1 - delta_j}
// with J encoded as a bitmask.
i64 split_matching_exponent(const SerreWeight& sigma, const DeltaVector& delta, int subset,
                            const LocalParams& params);

// Weights for which some J makes {chi1, chi2} equal to the pair of the
// J-expression and its complement-expression.
WeightSet matching_set_split(const TameCharacter& chi1, const TameCharacter& chi2,
                             const DeltaVector& delta, const LocalParams& params);

// Union over delta of the matching sets; determinant-only branch when e >= p.
WeightSet closed_form_weight_set(const InertialType& t, const LocalParams& params);

}  // namespace serrewt
