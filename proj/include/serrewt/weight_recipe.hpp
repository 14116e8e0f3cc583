// The conjectural recipe: carry data x_j and theta_j, the subset system
// S^delta, the multi-valued operator R^delta and the predicted set W?.
#pragma once

#include <set>
#include <vector>

#include "serrewt/character_matching.hpp"
#include "serrewt/inertial_types.hpp"
#include "serrewt/serre_weights.hpp"

namespace serrewt {

// How the chain clauses of S^delta are read.
//   AlphaChain: chain entries j+m satisfy alpha(j+m) = 1 + 2 delta - (e-1)
//     (resp. p + 2 delta - (e-1)). This is the default.
//   StrictX: the clause is read literally on x_{j+m}, which lies in
//     {-1, 0, 1}; kept for falsification only.
enum class ChainReading { AlphaChain, StrictX };

struct RecipeOptions {
  ChainReading chain = ChainReading::AlphaChain;
  // When false (default) and s >= 2, a chain may not travel all the way
  // around Z/sZ and land its carry back on its own origin j. For s = 1 the
  // single self-chain (n = 0) is always allowed.
  bool allow_origin_wrap = false;
};

using SubsetCollection = std::set<std::set<int>>;

struct CarryData {
  std::vector<int> x;
  std::vector<int> window_low;   // 1 + 2 delta_j - (e - 1)
  std::vector<int> window_high;  // p + 2 delta_j - (e - 1)
};

// Unique x_j with alpha(j) + x_j p in the window. Requires e <= p - 1.
CarryData x_vector(const SerreWeight& sigma, const DeltaVector& delta, const LocalParams& params);
CarryData x_vector_from_alpha(const std::vector<int>& alpha, const DeltaVector& delta,
                              const LocalParams& params);

bool is_delta_regular(const SerreWeight& sigma, const DeltaVector& delta,
                      const LocalParams& params);

// theta_j = x_{j+n} for the least n >= 1 with x_{j+n} != 0 (cyclically).
// Throws std::logic_error when x vanishes identically.
std::vector<int> theta_carry(const std::vector<int>& x);

SubsetCollection script_s_sets_from_alpha(const std::vector<int>& alpha, const DeltaVector& delta,
                                          const LocalParams& params,
                                          const RecipeOptions& options = {});
SubsetCollection script_s_sets(const SerreWeight& sigma, const DeltaVector& delta,
                               const LocalParams& params, const RecipeOptions& options = {});

// Weights produced by the branch S (S must be empty for a regular weight).
WeightSet r_delta_branch(const SerreWeight& sigma, const DeltaVector& delta, const std::set<int>& S,
                         const LocalParams& params);

WeightSet r_delta(const SerreWeight& sigma, const DeltaVector& delta, const LocalParams& params,
                  const RecipeOptions& options = {});

// Union over delta of R^delta over the JH constituents (cuspidal), the
// closed form of the level-s case (split), or all weights of the right
// determinant when e >= p. Throws std::invalid_argument for a cuspidal
// exponent whose niveau divides s.
WeightSet predicted_weight_set(const InertialType& t, const LocalParams& params,
                               const RecipeOptions& options = {});

// Same as predicted_weight_set restricted to one delta (requires e <= p - 1).
WeightSet predicted_weight_set_for_delta(const InertialType& t, const DeltaVector& delta,
                                         const LocalParams& params,
                                         const RecipeOptions& options = {});

}  // namespace serrewt
