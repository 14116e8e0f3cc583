// Signed interval systems L_delta and M_delta, the map xi between them and
// the interval description of the subset system S^delta. This module is a
// verification harness; it is not used to compute predicted weights.
#pragma once

#include <optional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "serrewt/character_matching.hpp"
#include "serrewt/weight_recipe.hpp"

namespace serrewt {

// [[start, start + length - 1]] in Z/sZ with a sign in {+1, -1}.
struct SignedInterval {
  int start = 0;
  int length = 1;
  int sign = 1;

  auto operator<=>(const SignedInterval&) const = default;
};

struct SignedIntervalCollection {
  int s = 1;
  std::vector<SignedInterval> intervals;  // sorted by start

  auto operator<=>(const SignedIntervalCollection&) const = default;
};

int interval_predecessor(const SignedInterval& iv, int s);
int interval_terminus(const SignedInterval& iv, int s);
std::vector<int> interval_members(const SignedInterval& iv, int s);

// Every collection of pairwise disjoint signed intervals, each listed once
// with intervals sorted by start.
const std::vector<SignedIntervalCollection>& all_collections(int s);

// z_j for every predecessor j, using the recursion z_{j-1} = x_n when the
// terminus n has x_n != 0 and z_{j-1} = z_n otherwise. Returns nullopt when
// the recursion reaches a terminus with no continuing interval or cycles.
std::optional<std::map<int, int>> z_values(const SignedIntervalCollection& coll,
                                           const std::vector<int>& x);

struct LPair {
  std::vector<int> alpha;
  SignedIntervalCollection intervals;
  auto operator<=>(const LPair&) const = default;
};

struct MPair {
  std::vector<int> beta;
  SignedIntervalCollection intervals;
  auto operator<=>(const MPair&) const = default;
};

bool in_l(const LPair& pair, const DeltaVector& delta, const LocalParams& params);
bool in_m(const MPair& pair, const DeltaVector& delta, const LocalParams& params);

// y_j with beta(j) - y_j p in [0, p-1].
std::vector<int> y_vector(const std::vector<int>& beta, int p);

std::vector<LPair> enumerate_l_pairs(const DeltaVector& delta, const LocalParams& params);
std::vector<LPair> l_pairs_for_alpha(const std::vector<int>& alpha, const DeltaVector& delta,
                                     const LocalParams& params);
std::vector<MPair> enumerate_m_pairs(const DeltaVector& delta, const LocalParams& params);

// Binding of the signs in the third rewrite rule of xi.
//   Uniform: every interval entry receives +z p from its own interval, the
//     entry before it receives -z from the next entry of the same interval,
//     and the predecessor receives +z (positive) or -z (negative). This
//     reproduces the first two rules and reads the third one with the same
//     carry bookkeeping.
//   LiteralSigns: as Uniform, except that in the third rule the terminus of
//     the first interval receives (sign of its interval) * z p, binding the
//     displayed signs left to right.
enum class XiReading { Uniform, LiteralSigns };

// Throws std::invalid_argument if the input violates the L_delta axioms.
MPair xi_forward(const LPair& l, const DeltaVector& delta, const LocalParams& params,
                 XiReading reading = XiReading::Uniform);
// Exact inverse on the image of xi_forward. Throws std::invalid_argument if
// the input violates the M_delta axioms or has no preimage in L_delta.
LPair xi_inverse(const MPair& m, const DeltaVector& delta, const LocalParams& params,
                 XiReading reading = XiReading::Uniform);

std::set<int> positive_predecessors(const SignedIntervalCollection& coll);

SubsetCollection s_sets_via_intervals(const std::vector<int>& alpha, const DeltaVector& delta,
                                      const LocalParams& params);

// Underlined-string notation: entries comma-separated, each interval in
// brackets with its sign after the last entry, e.g. "[0]+, 4".
std::string render_pair(const std::vector<int>& values, const SignedIntervalCollection& coll);

}  // namespace serrewt
