// Exhaustive cross-module verification suites. Each suite runs over one
// parameter triple and reports counts plus the first counterexample.
#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "serrewt/character_scheme_solver.hpp"
#include "serrewt/interval_combinatorics.hpp"
#include "serrewt/weight_recipe.hpp"

namespace serrewt {

struct SuiteReport {
  std::string name;
  bool pass = true;
  bool timed_out = false;
  long checks = 0;
  long failures = 0;
  std::string counterexample;      // first failure, rendered
  std::vector<std::string> notes;  // free-form summary lines

  void fail(const std::string& what);
  std::string summary() const;
};

// Wall-clock budget; a non-positive budget means unlimited.
class Deadline {
 public:
  explicit Deadline(double max_seconds);
  bool expired() const;

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
};

// Genuine level-2s exponents, one representative per pair {phi, phi^q}.
std::vector<i64> genuine_pair_representatives(int p, int s);

// Recipe union against the level-2s closed form for every genuine phi.
SuiteReport verify_equivalence25(const LocalParams& params, const Deadline& deadline,
                                 const RecipeOptions& options = {});

// Level-s closed form: the subset scan against an independent solve that
// fixes the k-digits and derives b, plus determinant and swap checks.
SuiteReport verify_equivalence26(const LocalParams& params, const Deadline& deadline);

// xi is a bijection L_delta -> M_delta with exact inverse, for every delta.
SuiteReport verify_xi(const LocalParams& params, const Deadline& deadline,
                      XiReading reading = XiReading::Uniform);

// S-sets from interval systems equal S^delta for every alpha and delta.
SuiteReport verify_lemma27(const LocalParams& params, const Deadline& deadline,
                           const RecipeOptions& options = {});

// Phi(theta) = Omega_e(theta) for every nontrivial theta from a weight,
// under the given nu convention.
SuiteReport verify_phi_omega(const LocalParams& params, const Deadline& deadline,
                             NuConvention nu = NuConvention::Successor);

// Intersection of Phi equals the displayed set for weights within bounds,
// and pair(phi) in the intersection iff sigma in the closed form.
SuiteReport verify_thm34(const LocalParams& params, const Deadline& deadline,
                         NuConvention nu = NuConvention::Successor);

// Determinant check for every predicted weight, maximality at e = p - 1 and
// containment of the e = p - 1 set in the e >= p set.
SuiteReport verify_structural(const LocalParams& params, const Deadline& deadline);

// |W?| nondecreasing in e over 1 <= e <= p - 1 (exploratory).
SuiteReport verify_monotonicity(int p, int s, const Deadline& deadline);

}  // namespace serrewt
