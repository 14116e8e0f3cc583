// Command-line surface: job parsing, fixture forms, and the predict, jh,
// reproduce-tables and verify commands. Commands return text so the tool,
// the tests and the Python module share one implementation.
#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "serrewt/character_scheme_solver.hpp"
#include "serrewt/inertial_types.hpp"
#include "serrewt/weight_recipe.hpp"

namespace serrewt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitVerificationFailure = 3;

// Malformed or inconsistent input; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Plain, Json };

struct JobSpec {
  LocalParams params;
  InertialType type;
  std::optional<DeltaVector> delta;  // empty means the union over all delta
  NuConvention nu = NuConvention::Successor;
  OutputFormat format = OutputFormat::Plain;
};

// Parses `key = value` pairs separated by newlines or whitespace; `#` starts
// a comment. Required keys: p, s, e, kind, and phi or chi1/chi2.
JobSpec parse_input(const std::string& text);

// A classical newform of weight k at p = 5 used by the reference tables,
// described by its local behaviour at the ramified prime.
struct FixtureForm {
  int k = 2;
  bool ordinary = false;
  std::string label;
};

// Non-ordinary: Cuspidal(psi^{e(k-1)}) when genuine, otherwise the scalar
// Split(lambda^m, lambda^m) with e(k-1) = m (q + 1). Ordinary:
// Split(lambda^{e(k-1)}, lambda^0).
InertialType fixture_type(const FixtureForm& form, const LocalParams& params);

// One predicted list of the reference tables.
struct TableBlock {
  std::string label;
  bool ordinary = false;
  std::vector<int> ks;
};

// Containment row: weights observed for a global form of weight k, which
// must lie inside the predicted set of the matching fixture.
struct ContainmentRow {
  std::string table;
  int k = 2;
  bool ordinary = false;
  std::vector<std::string> weights;
};

const std::vector<TableBlock>& table_blocks();
const std::vector<ContainmentRow>& containment_rows();

// Header plus one F(a,b) per line, sorted by (b, a - b); or a JSON object.
std::string cmd_predict(const JobSpec& job);

// JH constituents of the level-2s cuspidal type, same layout as predict.
std::string cmd_jh(const JobSpec& job);

// The six predicted lists followed by the containment report. Sets ok to
// false when any containment row fails.
std::string cmd_reproduce_tables(bool* ok = nullptr);

struct VerifyRequest {
  std::string suite;
  std::optional<int> p;
  std::optional<int> s;
  std::optional<int> e;
  double max_seconds = 0;
  NuConvention nu = NuConvention::Successor;
};

const std::vector<std::string>& verify_suite_names();

// Runs the suite over the requested triple, or over the default grid when
// some of p, s, e are omitted. Returns kExitOk or kExitVerificationFailure;
// throws InputError for an unknown suite or bad bounds.
int cmd_verify(const VerifyRequest& request, std::ostream& out);

}  // namespace serrewt::cli
