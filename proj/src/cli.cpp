#include "serrewt/cli.hpp"

#include <charconv>
#include <map>
#include <ostream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "serrewt/verification.hpp"

namespace serrewt::cli {

namespace {

i64 parse_integer(const std::string& key, const std::string& value) {
  i64 out = 0;
  const char* first = value.data();
  const char* last = first + value.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last || value.empty()) {
    throw InputError("key '" + key + "' expects an integer, got '" + value + "'");
  }
  return out;
}

std::map<std::string, std::string> tokenize(const std::string& text) {
  static const std::set<std::string> known = {"p",    "s",    "e",     "kind",         "phi",
                                              "chi1", "chi2", "delta", "nu_convention", "format"};
  // Allow spaces around '=' so both "p=5" and "p = 5" parse.
  static const std::regex around_eq(R"(\s*=\s*)");
  std::map<std::string, std::string> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = std::regex_replace(line, around_eq, "=");
    std::istringstream words(line);
    std::string tok;
    while (words >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size()) {
        throw InputError("malformed token '" + tok + "' (expected key=value)");
      }
      std::string key = tok.substr(0, eq);
      if (!known.count(key)) throw InputError("unknown key '" + key + "'");
      if (out.count(key)) throw InputError("duplicate key '" + key + "'");
      out[key] = tok.substr(eq + 1);
    }
  }
  return out;
}

std::string header(const LocalParams& params, const std::string& tag = "W?") {
  return "# " + tag + " p=" + std::to_string(params.p) + " s=" + std::to_string(params.s) +
         " e=" + std::to_string(params.e) + "\n";
}

std::string render_lines(const LocalParams& params, const WeightSet& set,
                         const std::string& tag = "W?") {
  std::string out = header(params, tag);
  for (const auto& w : set) out += format_weight(w) + "\n";
  return out;
}

std::string render_json(const JobSpec& job, const WeightSet& set, const std::string& what) {
  nlohmann::ordered_json j;
  j["p"] = job.params.p;
  j["s"] = job.params.s;
  j["e"] = job.params.e;
  j["type"] = describe_type(job.type);
  if (job.delta) j["delta"] = *job.delta;
  j[what] = nlohmann::json::array();
  for (const auto& w : set) j[what].push_back(format_weight(w));
  return j.dump(2) + "\n";
}

}  // namespace

JobSpec parse_input(const std::string& text) {
  auto kv = tokenize(text);
  for (const char* key : {"p", "s", "e", "kind"}) {
    if (!kv.count(key)) throw InputError(std::string("missing required key '") + key + "'");
  }
  JobSpec job;
  i64 p = parse_integer("p", kv["p"]);
  i64 s = parse_integer("s", kv["s"]);
  i64 e = parse_integer("e", kv["e"]);
  if (p > 1000 || s > 64 || e > 1000000) throw InputError("parameters out of range");
  try {
    job.params = make_params(static_cast<int>(p), static_cast<int>(s), static_cast<int>(e));
  } catch (const std::invalid_argument& ex) {
    throw InputError(ex.what());
  }
  const LocalParams& P = job.params;
  const std::string& kind = kv["kind"];
  if (kind == "cuspidal") {
    if (!kv.count("phi")) throw InputError("kind=cuspidal needs phi");
    if (kv.count("chi1") || kv.count("chi2")) throw InputError("kind=cuspidal takes no chi1/chi2");
    TameCharacter phi = make_character(P.p, 2 * P.s, parse_integer("phi", kv["phi"]));
    int nv = niveau(phi);
    if (P.s % nv == 0) {
      throw InputError("phi=" + kv["phi"] + " is not genuine: its niveau " + std::to_string(nv) +
                       " divides s=" + std::to_string(P.s));
    }
    job.type = make_cuspidal(phi);
  } else if (kind == "split") {
    if (!kv.count("chi1") || !kv.count("chi2")) throw InputError("kind=split needs chi1 and chi2");
    if (kv.count("phi")) throw InputError("kind=split takes no phi");
    job.type = make_split(make_character(P.p, P.s, parse_integer("chi1", kv["chi1"])),
                          make_character(P.p, P.s, parse_integer("chi2", kv["chi2"])));
  } else {
    throw InputError("kind must be cuspidal or split, got '" + kind + "'");
  }
  if (kv.count("delta")) {
    if (P.e >= P.p) throw InputError("delta is only meaningful when e < p");
    DeltaVector d;
    std::istringstream parts(kv["delta"]);
    std::string part;
    while (std::getline(parts, part, ',')) {
      i64 v = parse_integer("delta", part);
      if (v < 0 || v > P.e - 1) {
        throw InputError("delta entries must lie in [0, e-1], got " + part);
      }
      d.push_back(static_cast<int>(v));
    }
    if (static_cast<int>(d.size()) != P.s) {
      throw InputError("delta needs exactly s=" + std::to_string(P.s) + " entries");
    }
    job.delta = d;
  }
  if (kv.count("nu_convention")) {
    try {
      job.nu = parse_nu_convention(kv["nu_convention"]);
    } catch (const std::invalid_argument& ex) {
      throw InputError(ex.what());
    }
  }
  if (kv.count("format")) {
    if (kv["format"] == "plain") {
      job.format = OutputFormat::Plain;
    } else if (kv["format"] == "json") {
      job.format = OutputFormat::Json;
    } else {
      throw InputError("format must be plain or json");
    }
  }
  return job;
}

InertialType fixture_type(const FixtureForm& form, const LocalParams& params) {
  if (form.k < 2 || form.k > params.p + 1) {
    throw InputError("fixture weight k=" + std::to_string(form.k) + " outside [2, p+1]");
  }
  i64 E = static_cast<i64>(params.e) * (form.k - 1);
  if (form.ordinary) {
    return make_split(make_character(params.p, params.s, E), make_character(params.p, params.s, 0));
  }
  TameCharacter phi = make_character(params.p, 2 * params.s, E);
  if (params.s % niveau(phi) != 0) return make_cuspidal(phi);
  TameCharacter scalar = restrict_to_single(phi);
  return make_split(scalar, scalar);
}

const std::vector<TableBlock>& table_blocks() {
  static const std::vector<TableBlock> blocks = {
      {"non-ordinary k=2,6", false, {2, 6}}, {"non-ordinary k=5", false, {5}},
      {"non-ordinary k=3", false, {3}},      {"non-ordinary k=4", false, {4}},
      {"ordinary k=2,4,6", true, {2, 4, 6}}, {"ordinary k=3,5", true, {3, 5}},
  };
  return blocks;
}

const std::vector<ContainmentRow>& containment_rows() {
  using V = std::vector<std::string>;
  static const std::vector<ContainmentRow> rows = {
      {"non-ordinary", 2, false, V{"F(0,0)", "F(3,1)", "F(5,3)", "F(4,0)"}},
      {"non-ordinary", 3, false, V{"F(3,3)", "F(2,0)", "F(4,2)", "F(7,3)"}},
      {"non-ordinary", 3, false, V{"F(3,3)", "F(2,0)", "F(4,2)", "F(7,3)"}},
      {"non-ordinary", 4, false, V{"F(0,0)", "F(4,0)"}},
      {"non-ordinary", 6, false, V{"F(0,0)", "F(3,1)", "F(5,3)", "F(4,0)"}},
      {"irreducible ordinary", 4, true, V{"F(0,0)", "F(4,0)"}},
      {"irreducible ordinary", 6, true, V{"F(4,0)"}},
      {"irreducible ordinary", 6, true, V{"F(4,0)"}},
      {"reducible ordinary", 2, true, V{"F(3,1)", "F(5,3)"}},
      {"reducible ordinary", 2, true, V{"F(3,1)", "F(5,3)"}},
      {"reducible ordinary", 3, true, V{"F(3,3)", "F(7,3)"}},
      {"reducible ordinary", 3, true, V{"F(3,3)", "F(2,0)", "F(7,3)"}},
      {"reducible ordinary", 3, true, V{"F(3,3)", "F(7,3)"}},
      {"reducible ordinary", 3, true, V{"F(3,3)", "F(7,3)"}},
      {"reducible ordinary", 4, true, V{"F(2,2)", "F(6,2)"}},
      {"reducible ordinary", 4, true, V{"F(0,0)", "F(4,0)"}},
      {"reducible ordinary", 4, true, V{"F(3,1)", "F(5,3)"}},
      {"reducible ordinary", 4, true, V{"F(3,1)", "F(5,3)"}},
      {"reducible ordinary", 5, true, V{"F(3,3)", "F(2,0)", "F(7,3)"}},
      {"reducible ordinary", 5, true, V{"F(3,3)", "F(7,3)"}},
      {"reducible ordinary", 5, true, V{"F(3,3)", "F(7,3)"}},
      {"reducible ordinary", 6, true, V{"F(4,0)"}},
      {"reducible ordinary", 6, true, V{"F(3,1)", "F(5,3)"}},
      {"reducible ordinary", 6, true, V{"F(4,0)"}},
      {"reducible ordinary", 6, true, V{"F(3,1)", "F(5,3)"}},
  };
  return rows;
}

std::string cmd_predict(const JobSpec& job) {
  WeightSet set;
  try {
    set = job.delta ? predicted_weight_set_for_delta(job.type, *job.delta, job.params)
                    : predicted_weight_set(job.type, job.params);
  } catch (const std::invalid_argument& ex) {
    throw InputError(ex.what());
  }
  if (job.format == OutputFormat::Json) return render_json(job, set, "weights");
  return render_lines(job.params, set);
}

std::string cmd_jh(const JobSpec& job) {
  if (job.type.kind != TypeKind::Cuspidal) {
    throw InputError("jh is defined for cuspidal types only");
  }
  WeightSet set = jh_constituents_cuspidal(job.type.phi, job.params);
  if (job.format == OutputFormat::Json) return render_json(job, set, "constituents");
  return render_lines(job.params, set, "JH");
}

std::string cmd_reproduce_tables(bool* ok) {
  const LocalParams params = make_params(5, 1, 2);
  std::string out;
  bool all_ok = true;
  for (const auto& block : table_blocks()) {
    std::map<WeightSet, std::vector<int>> by_set;
    for (int k : block.ks) {
      InertialType t = fixture_type({k, block.ordinary, block.label}, params);
      by_set[predicted_weight_set(t, params)].push_back(k);
    }
    for (const auto& [set, ks] : by_set) {
      std::string label = block.label;
      if (by_set.size() > 1) {
        // The block's forms disagree; print each group separately.
        label = block.ordinary ? "ordinary k=" : "non-ordinary k=";
        for (size_t i = 0; i < ks.size(); ++i) label += (i ? "," : "") + std::to_string(ks[i]);
        all_ok = false;
      }
      out += "## " + label + "\n" + render_lines(params, set) + "\n";
    }
  }
  out += "## containment of observed weights\n";
  for (const auto& row : containment_rows()) {
    InertialType t = fixture_type({row.k, row.ordinary, row.table}, params);
    WeightSet set = predicted_weight_set(t, params);
    std::vector<std::string> missing;
    for (const auto& w : row.weights) {
      if (!set.count(parse_weight(w, params.p, params.s))) missing.push_back(w);
    }
    std::string listed;
    for (size_t i = 0; i < row.weights.size(); ++i) listed += (i ? ", " : "") + row.weights[i];
    out += row.table + " k=" + std::to_string(row.k) + ": " + listed + " -> ";
    if (missing.empty()) {
      out += "inside\n";
    } else {
      all_ok = false;
      out += "OUTSIDE (";
      for (size_t i = 0; i < missing.size(); ++i) out += (i ? ", " : "") + missing[i];
      out += ")\n";
    }
  }
  if (ok) *ok = all_ok;
  return out;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "equivalence25", "equivalence26", "xi",        "lemma27",
      "phi-omega",     "thm34",         "maximal-e", "monotonicity"};
  return names;
}

int cmd_verify(const VerifyRequest& request, std::ostream& out) {
  const auto& names = verify_suite_names();
  if (std::find(names.begin(), names.end(), request.suite) == names.end()) {
    throw InputError("unknown suite '" + request.suite + "'");
  }
  std::vector<int> ps = request.p ? std::vector<int>{*request.p} : std::vector<int>{3, 5};
  int s_max = (request.suite == "xi" || request.suite == "lemma27") ? 3 : 2;
  std::vector<int> ss;
  if (request.s) {
    ss = {*request.s};
  } else {
    for (int s = 1; s <= s_max; ++s) ss.push_back(s);
  }
  Deadline deadline(request.max_seconds);
  bool all_pass = true;
  auto record = [&](const SuiteReport& rep) {
    out << rep.summary() << "\n";
    all_pass = all_pass && rep.pass;
  };
  try {
    for (int p : ps) {
      for (int s : ss) {
        if (request.suite == "monotonicity") {
          make_params(p, s, 1);
          record(verify_monotonicity(p, s, deadline));
          continue;
        }
        std::vector<int> es;
        if (request.e) {
          es = {*request.e};
        } else if (request.suite == "maximal-e") {
          es = {p - 1, p};
        } else {
          for (int e = 1; e <= p - 1; ++e) es.push_back(e);
        }
        for (int e : es) {
          LocalParams params = make_params(p, s, e);
          const std::string& n = request.suite;
          if (n == "equivalence25") record(verify_equivalence25(params, deadline));
          if (n == "equivalence26") record(verify_equivalence26(params, deadline));
          if (n == "xi") record(verify_xi(params, deadline));
          if (n == "lemma27") record(verify_lemma27(params, deadline));
          if (n == "phi-omega") record(verify_phi_omega(params, deadline, request.nu));
          if (n == "thm34") record(verify_thm34(params, deadline, request.nu));
          if (n == "maximal-e") record(verify_structural(params, deadline));
        }
      }
    }
  } catch (const std::invalid_argument& ex) {
    throw InputError(ex.what());
  }
  out << "verify " << request.suite << ": " << (all_pass ? "PASS" : "FAIL") << "\n";
  return all_pass ? kExitOk : kExitVerificationFailure;
}

}  // namespace serrewt::cli
