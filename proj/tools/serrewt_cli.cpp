// serrewt: predicted Serre weights for tamely ramified local types.
//
//   serrewt predict [FILE | key=value ...] [--json]
//   serrewt jh [FILE | key=value ...] [--json]
//   serrewt reproduce-tables
//   serrewt verify SUITE [--p P] [--s S] [--e E] [--max-seconds T] [--nu NU]
//
// Exit codes: 0 ok, 2 input error, 3 verification failure.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "serrewt/cli.hpp"

namespace {

using namespace serrewt::cli;

std::string read_job_text(const std::vector<std::string>& args) {
  if (args.empty() || (args.size() == 1 && args[0] == "-")) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  if (args.size() == 1 && args[0].find('=') == std::string::npos) {
    std::ifstream in(args[0]);
    if (!in) throw InputError("cannot read input file '" + args[0] + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::string text;
  for (const auto& a : args) text += a + "\n";
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Predicted Serre weights for tamely ramified two-dimensional local types"};
  app.require_subcommand(1);

  std::vector<std::string> predict_args;
  bool predict_json = false;
  auto* predict = app.add_subcommand("predict", "Print the predicted weight set W?");
  predict->add_option("input", predict_args, "Input file, '-' for stdin, or key=value tokens");
  predict->add_flag("--json", predict_json, "Machine-readable output");

  std::vector<std::string> jh_args;
  bool jh_json = false;
  auto* jh = app.add_subcommand("jh", "Print the JH constituents of a cuspidal type");
  jh->add_option("input", jh_args, "Input file, '-' for stdin, or key=value tokens");
  jh->add_flag("--json", jh_json, "Machine-readable output");

  auto* tables = app.add_subcommand("reproduce-tables", "Print the p = 5 reference tables");

  VerifyRequest req;
  std::string nu_text = "successor";
  int vp = 0;
  int vs = 0;
  int ve = 0;
  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify->add_option("suite", req.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(verify_suite_names()));
  auto* op = verify->add_option("--p", vp, "Prime p");
  auto* os = verify->add_option("--s", vs, "Residue degree s");
  auto* oe = verify->add_option("--e", ve, "Ramification index e");
  verify->add_option("--max-seconds", req.max_seconds, "Wall-clock budget, 0 for unlimited");
  verify->add_option("--nu", nu_text, "nu convention: self, successor or predecessor")
      ->check(CLI::IsMember({"self", "successor", "predecessor"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*predict) {
      JobSpec job = parse_input(read_job_text(predict_args));
      if (predict_json) job.format = OutputFormat::Json;
      std::cout << cmd_predict(job);
      return kExitOk;
    }
    if (*jh) {
      JobSpec job = parse_input(read_job_text(jh_args));
      if (jh_json) job.format = OutputFormat::Json;
      std::cout << cmd_jh(job);
      return kExitOk;
    }
    if (*tables) {
      bool ok = true;
      std::cout << cmd_reproduce_tables(&ok);
      return ok ? kExitOk : kExitVerificationFailure;
    }
    if (*verify) {
      if (op->count()) req.p = vp;
      if (os->count()) req.s = vs;
      if (oe->count()) req.e = ve;
      req.nu = serrewt::parse_nu_convention(nu_text);
      return cmd_verify(req, std::cout);
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
