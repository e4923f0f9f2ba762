// Copyright 2026 The carent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// carent: relative entropies of excitation states over quasifree KMS states.
//
//   carent run    <scenario.json> [flags]
//   carent verify <scenario.json> [flags]
//   carent sweep  <scenario.json> --beta-min X --beta-max Y --steps K [flags]
//
// Exit codes: 0 success, 1 tolerance breach, 2 input/validation error, 3 resource limit.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "carent/errors.hpp"
#include "runner.hpp"
#include "scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBreach = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct Flags {
  std::string scenario;
  std::string out;
  std::string format;
  double tolerance = 1e-6;
  std::optional<std::uint64_t> seed;
  int max_modes = carent::kDefaultMaxModes;
  bool timing = false;
  double beta_min = 0.0;
  double beta_max = 0.0;
  int steps = 0;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("scenario", f.scenario, "Scenario file (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--out", f.out, "Output path (default: stdout)");
  cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--tolerance", f.tolerance, "Oracle agreement tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "Seed for random models");
  cmd->add_option("--max-modes", f.max_modes, "Mode cap for the Fock oracle")->check(CLI::Range(1, 20));
  cmd->add_flag("--timing", f.timing, "Fill the ms column with wall-clock times");
}

int execute(const Flags& f, bool verify, bool sweep) {
  std::ifstream in(f.scenario);
  if (!in) {
    std::cerr << "error: cannot read " << f.scenario << "\n";
    return kExitInput;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  carent::app::ParseOptions parse;
  parse.seed = f.seed;
  carent::app::Scenario scenario = carent::app::parse_scenario(buf.str(), parse);
  if (sweep) scenario.betas = carent::app::geometric_grid(f.beta_min, f.beta_max, f.steps);

  carent::app::RunOptions opt;
  opt.verify = verify;
  opt.tolerance = f.tolerance;
  opt.max_modes = f.max_modes;
  opt.timing = f.timing;
  const carent::app::RunReport report = carent::app::run(scenario, opt);

  carent::app::OutputFormat format = scenario.format;
  if (f.format == "csv") format = carent::app::OutputFormat::csv;
  if (f.format == "json") format = carent::app::OutputFormat::json;

  auto emit = [&](std::ostream& os) {
    if (format == carent::app::OutputFormat::json) {
      carent::app::write_json(os, report.rows);
    } else {
      carent::app::write_csv(os, report.rows);
    }
  };
  if (f.out.empty()) {
    emit(std::cout);
  } else {
    std::ofstream out(f.out);
    if (!out) {
      std::cerr << "error: cannot write " << f.out << "\n";
      return kExitInput;
    }
    emit(out);
  }

  if (report.tolerance_breach) {
    std::cerr << "tolerance breach: some abs_err exceeds " << f.tolerance << "\n";
    return kExitBreach;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative entropy of fermionic excitation states over quasifree KMS states"};
  app.require_subcommand(1);

  Flags flags;
  CLI::App* run_cmd = app.add_subcommand("run", "Compute the scenario's tasks");
  CLI::App* verify_cmd = app.add_subcommand("verify", "Compute and cross-check against the Fock oracle");
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run over a geometric grid of inverse temperatures");
  add_common(run_cmd, flags);
  add_common(verify_cmd, flags);
  add_common(sweep_cmd, flags);
  sweep_cmd->add_option("--beta-min", flags.beta_min, "Smallest beta")->required();
  sweep_cmd->add_option("--beta-max", flags.beta_max, "Largest beta")->required();
  sweep_cmd->add_option("--steps", flags.steps, "Number of grid points")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (verify_cmd->parsed()) return execute(flags, true, false);
    return execute(flags, false, sweep_cmd->parsed());
  } catch (const carent::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const carent::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
