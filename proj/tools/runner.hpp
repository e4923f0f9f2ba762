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

#ifndef CARENT_APP_RUNNER_HPP
#define CARENT_APP_RUNNER_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "carent/fock_oracle.hpp"
#include "scenario.hpp"

namespace carent::app {

struct ResultRow {
  std::string task;
  std::string labels;
  double beta = 0.0;
  double value = 0.0;
  std::optional<double> oracle_value;
  std::optional<double> abs_err;
  std::optional<double> ms;
  std::string note;
};

struct RunOptions {
  /// Attach oracle values even when the scenario does not list "verify".
  bool verify = false;
  double tolerance = 1e-6;
  int max_modes = kDefaultMaxModes;
  bool timing = false;
};

struct RunReport {
  std::vector<ResultRow> rows;
  /// Some row has abs_err > tolerance.
  bool tolerance_breach = false;
};

RunReport run(const Scenario& scenario, const RunOptions& options = {});

void write_csv(std::ostream& os, const std::vector<ResultRow>& rows);
void write_json(std::ostream& os, const std::vector<ResultRow>& rows);

/// printf("%.17g")
std::string format_number(double x);

}  // namespace carent::app

#endif  // CARENT_APP_RUNNER_HPP
