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

#ifndef CARENT_APP_SCENARIO_HPP
#define CARENT_APP_SCENARIO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "carent/errors.hpp"
#include "carent/one_particle.hpp"

namespace carent::app {

enum class Task { single, multi, between, exponential, npoint, verify };
enum class OutputFormat { csv, json };

/// Schema violation in a scenario document; `path` names the offending field.
class ScenarioError : public Error {
 public:
  ScenarioError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct BetweenPair {
  std::vector<std::size_t> fs;
  std::vector<std::size_t> gs;
};

/// A validated scenario: the model is already turned into a self-dual h and
/// every excitation entry into an admissible vector.
struct Scenario {
  std::string model_description;
  SelfDualHamiltonian hamiltonian;
  std::vector<double> betas;
  std::vector<ExcitationVector> excitations;
  /// Index lists into `excitations` for multi and npoint rows.
  std::vector<std::vector<std::size_t>> sets;
  std::vector<BetweenPair> pairs;
  std::vector<Task> tasks;
  OutputFormat format = OutputFormat::csv;

  bool has_task(Task t) const;
};

/// Largest model the parser accepts; bigger ones raise ResourceLimitError.
inline constexpr int kMaxModelModes = 512;

struct ParseOptions {
  /// Replaces the seed of random models when set.
  std::optional<std::uint64_t> seed;
};

/// Parses and validates a JSON scenario document. Throws ScenarioError for
/// schema problems and the library's errors for invalid models or vectors.
Scenario parse_scenario(const std::string& text, const ParseOptions& options = {});

/// h0 for the chain model: -t on the off-diagonals, -mu on the diagonal.
Matrix chain_h0(int n, double hopping, double mu);

/// Seeded Gaussian Hermitian h0 = scale (G + G†)/2, G with iid complex normal entries.
Matrix random_h0(int n, std::uint64_t seed, double scale = 1.0);

/// beta_min (beta_max / beta_min)^{k/(steps-1)}, k = 0..steps-1.
std::vector<double> geometric_grid(double beta_min, double beta_max, int steps);

std::string to_string(Task t);

}  // namespace carent::app

#endif  // CARENT_APP_SCENARIO_HPP
