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

#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "carent/errors.hpp"

namespace carent::app {

using nlohmann::json;

namespace {

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) throw ScenarioError(path + "." + key, "missing required field");
  return obj.at(key);
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ScenarioError(path, "expected a number");
  return v.get<double>();
}

int as_positive_int(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 1) throw ScenarioError(path, "expected a positive integer");
  return v.get<int>();
}

std::size_t as_index(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ScenarioError(path, "expected a nonnegative integer");
  return v.get<std::size_t>();
}

// A scalar is either a number or a [re, im] pair.
Complex as_complex(const json& v, const std::string& path) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ScenarioError(path, "expected a number or a [re, im] pair");
}

Matrix as_matrix(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) throw ScenarioError(path, "expected a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(v.size());
  Matrix m(rows, rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    const json& row = v[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != rows) throw ScenarioError(rp, "matrix must be square");
    for (Eigen::Index j = 0; j < rows; ++j) {
      m(i, j) = as_complex(row[static_cast<std::size_t>(j)], rp + "[" + std::to_string(j) + "]");
    }
  }
  return m;
}

Vector as_vector(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) throw ScenarioError(path, "expected a non-empty array");
  Vector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = as_complex(v[i], path + "[" + std::to_string(i) + "]");
  return out;
}

std::vector<std::size_t> as_index_list(const json& v, const std::string& path, std::size_t bound) {
  if (!v.is_array()) throw ScenarioError(path, "expected an array of excitation indices");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const std::size_t k = as_index(v[i], p);
    if (k >= bound) throw ScenarioError(p, "excitation index out of range");
    out.push_back(k);
  }
  return out;
}

int checked_modes(const json& v, const std::string& path) {
  const int n = as_positive_int(v, path);
  if (n > kMaxModelModes) {
    throw ResourceLimitError(path + ": " + std::to_string(n) + " modes exceeds the limit of " +
                             std::to_string(kMaxModelModes));
  }
  return n;
}

SelfDualHamiltonian parse_model(const json& model, const ParseOptions& options, std::string& description) {
  const std::string path = "model";
  if (!model.is_object()) throw ScenarioError(path, "expected an object");
  const json& type = require(model, "type", path);
  if (!type.is_string()) throw ScenarioError(path + ".type", "expected a string");
  const std::string kind = type.get<std::string>();

  if (kind == "chain") {
    const int n = checked_modes(require(model, "n", path), path + ".n");
    const double t = as_number(require(model, "t", path), path + ".t");
    const double mu = model.contains("mu") ? as_number(model.at("mu"), path + ".mu") : 0.0;
    std::ostringstream os;
    os << "chain(n=" << n << ", t=" << t << ", mu=" << mu << ")";
    description = os.str();
    return embed_hamiltonian(build_canonical_space(n), chain_h0(n, t, mu));
  }
  if (kind == "random") {
    const int n = checked_modes(require(model, "n", path), path + ".n");
    std::uint64_t seed = 0;
    if (model.contains("seed")) {
      const json& s = model.at("seed");
      if (!s.is_number_integer() || s.get<long long>() < 0) throw ScenarioError(path + ".seed", "expected a nonnegative integer");
      seed = s.get<std::uint64_t>();
    }
    if (options.seed) seed = *options.seed;
    const double scale = model.contains("scale") ? as_number(model.at("scale"), path + ".scale") : 1.0;
    std::ostringstream os;
    os << "random(n=" << n << ", seed=" << seed << ", scale=" << scale << ")";
    description = os.str();
    return embed_hamiltonian(build_canonical_space(n), random_h0(n, seed, scale));
  }
  if (kind == "explicit") {
    if (model.contains("h0")) {
      const Matrix h0 = as_matrix(model.at("h0"), path + ".h0");
      description = "explicit(h0, n=" + std::to_string(h0.rows()) + ")";
      return embed_hamiltonian(build_canonical_space(static_cast<int>(h0.rows())), h0);
    }
    if (model.contains("h")) {
      const Matrix h = as_matrix(model.at("h"), path + ".h");
      if (h.rows() % 2 != 0) throw ScenarioError(path + ".h", "self-dual h must have even dimension");
      description = "explicit(h, dim=" + std::to_string(h.rows()) + ")";
      return validate_hamiltonian(build_canonical_space(static_cast<int>(h.rows() / 2)), h);
    }
    throw ScenarioError(path, "explicit model needs \"h0\" (n x n) or \"h\" (2n x 2n)");
  }
  throw ScenarioError(path + ".type", "unknown model type \"" + kind + "\" (chain, random, explicit)");
}

std::vector<double> parse_betas(const json& v) {
  const std::string path = "beta";
  std::vector<double> out;
  if (v.is_number()) {
    out.push_back(v.get<double>());
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_number(v[i], path + "[" + std::to_string(i) + "]"));
  } else if (v.is_object()) {
    const double lo = as_number(require(v, "min", path), path + ".min");
    const double hi = as_number(require(v, "max", path), path + ".max");
    const int steps = as_positive_int(require(v, "steps", path), path + ".steps");
    out = geometric_grid(lo, hi, steps);
  } else {
    throw ScenarioError(path, "expected a number, an array, or {min, max, steps}");
  }
  if (out.empty()) throw ScenarioError(path, "no inverse temperatures given");
  for (double b : out) {
    if (!std::isfinite(b) || b <= 0.0) throw DomainError("beta must be finite and positive");
  }
  return out;
}

Task parse_task(const json& v, const std::string& path) {
  if (!v.is_string()) throw ScenarioError(path, "expected a task name");
  const std::string s = v.get<std::string>();
  if (s == "single") return Task::single;
  if (s == "multi") return Task::multi;
  if (s == "between") return Task::between;
  if (s == "exponential") return Task::exponential;
  if (s == "npoint") return Task::npoint;
  if (s == "verify") return Task::verify;
  throw ScenarioError(path, "unknown task \"" + s + "\"");
}

}  // namespace

bool Scenario::has_task(Task t) const { return std::find(tasks.begin(), tasks.end(), t) != tasks.end(); }

std::string to_string(Task t) {
  switch (t) {
    case Task::single: return "single";
    case Task::multi: return "multi";
    case Task::between: return "between";
    case Task::exponential: return "exponential";
    case Task::npoint: return "npoint";
    case Task::verify: return "verify";
  }
  return "unknown";
}

Matrix chain_h0(int n, double hopping, double mu) {
  if (n < 1) throw DomainError("chain needs n >= 1");
  Matrix h0 = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    h0(i, i) = -mu;
    if (i + 1 < n) h0(i, i + 1) = h0(i + 1, i) = -hopping;
  }
  return h0;
}

Matrix random_h0(int n, std::uint64_t seed, double scale) {
  if (n < 1) throw DomainError("random model needs n >= 1");
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = normal(gen);
      const double im = normal(gen);
      g(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  return scale * 0.5 * (g + g.adjoint());
}

std::vector<double> geometric_grid(double beta_min, double beta_max, int steps) {
  if (!std::isfinite(beta_min) || !std::isfinite(beta_max) || beta_min <= 0.0 || beta_max < beta_min) {
    throw DomainError("beta grid needs 0 < beta_min <= beta_max");
  }
  if (steps < 1) throw DomainError("beta grid needs at least one step");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) return {beta_min};
  const double ratio = beta_max / beta_min;
  for (int k = 0; k < steps; ++k) {
    out.push_back(k + 1 == steps ? beta_max : beta_min * std::pow(ratio, static_cast<double>(k) / (steps - 1)));
  }
  return out;
}

Scenario parse_scenario(const std::string& text, const ParseOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError("$", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ScenarioError("$", "scenario must be a JSON object");

  std::string description;
  SelfDualHamiltonian h = parse_model(require(doc, "model", "$"), options, description);
  const OneParticleSpace& space = h.space();
  std::vector<double> betas = parse_betas(require(doc, "beta", "$"));

  std::vector<ExcitationVector> excitations;
  const json& exc = require(doc, "excitations", "$");
  if (!exc.is_array()) throw ScenarioError("excitations", "expected an array");
  for (std::size_t i = 0; i < exc.size(); ++i) {
    const std::string path = "excitations[" + std::to_string(i) + "]";
    const json& e = exc[i];
    if (!e.is_object()) throw ScenarioError(path, "expected an object");
    std::optional<std::string> label;
    if (e.contains("label")) {
      if (!e.at("label").is_string()) throw ScenarioError(path + ".label", "expected a string");
      label = e.at("label").get<std::string>();
    }
    if (e.contains("mode")) {
      const std::size_t mode = as_index(e.at("mode"), path + ".mode");
      if (mode >= h.positive_modes().size()) {
        throw ScenarioError(path + ".mode", "mode " + std::to_string(mode) + " does not exist (" +
                                                std::to_string(h.positive_modes().size()) + " positive modes)");
      }
      ExcitationVector f = spectral_excitation(h, mode);
      excitations.emplace_back(space, f.components(), label.value_or(f.label()));
    } else if (e.contains("vector")) {
      const Vector v = as_vector(e.at("vector"), path + ".vector");
      if (v.size() != space.dim()) {
        throw ScenarioError(path + ".vector", "expected " + std::to_string(space.dim()) + " components");
      }
      bool symmetrize = false;
      if (e.contains("symmetrize")) {
        if (!e.at("symmetrize").is_boolean()) throw ScenarioError(path + ".symmetrize", "expected a boolean");
        symmetrize = e.at("symmetrize").get<bool>();
      }
      const std::string name = label.value_or("v" + std::to_string(i));
      if (symmetrize) {
        excitations.push_back(symmetrize_normalize(space, v, name));
      } else {
        excitations.emplace_back(space, v, name);
      }
    } else {
      throw ScenarioError(path, "excitation needs \"mode\" or \"vector\"");
    }
  }

  std::vector<Task> tasks;
  const json& tj = require(doc, "tasks", "$");
  if (!tj.is_array() || tj.empty()) throw ScenarioError("tasks", "expected a non-empty array");
  for (std::size_t i = 0; i < tj.size(); ++i) {
    const Task t = parse_task(tj[i], "tasks[" + std::to_string(i) + "]");
    if (std::find(tasks.begin(), tasks.end(), t) == tasks.end()) tasks.push_back(t);
  }

  std::vector<std::vector<std::size_t>> sets;
  if (doc.contains("sets")) {
    const json& s = doc.at("sets");
    if (!s.is_array()) throw ScenarioError("sets", "expected an array of index lists");
    for (std::size_t i = 0; i < s.size(); ++i) {
      sets.push_back(as_index_list(s[i], "sets[" + std::to_string(i) + "]", excitations.size()));
    }
  } else {
    std::vector<std::size_t> all(excitations.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    sets.push_back(std::move(all));
  }

  std::vector<BetweenPair> pairs;
  if (doc.contains("pairs")) {
    const json& p = doc.at("pairs");
    if (!p.is_array()) throw ScenarioError("pairs", "expected an array of {fs, gs} objects");
    for (std::size_t i = 0; i < p.size(); ++i) {
      const std::string path = "pairs[" + std::to_string(i) + "]";
      pairs.push_back({as_index_list(require(p[i], "fs", path), path + ".fs", excitations.size()),
                       as_index_list(require(p[i], "gs", path), path + ".gs", excitations.size())});
    }
  }
  if (std::find(tasks.begin(), tasks.end(), Task::between) != tasks.end() && pairs.empty()) {
    throw ScenarioError("pairs", "task \"between\" needs at least one {fs, gs} pair");
  }
  const bool needs_excitations = std::any_of(tasks.begin(), tasks.end(), [](Task t) {
    return t == Task::single || t == Task::exponential;
  });
  if (needs_excitations && excitations.empty()) {
    throw ScenarioError("excitations", "tasks single/exponential need at least one excitation");
  }

  OutputFormat format = OutputFormat::csv;
  if (doc.contains("output")) {
    const json& o = doc.at("output");
    const json& f = o.is_object() && o.contains("format") ? o.at("format") : o;
    if (!f.is_string() || (f != "csv" && f != "json")) throw ScenarioError("output.format", "expected \"csv\" or \"json\"");
    format = f == "json" ? OutputFormat::json : OutputFormat::csv;
  }

  return Scenario{std::move(description), std::move(h),     std::move(betas), std::move(excitations),
                  std::move(sets),        std::move(pairs), std::move(tasks), format};
}

}  // namespace carent::app
