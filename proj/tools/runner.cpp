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

#include "runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <nlohmann/json.hpp>

#include "carent/errors.hpp"
#include "carent/quasifree.hpp"
#include "carent/relent.hpp"

namespace carent::app {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<ExcitationVector> pick(const Scenario& s, const std::vector<std::size_t>& idx) {
  std::vector<ExcitationVector> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(s.excitations[i]);
  return out;
}

std::string join_labels(const std::vector<ExcitationVector>& fs) {
  std::string out;
  for (const auto& f : fs) {
    if (!out.empty()) out += ';';
    out += f.label();
  }
  return out;
}

// Fock representation plus Gibbs density at one beta, or the reason there is none.
struct Oracle {
  std::optional<FockRep> rep;
  std::optional<DensityMatrix> rho;
  std::string unavailable;
};

Oracle make_oracle(const Scenario& s, double beta, int max_modes) {
  Oracle o;
  try {
    o.rep.emplace(build_fock_rep(s.hamiltonian, max_modes));
    o.rho.emplace(gibbs_density(*o.rep, beta));
  } catch (const ZeroModeError& e) {
    o.rep.reset();
    o.unavailable = std::string("oracle unavailable: ") + e.what();
  } catch (const ResourceLimitError& e) {
    o.rep.reset();
    o.unavailable = std::string("oracle unavailable: ") + e.what();
  }
  return o;
}

class RowBuilder {
 public:
  RowBuilder(const RunOptions& opt, RunReport& report) : opt_(opt), report_(report) {}

  template <class Compute, class Check>
  void add(const std::string& task, const std::string& labels, double beta, Compute&& compute,
           const Oracle* oracle, Check&& check) {
    ResultRow row;
    row.task = task;
    row.labels = labels;
    row.beta = beta;
    const auto t0 = Clock::now();
    row.value = compute();
    const auto t1 = Clock::now();
    if (opt_.timing) row.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (oracle) {
      if (oracle->rep) {
        row.oracle_value = check(*oracle->rep, *oracle->rho);
        row.abs_err = std::abs(row.value - *row.oracle_value);
        if (*row.abs_err > opt_.tolerance) report_.tolerance_breach = true;
      } else {
        row.note = oracle->unavailable;
      }
    }
    report_.rows.push_back(std::move(row));
  }

 private:
  const RunOptions& opt_;
  RunReport& report_;
};

}  // namespace

RunReport run(const Scenario& s, const RunOptions& opt) {
  RunReport report;
  RowBuilder rows(opt, report);
  const bool verify = opt.verify || s.has_task(Task::verify);

  // Oracle builds are serialized and cached per beta.
  std::vector<std::optional<Oracle>> oracles(s.betas.size());
  auto oracle_at = [&](std::size_t bi) -> const Oracle* {
    if (!verify) return nullptr;
    if (!oracles[bi]) oracles[bi] = make_oracle(s, s.betas[bi], opt.max_modes);
    return &*oracles[bi];
  };

  for (Task task : s.tasks) {
    if (task == Task::verify) continue;
    for (std::size_t bi = 0; bi < s.betas.size(); ++bi) {
      const double beta = s.betas[bi];
      const QuasifreeState state = QuasifreeState::kms(s.hamiltonian, beta);
      const Oracle* oracle = oracle_at(bi);

      switch (task) {
        case Task::single:
        case Task::exponential:
          for (const auto& f : s.excitations) {
            const std::vector<ExcitationVector> one{f};
            if (task == Task::single) {
              rows.add("single", f.label(), beta, [&] { return relent_single(state, f).value(); }, oracle,
                       [&](const FockRep& rep, const DensityMatrix& rho) {
                         return umegaki(rho, excited_density(rep, rho, one));
                       });
            } else {
              rows.add("exponential", f.label(), beta, [&] { return relent_exponential(state, f).value(); }, oracle,
                       [&](const FockRep& rep, const DensityMatrix& rho) {
                         const Matrix b = represent(rep, f.components());
                         const Matrix id = Matrix::Identity(rep.dim(), rep.dim());
                         const Matrix e = std::cos(1.0) * id + Complex(0.0, std::sin(1.0)) * b;
                         return umegaki(rho, conjugated_density(e, rho));
                       });
            }
          }
          break;
        case Task::multi:
          for (const auto& idx : s.sets) {
            const auto fs = pick(s, idx);
            rows.add("multi", join_labels(fs), beta, [&] { return relent_multi(state, fs).value(); }, oracle,
                     [&](const FockRep& rep, const DensityMatrix& rho) {
                       return umegaki(rho, excited_density(rep, rho, fs));
                     });
          }
          break;
        case Task::between:
          for (const auto& pair : s.pairs) {
            const auto fs = pick(s, pair.fs);
            const auto gs = pick(s, pair.gs);
            rows.add("between", join_labels(fs) + "|" + join_labels(gs), beta,
                     [&] { return relent_between(state, fs, gs).value(); }, oracle,
                     [&](const FockRep& rep, const DensityMatrix& rho) {
                       // Araki order: the reference (gs) density weighs the logarithms
                       return umegaki(excited_density(rep, rho, gs), excited_density(rep, rho, fs));
                     });
          }
          break;
        case Task::npoint:
          for (const auto& idx : s.sets) {
            const auto fs = pick(s, idx);
            std::vector<Vector> vs;
            for (const auto& f : fs) vs.push_back(f.components());
            std::optional<Complex> value;
            std::optional<Complex> expected;
            auto compute = [&] {
              if (!value) value = n_point(state, vs);
              return *value;
            };
            auto check = [&](const FockRep& rep, const DensityMatrix& rho) {
              if (!expected) expected = expectation(rho, represent_product(rep, fs));
              return *expected;
            };
            const std::string labels = join_labels(fs);
            rows.add("npoint.re", labels, beta, [&] { return compute().real(); }, oracle,
                     [&](const FockRep& rep, const DensityMatrix& rho) { return check(rep, rho).real(); });
            rows.add("npoint.im", labels, beta, [&] { return compute().imag(); }, oracle,
                     [&](const FockRep& rep, const DensityMatrix& rho) { return check(rep, rho).imag(); });
          }
          break;
        case Task::verify:
          break;
      }
    }
  }
  return report;
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string optional_number(const std::optional<double>& x) { return x ? format_number(*x) : std::string(); }

std::string json_number(const std::optional<double>& x) {
  if (!x) return "null";
  if (!std::isfinite(*x)) return "null";
  return format_number(*x);
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<ResultRow>& rows) {
  os << "task,labels,beta,value,oracle_value,abs_err,ms,note\n";
  for (const auto& r : rows) {
    os << csv_cell(r.task) << ',' << csv_cell(r.labels) << ',' << format_number(r.beta) << ','
       << format_number(r.value) << ',' << optional_number(r.oracle_value) << ',' << optional_number(r.abs_err)
       << ',' << optional_number(r.ms) << ',' << csv_cell(r.note) << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<ResultRow>& rows) {
  using nlohmann::json;
  os << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << (i ? ",\n " : "\n ") << "{\"task\": " << json(r.task).dump() << ", \"labels\": " << json(r.labels).dump()
       << ", \"beta\": " << json_number(r.beta) << ", \"value\": " << json_number(r.value)
       << ", \"oracle_value\": " << json_number(r.oracle_value) << ", \"abs_err\": " << json_number(r.abs_err)
       << ", \"ms\": " << json_number(r.ms) << ", \"note\": " << json(r.note).dump() << "}";
  }
  os << (rows.empty() ? "]\n" : "\n]\n");
}

}  // namespace carent::app
