// Copyright 2026 The wrep developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WREP_EXPERIMENT_HPP_
#define WREP_EXPERIMENT_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "wrep/sweep.hpp"

namespace wrep {

// A bad configuration value; carries the offending field name.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& field, const std::string& message)
      : std::runtime_error("config field '" + field + "': " + message),
        field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Inclusive start:stop:step grid.
struct RangeSpec {
  double start = 1.0;
  double stop = 1.0;
  double step = 1.0;
  std::vector<double> values() const;
  void validate(const std::string& field) const;
  static RangeSpec parse(const std::string& text, const std::string& field);
};

struct ExperimentConfig {
  std::string command;  // swap-sweep | relay | purify-trace | epp-threshold
                        // | repeater-curves | repeater-loop | resources
  RangeSpec q_range{1.0, 1.0, 1.0};
  RangeSpec p_range{1.0, 1.0, 1.0};
  RangeSpec f_range{0.9, 0.9, 1.0};  // working fidelities
  std::string protocol = "improved";  // improved | stabilizer | both
  int max_iters = 200;
  double conv_tol = 1e-9;
  double bisection_tol = 1e-3;
  int n_max = 5;
  double f_stop = 0.465;
  bool link_pq = false;          // relay: tie p to the q grid
  std::string mode = "single";   // swap-sweep: single | q-threshold
  std::string out_path = "-";
  std::string format = "csv";
  long seed = 0;  // reserved; all computation is deterministic

  void validate() const;
};

// Loads a flat key-value JSON config file into `config`; unknown keys and
// wrong types raise ConfigError.
void load_config_file(const std::string& path, ExperimentConfig& config);

// Runs the configured experiment over its parameter grid. Rows are emitted
// in deterministic lexicographic parameter order; per-point failures are
// recorded in the status column.
SweepTable run_experiment(const ExperimentConfig& config);

}  // namespace wrep

#endif  // WREP_EXPERIMENT_HPP_
