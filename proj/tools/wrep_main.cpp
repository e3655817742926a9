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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wrep/experiment.hpp"
#include "wrep/types.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"W-state repeater simulation toolkit"};
  app.require_subcommand(1);

  std::string config_path, q_text, p_text, f_text;
  wrep::ExperimentConfig config;

  const std::vector<std::string> commands = {
      "swap-sweep",      "relay",         "purify-trace", "epp-threshold",
      "repeater-curves", "repeater-loop", "resources"};
  const std::vector<std::string> descriptions = {
      "single-merge observables over a (q,p) grid, or maximum tolerable q",
      "iterated merging of identical copies over distance",
      "per-iteration purification records",
      "purification fixed points and minimal fidelities",
      "repeater operation curves and the noise crossing point",
      "swap-then-purify loop at given working fidelities",
      "expected elementary copies per repeater round"};

  for (std::size_t i = 0; i < commands.size(); ++i) {
    CLI::App* sub = app.add_subcommand(commands[i], descriptions[i]);
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--q", q_text, "channel noise grid start:stop:step");
    sub->add_option("--p", p_text, "operational noise grid start:stop:step");
    sub->add_option("--f", f_text, "working fidelity grid start:stop:step");
    sub->add_option("--protocol", config.protocol,
                    "improved | stabilizer | both");
    sub->add_option("--max-iters", config.max_iters,
                    "purification iteration cap");
    sub->add_option("--tol", config.conv_tol, "convergence tolerance");
    sub->add_option("--bisection-tol", config.bisection_tol,
                    "bisection tolerance");
    sub->add_option("--n-max", config.n_max, "relay round cap");
    sub->add_option("--f-stop", config.f_stop, "relay fidelity cutoff");
    sub->add_flag("--link-pq", config.link_pq, "tie p to the q grid (relay)");
    sub->add_option("--mode", config.mode,
                    "swap-sweep mode: single | q-threshold");
    sub->add_option("--out", config.out_path, "output path ('-' = stdout)");
    sub->add_option("--format", config.format, "csv | json");
    sub->add_option("--seed", config.seed, "reserved (deterministic output)");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();

    if (!config_path.empty()) {
      wrep::load_config_file(config_path, config);
      if (!config.command.empty() && config.command != command) {
        throw wrep::ConfigError(
            "command", "config file says '" + config.command +
                           "' but the command line says '" + command + "'");
      }
    }
    config.command = command;

    // Command-line values override the file.
    auto override_range = [&](const std::string& flag, const std::string& text,
                              wrep::RangeSpec& range) {
      if (sub->count("--" + flag) > 0) {
        range = wrep::RangeSpec::parse(text, flag);
      }
    };
    override_range("q", q_text, config.q_range);
    override_range("p", p_text, config.p_range);
    override_range("f", f_text, config.f_range);

    const wrep::SweepTable table = wrep::run_experiment(config);
    wrep::emit(table, config.format, config.out_path);

    bool any_ok = table.empty();
    for (const auto& row : table.rows()) {
      for (std::size_t i = 0; i < row.keys().size(); ++i) {
        if (row.keys()[i] == "status" && row.value_str(i) == "ok") {
          any_ok = true;
          break;
        }
      }
      if (any_ok) break;
    }
    return any_ok ? kExitOk : kExitNumeric;
  } catch (const wrep::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const wrep::DegenerateOutcomeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
