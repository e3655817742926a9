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

#include "wrep/experiment.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>

#include <json.hpp>

#include "wrep/repeater.hpp"

namespace wrep {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

const std::set<std::string>& known_commands() {
  static const std::set<std::string> commands = {
      "swap-sweep",      "relay",         "purify-trace", "epp-threshold",
      "repeater-curves", "repeater-loop", "resources"};
  return commands;
}

std::vector<EppProtocol> protocols_of(const ExperimentConfig& config) {
  if (config.protocol == "both") {
    return {EppProtocol::Stabilizer, EppProtocol::Improved};
  }
  if (config.protocol == "stabilizer") return {EppProtocol::Stabilizer};
  return {EppProtocol::Improved};
}

EppOptions epp_options_of(const ExperimentConfig& config) {
  EppOptions options;
  options.max_iters = config.max_iters;
  options.conv_tol = config.conv_tol;
  return options;
}

SweepTable run_relay(const ExperimentConfig& config) {
  SweepTable table({"q", "p", "n", "distance", "fidelity", "success_prob",
                    "status"});
  for (double q : config.q_range.values()) {
    const std::vector<double> ps =
        config.link_pq ? std::vector<double>{q} : config.p_range.values();
    for (double p : ps) {
      try {
        const auto rounds = relay_simulate(q, p, config.n_max, config.f_stop);
        for (const auto& r : rounds) {
          table.add(SweepRow()
                        .set("q", q)
                        .set("p", p)
                        .set("n", r.n)
                        .set("distance", r.distance)
                        .set("fidelity", r.fidelity)
                        .set("success_prob", r.success_probability)
                        .set("status", "ok"));
        }
      } catch (const DegenerateOutcomeError&) {
        table.add(SweepRow()
                      .set("q", q)
                      .set("p", p)
                      .set("n", 0)
                      .set("distance", kNan)
                      .set("fidelity", kNan)
                      .set("success_prob", kNan)
                      .set("status", "degenerate"));
      }
    }
  }
  return table;
}

// Largest q whose relay run still reaches round n above the cutoff.
double relay_q_threshold(double p, int n, double f_stop, double tol) {
  auto reaches = [&](double q) {
    const auto rounds = relay_simulate(q, p, n, 0.0);
    return static_cast<int>(rounds.size()) >= n &&
           rounds[n - 1].fidelity >= f_stop;
  };
  if (!reaches(1.0)) return kNan;
  double hi = 1.0, lo = 0.5;
  if (reaches(lo)) return lo;  // threshold below the scanned family
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (reaches(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

SweepTable run_swap_sweep(const ExperimentConfig& config) {
  if (config.mode == "q-threshold") {
    SweepTable table({"p", "n", "q_max", "status"});
    for (double p : config.p_range.values()) {
      for (int n = 1; n <= config.n_max; ++n) {
        const double q = relay_q_threshold(p, n, config.f_stop,
                                           config.bisection_tol);
        table.add(SweepRow()
                      .set("p", p)
                      .set("n", n)
                      .set("q_max", q)
                      .set("status", std::isnan(q) ? "no_threshold" : "ok"));
      }
    }
    return table;
  }

  SweepTable table({"q", "p", "fidelity", "success_prob", "status"});
  for (double q : config.q_range.values()) {
    for (double p : config.p_range.values()) {
      try {
        const DensityOperator s = depolarized_w(q);
        const SwapResult res = swap_states(s, s, s, p);
        table.add(SweepRow()
                      .set("q", q)
                      .set("p", p)
                      .set("fidelity", res.fidelity)
                      .set("success_prob", res.success_probability)
                      .set("status", "ok"));
      } catch (const DegenerateOutcomeError&) {
        table.add(SweepRow()
                      .set("q", q)
                      .set("p", p)
                      .set("fidelity", kNan)
                      .set("success_prob", kNan)
                      .set("status", "degenerate"));
      }
    }
  }
  return table;
}

SweepTable run_purify_trace(const ExperimentConfig& config) {
  SweepTable table({"protocol", "q", "p", "iteration", "subroutine",
                    "fidelity", "success_prob", "copies", "resources",
                    "converged", "status"});
  for (EppProtocol protocol : protocols_of(config)) {
    for (double q : config.q_range.values()) {
      for (double p : config.p_range.values()) {
        const EppTrace trace =
            epp_run(depolarized_w(q), protocol, p, epp_options_of(config));
        const std::string status =
            trace.failed ? "degenerate" : "ok";
        for (const auto& step : trace.steps) {
          table.add(SweepRow()
                        .set("protocol", protocol_name(protocol))
                        .set("q", q)
                        .set("p", p)
                        .set("iteration", step.iteration)
                        .set("subroutine", subroutine_name(step.subroutine))
                        .set("fidelity", step.fidelity)
                        .set("success_prob", step.success_prob)
                        .set("copies", step.copies_consumed)
                        .set("resources", step.cumulative_resources)
                        .set("converged", trace.converged ? 1 : 0)
                        .set("status", status));
        }
        if (trace.steps.empty()) {
          table.add(SweepRow()
                        .set("protocol", protocol_name(protocol))
                        .set("q", q)
                        .set("p", p)
                        .set("iteration", 0)
                        .set("subroutine", "none")
                        .set("fidelity", kNan)
                        .set("success_prob", kNan)
                        .set("copies", 0)
                        .set("resources", kNan)
                        .set("converged", 0)
                        .set("status", status));
        }
      }
    }
  }
  return table;
}

// Smallest purifiable post-merge fidelity: the merge of three depolarized W
// copies replaces the depolarized-W family as threshold input.
double postswap_threshold(EppProtocol protocol, double p, double f_max,
                          double tol) {
  auto purifiable = [&](double q) {
    const DensityOperator s = depolarized_w(q);
    const SwapResult res = swap_states(s, s, s, p);
    return epp_purifies(res.output_state, protocol, p, f_max);
  };
  double hi = 1.0;
  if (!purifiable(hi)) return kNan;
  double lo = 0.55;
  while (lo > 0.0 && purifiable(lo)) {
    hi = lo;
    lo -= 0.15;
  }
  if (lo <= 0.0) return kNan;
  auto post_fidelity = [&](double q) {
    const DensityOperator s = depolarized_w(q);
    return swap_states(s, s, s, p).fidelity;
  };
  while (post_fidelity(hi) - post_fidelity(lo) > tol) {
    const double mid = 0.5 * (lo + hi);
    if (purifiable(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return post_fidelity(0.5 * (lo + hi));
}

SweepTable run_epp_threshold(const ExperimentConfig& config) {
  SweepTable table({"protocol", "p", "f_max", "f_threshold", "q_threshold",
                    "f_threshold_postswap", "status"});
  for (EppProtocol protocol : protocols_of(config)) {
    for (double p : config.p_range.values()) {
      const EppThresholdResult thr =
          epp_threshold(protocol, p, config.bisection_tol);
      if (!thr.found) {
        table.add(SweepRow()
                      .set("protocol", protocol_name(protocol))
                      .set("p", p)
                      .set("f_max", kNan)
                      .set("f_threshold", kNan)
                      .set("q_threshold", kNan)
                      .set("f_threshold_postswap", kNan)
                      .set("status", "not_purifiable"));
        continue;
      }
      const double post = postswap_threshold(protocol, p, thr.f_max,
                                             config.bisection_tol);
      table.add(SweepRow()
                    .set("protocol", protocol_name(protocol))
                    .set("p", p)
                    .set("f_max", thr.f_max)
                    .set("f_threshold", thr.fidelity)
                    .set("q_threshold", thr.q)
                    .set("f_threshold_postswap", post)
                    .set("status", "ok"));
    }
  }
  return table;
}

SweepTable run_repeater_curves(const ExperimentConfig& config) {
  SweepTable table(
      {"p", "f_max", "f_p", "f_r", "purifiable", "p_min", "status"});
  const ThresholdCurves curves =
      repeater_threshold_curves(config.p_range.values(),
                                config.bisection_tol);
  for (const auto& point : curves.points) {
    table.add(SweepRow()
                  .set("p", point.p)
                  .set("f_max", point.f_max)
                  .set("f_p", point.f_p)
                  .set("f_r", point.f_r)
                  .set("purifiable", point.purifiable ? 1 : 0)
                  .set("p_min", curves.p_min)
                  .set("status", point.purifiable ? "ok" : "not_purifiable"));
  }
  return table;
}

SweepTable run_repeater_loop(const ExperimentConfig& config) {
  SweepTable table({"p", "f_working", "f_after_swap", "f_after_first_epp",
                    "f_recovered", "purify_steps", "resources", "success",
                    "status"});
  for (double p : config.p_range.values()) {
    RepeaterAnalysis analysis(p, config.bisection_tol);
    for (double f : config.f_range.values()) {
      if (!analysis.purifiable()) {
        table.add(SweepRow()
                      .set("p", p)
                      .set("f_working", f)
                      .set("f_after_swap", kNan)
                      .set("f_after_first_epp", kNan)
                      .set("f_recovered", kNan)
                      .set("purify_steps", 0)
                      .set("resources", kNan)
                      .set("success", 0)
                      .set("status", "not_purifiable"));
        continue;
      }
      if (f > analysis.f_max() - 1e-6) {
        table.add(SweepRow()
                      .set("p", p)
                      .set("f_working", f)
                      .set("f_after_swap", kNan)
                      .set("f_after_first_epp", kNan)
                      .set("f_recovered", kNan)
                      .set("purify_steps", 0)
                      .set("resources", kNan)
                      .set("success", 0)
                      .set("status", "above_fixed_point"));
        continue;
      }
      const RepeaterRoundResult round = analysis.round(f, f);
      table.add(SweepRow()
                    .set("p", p)
                    .set("f_working", f)
                    .set("f_after_swap", round.f_after_swap)
                    .set("f_after_first_epp", round.f_after_first_epp)
                    .set("f_recovered", round.f_after_purify)
                    .set("purify_steps", round.purify_steps)
                    .set("resources", round.resources_round)
                    .set("success", round.success ? 1 : 0)
                    .set("status", round.success ? "ok" : "loop_open"));
    }
  }
  return table;
}

SweepTable run_resources(const ExperimentConfig& config) {
  SweepTable table({"p", "f_working", "resources", "purify_steps",
                    "operational", "status"});
  for (double p : config.p_range.values()) {
    RepeaterAnalysis analysis(p, config.bisection_tol);
    for (double f : config.f_range.values()) {
      std::string status = "ok";
      double copies = kNan;
      int steps = 0;
      bool operational = false;
      if (!analysis.purifiable()) {
        status = "not_purifiable";
      } else if (f > analysis.f_max() - 1e-6) {
        status = "above_fixed_point";
      } else {
        const RepeaterRoundResult round = analysis.round(f, f);
        operational = round.success;
        steps = round.purify_steps;
        if (round.success) {
          copies = round.resources_round;
        } else {
          status = "loop_open";
        }
      }
      table.add(SweepRow()
                    .set("p", p)
                    .set("f_working", f)
                    .set("resources", copies)
                    .set("purify_steps", steps)
                    .set("operational", operational ? 1 : 0)
                    .set("status", status));
    }
  }
  return table;
}

}  // namespace

std::vector<double> RangeSpec::values() const {
  std::vector<double> out;
  const int count =
      static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
  for (int i = 0; i < count; ++i) {
    out.push_back(start + i * step);
  }
  return out;
}

void RangeSpec::validate(const std::string& field) const {
  if (!(step > 0.0)) {
    throw ConfigError(field, "step must be positive");
  }
  if (stop < start) {
    throw ConfigError(field, "stop must not be below start");
  }
}

RangeSpec RangeSpec::parse(const std::string& text, const std::string& field) {
  RangeSpec spec;
  const auto c1 = text.find(':');
  try {
    if (c1 == std::string::npos) {
      spec.start = spec.stop = std::stod(text);
      spec.step = 1.0;
      return spec;
    }
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) {
      throw ConfigError(field, "expected start:stop:step");
    }
    spec.start = std::stod(text.substr(0, c1));
    spec.stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    spec.step = std::stod(text.substr(c2 + 1));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError(field, "malformed range '" + text + "'");
  }
  spec.validate(field);
  return spec;
}

void ExperimentConfig::validate() const {
  if (known_commands().find(command) == known_commands().end()) {
    throw ConfigError("command", "unknown command '" + command + "'");
  }
  q_range.validate("q");
  p_range.validate("p");
  f_range.validate("f");
  if (q_range.start < 0.0 || q_range.stop > 1.0) {
    throw ConfigError("q", "values must lie in [0,1]");
  }
  if (p_range.start < 0.0 || p_range.stop > 1.0) {
    throw ConfigError("p", "values must lie in [0,1]");
  }
  if (f_range.start < 0.0 || f_range.stop > 1.0) {
    throw ConfigError("f", "values must lie in [0,1]");
  }
  if (protocol != "improved" && protocol != "stabilizer" &&
      protocol != "both") {
    throw ConfigError("protocol", "must be improved, stabilizer or both");
  }
  if (max_iters < 1 || max_iters > 1000) {
    throw ConfigError("max_iters", "must lie in 1..1000");
  }
  if (!(conv_tol > 0.0)) {
    throw ConfigError("conv_tol", "must be positive");
  }
  if (bisection_tol < 1e-4) {
    throw ConfigError("bisection_tol", "must be at least 1e-4");
  }
  if (n_max < 1 || n_max > 12) {
    throw ConfigError("n_max", "must lie in 1..12");
  }
  if (f_stop < 0.0 || f_stop > 1.0) {
    throw ConfigError("f_stop", "must lie in [0,1]");
  }
  if (mode != "single" && mode != "q-threshold") {
    throw ConfigError("mode", "must be single or q-threshold");
  }
  if (format != "csv" && format != "json") {
    throw ConfigError("format", "must be csv or json");
  }
  if (command == "repeater-curves") {
    if (p_range.start < 0.95) {
      throw ConfigError("p", "repeater curves need p in [0.95, 1]");
    }
  }
}

void load_config_file(const std::string& path, ExperimentConfig& config) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("config", "cannot open file '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError("config", "top level must be an object");
  }

  auto range_field = [](const nlohmann::json& v, const std::string& field) {
    if (v.is_string()) {
      return RangeSpec::parse(v.get<std::string>(), field);
    }
    if (v.is_number()) {
      const double x = v.get<double>();
      return RangeSpec{x, x, 1.0};
    }
    throw ConfigError(field, "expected a number or 'start:stop:step'");
  };

  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "command") {
        config.command = value.get<std::string>();
      } else if (key == "q") {
        config.q_range = range_field(value, key);
      } else if (key == "p") {
        config.p_range = range_field(value, key);
      } else if (key == "f") {
        config.f_range = range_field(value, key);
      } else if (key == "protocol") {
        config.protocol = value.get<std::string>();
      } else if (key == "max_iters") {
        config.max_iters = value.get<int>();
      } else if (key == "conv_tol") {
        config.conv_tol = value.get<double>();
      } else if (key == "bisection_tol") {
        config.bisection_tol = value.get<double>();
      } else if (key == "n_max") {
        config.n_max = value.get<int>();
      } else if (key == "f_stop") {
        config.f_stop = value.get<double>();
      } else if (key == "link_pq") {
        config.link_pq = value.get<bool>();
      } else if (key == "mode") {
        config.mode = value.get<std::string>();
      } else if (key == "out") {
        config.out_path = value.get<std::string>();
      } else if (key == "format") {
        config.format = value.get<std::string>();
      } else if (key == "seed") {
        config.seed = value.get<long>();
      } else {
        throw ConfigError(key, "unknown configuration key");
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError(key, "value has the wrong type");
    }
  }
}

SweepTable run_experiment(const ExperimentConfig& config) {
  config.validate();
  if (config.command == "relay") return run_relay(config);
  if (config.command == "swap-sweep") return run_swap_sweep(config);
  if (config.command == "purify-trace") return run_purify_trace(config);
  if (config.command == "epp-threshold") return run_epp_threshold(config);
  if (config.command == "repeater-curves") return run_repeater_curves(config);
  if (config.command == "repeater-loop") return run_repeater_loop(config);
  return run_resources(config);
}

}  // namespace wrep
