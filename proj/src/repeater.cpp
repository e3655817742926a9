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

#include "wrep/repeater.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "wrep/states.hpp"

namespace wrep {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kFamilyMargin = 0.02;    // family starts above f_p
constexpr double kTargetMargin = 1e-7;    // targets stay below f_max

}  // namespace

WorkingStateFamily WorkingStateFamily::build(double p,
                                             double start_fidelity) {
  const double q = depolarized_w_strength_for(start_fidelity);
  EppOptions options;
  options.max_iters = 600;
  options.keep_states = true;
  const EppTrace trace =
      epp_run(depolarized_w(q), EppProtocol::Improved, p, options);
  if (trace.failed || trace.steps.empty()) {
    throw std::runtime_error("working-state family trajectory failed");
  }

  WorkingStateFamily family;
  family.fidelities_.push_back(start_fidelity);
  family.states_.push_back(depolarized_w(q));
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const double f = trace.steps[i].fidelity;
    if (f > family.fidelities_.back() + 1e-12) {
      family.fidelities_.push_back(f);
      family.states_.push_back(trace.states[i]);
    }
  }
  if (family.fidelities_.size() < 2) {
    throw std::runtime_error("working-state family has no increasing leg");
  }
  return family;
}

DensityOperator WorkingStateFamily::state_at(double fidelity) const {
  if (fidelity <= fidelities_.front()) return states_.front();
  if (fidelity >= fidelities_.back()) return states_.back();
  std::size_t hi = 1;
  while (fidelities_[hi] < fidelity) ++hi;
  const std::size_t lo = hi - 1;
  const double span = fidelities_[hi] - fidelities_[lo];
  const double lambda = (fidelity - fidelities_[lo]) / span;
  ComplexMatrix m = (1.0 - lambda) * states_[lo].matrix() +
                    lambda * states_[hi].matrix();
  return DensityOperator(states_[lo].reg(), std::move(m));
}

RepeaterRoundResult repeater_round(const DensityOperator& working_state,
                                   double p, double target_fidelity,
                                   const EppOptions& options) {
  RepeaterRoundResult result;
  result.f_before_swap = fidelity_with_pure(working_state, w_state());

  const SwapResult swap =
      swap_states(working_state, working_state, working_state, p);
  result.f_after_swap = swap.fidelity;
  result.swap_success = swap.success_probability;

  DensityOperator state = swap.output_state;
  double resources = 3.0 / swap.success_probability;
  double previous = swap.fidelity;
  result.f_after_first_epp = kNan;

  for (int k = 1; k <= options.max_iters; ++k) {
    SubroutineOutcome stab, other;
    try {
      stab = stabilizer_subroutine(state, p);
      other = parity_subroutine(state, p);
    } catch (const DegenerateOutcomeError&) {
      break;
    }
    const SubroutineOutcome& chosen =
        stab.fidelity > other.fidelity ? stab : other;
    resources *= static_cast<double>(chosen.copies_consumed) / chosen.eta;
    state = chosen.out_state;
    if (k == 1) result.f_after_first_epp = chosen.fidelity;
    result.purify_steps = k;
    result.f_after_purify = chosen.fidelity;
    if (chosen.fidelity >= target_fidelity) {
      result.success = true;
      break;
    }
    if (std::abs(chosen.fidelity - previous) < options.conv_tol) {
      break;  // converged below the target: the loop does not close
    }
    previous = chosen.fidelity;
  }
  result.resources_round = resources;
  return result;
}

RepeaterAnalysis::RepeaterAnalysis(double p, double threshold_tol) : p_(p) {
  const EppThresholdResult thr =
      epp_threshold(EppProtocol::Improved, p, threshold_tol);
  purifiable_ = thr.found;
  if (!thr.found) {
    f_max_ = kNan;
    f_threshold_ = kNan;
    return;
  }
  f_max_ = thr.f_max;
  f_threshold_ = thr.fidelity;
  family_ = WorkingStateFamily::build(
      p, std::min(thr.fidelity + kFamilyMargin, 0.9));
}

const WorkingStateFamily& RepeaterAnalysis::family() const {
  if (!family_) {
    throw std::runtime_error("no working-state family below the threshold");
  }
  return *family_;
}

double RepeaterAnalysis::post_swap_fidelity(double working_fidelity) const {
  const DensityOperator s = family().state_at(working_fidelity);
  return swap_states(s, s, s, p_).fidelity;
}

std::optional<double> RepeaterAnalysis::min_working_fidelity(
    double tol) const {
  if (!purifiable_) return std::nullopt;
  double hi = family().max_fidelity();
  if (post_swap_fidelity(hi) < f_threshold_) {
    return std::nullopt;  // even the fixed-point state degrades too far
  }
  double lo = std::max(family().min_fidelity(), f_threshold_);
  if (post_swap_fidelity(lo) >= f_threshold_) {
    return lo;  // the requirement never exceeds the purification threshold
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (post_swap_fidelity(mid) >= f_threshold_) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

RepeaterRoundResult RepeaterAnalysis::round(double working_fidelity,
                                            double target_fidelity) const {
  if (!purifiable_) {
    throw std::runtime_error("protocol is not purifiable at this noise");
  }
  if (target_fidelity > f_max_ - kTargetMargin) {
    throw std::invalid_argument(
        "target fidelity must stay below the achievable fixed point");
  }
  EppOptions options;
  options.max_iters = 600;
  return repeater_round(family().state_at(working_fidelity), p_,
                        target_fidelity, options);
}

ThresholdCurves repeater_threshold_curves(const std::vector<double>& p_grid,
                                          double tol) {
  if (p_grid.empty()) {
    throw std::invalid_argument("threshold curves need a non-empty grid");
  }
  for (double p : p_grid) {
    if (p < 0.95 || p > 1.0) {
      throw std::invalid_argument("grid values must lie in [0.95, 1]");
    }
  }
  if (tol < 1e-4) {
    throw std::invalid_argument("tolerance must be at least 1e-4");
  }

  ThresholdCurves curves;
  curves.p_min = kNan;

  auto loop_closes = [&](const RepeaterAnalysis& a) {
    if (!a.purifiable()) return false;
    return a.post_swap_fidelity(a.family().max_fidelity()) >=
           a.f_threshold();
  };

  double best_closed = kNan, worst_open = kNan;
  for (double p : p_grid) {
    RepeaterAnalysis analysis(p);
    ThresholdCurvePoint point;
    point.p = p;
    point.purifiable = analysis.purifiable();
    point.f_max = analysis.f_max();
    point.f_p = analysis.f_threshold();
    point.f_r = kNan;
    if (analysis.purifiable()) {
      const auto fr = analysis.min_working_fidelity(tol);
      if (fr) point.f_r = *fr;
    }
    const bool closed = loop_closes(analysis);
    if (closed) {
      if (std::isnan(best_closed) || p < best_closed) best_closed = p;
    } else {
      if (std::isnan(worst_open) || p > worst_open) worst_open = p;
    }
    curves.points.push_back(point);
  }

  if (!std::isnan(best_closed) && !std::isnan(worst_open) &&
      worst_open < best_closed) {
    double lo = worst_open, hi = best_closed;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      RepeaterAnalysis analysis(mid);
      if (loop_closes(analysis)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    curves.p_min = 0.5 * (lo + hi);
  }
  return curves;
}

RepeaterResources repeater_resources(double p, double working_fidelity) {
  RepeaterAnalysis analysis(p);
  RepeaterResources out;
  if (!analysis.purifiable()) return out;
  if (working_fidelity > analysis.f_max() - kTargetMargin) {
    throw std::invalid_argument(
        "working fidelity must stay below the achievable fixed point");
  }
  const RepeaterRoundResult round =
      analysis.round(working_fidelity, working_fidelity);
  out.operational = round.success;
  out.copies = round.resources_round;
  out.purify_steps = round.purify_steps;
  return out;
}

}  // namespace wrep
