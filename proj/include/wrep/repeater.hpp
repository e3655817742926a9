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

#ifndef WREP_REPEATER_HPP_
#define WREP_REPEATER_HPP_

#include <optional>
#include <vector>

#include "wrep/purification.hpp"
#include "wrep/swapping.hpp"

namespace wrep {

// Fidelity-indexed family of realistic state shapes: the iterates of an
// improved-EPP trajectory at noise p, convex-interpolated between adjacent
// points (fidelity is linear in the state, so the interpolated fidelity is
// exact).
class WorkingStateFamily {
 public:
  // `start_fidelity` picks the depolarized-W state the trajectory starts
  // from; iterates cover [start_fidelity, fixed point).
  static WorkingStateFamily build(double p, double start_fidelity);

  double min_fidelity() const { return fidelities_.front(); }
  double max_fidelity() const { return fidelities_.back(); }
  DensityOperator state_at(double fidelity) const;

 private:
  WorkingStateFamily() = default;
  std::vector<double> fidelities_;
  std::vector<DensityOperator> states_;
};

struct RepeaterRoundResult {
  double f_before_swap = 0.0;
  double f_after_swap = 0.0;
  double f_after_first_epp = 0.0;  // one purification iteration
  int purify_steps = 0;
  double f_after_purify = 0.0;
  double swap_success = 0.0;
  double resources_round = 0.0;  // (3 / swap success) * prod(m_j / eta_j)
  bool success = false;
};

// One repeater round: merge three copies of the working state, then purify
// with the improved protocol until the target fidelity is recovered.
RepeaterRoundResult repeater_round(const DensityOperator& working_state,
                                   double p, double target_fidelity,
                                   const EppOptions& options = {});

// Caches the per-noise quantities (fixed point, purification threshold,
// state family) that every repeater question needs.
class RepeaterAnalysis {
 public:
  explicit RepeaterAnalysis(double p, double threshold_tol = 1e-3);

  double p() const { return p_; }
  bool purifiable() const { return purifiable_; }
  double f_max() const { return f_max_; }
  double f_threshold() const { return f_threshold_; }

  // Post-swap fidelity of three copies at the given working fidelity.
  double post_swap_fidelity(double working_fidelity) const;

  // Minimal working fidelity whose post-swap state stays purifiable;
  // nullopt when even the fixed-point state drops below the threshold.
  std::optional<double> min_working_fidelity(double tol = 1e-3) const;

  RepeaterRoundResult round(double working_fidelity,
                            double target_fidelity) const;

  const WorkingStateFamily& family() const;

 private:
  double p_ = 1.0;
  bool purifiable_ = false;
  double f_max_ = 0.0;
  double f_threshold_ = 0.0;
  std::optional<WorkingStateFamily> family_;
};

struct ThresholdCurvePoint {
  double p = 0.0;
  double f_max = 0.0;      // NaN when no purifying fixed point exists
  double f_p = 0.0;        // NaN likewise
  double f_r = 0.0;        // NaN when the loop cannot close at any fidelity
  bool purifiable = false;
};

struct ThresholdCurves {
  std::vector<ThresholdCurvePoint> points;
  double p_min = 0.0;  // NaN when not bracketed by the grid
};

// F_max / F^(P) / F^(R) over the grid plus the refined crossing point.
ThresholdCurves repeater_threshold_curves(const std::vector<double>& p_grid,
                                          double tol);

struct RepeaterResources {
  bool operational = false;
  double copies = 0.0;  // expected elementary copies per round
  int purify_steps = 0;
};

// Expected elementary copies consumed to run one repeater round at the
// given working fidelity (which is also the recovery target).
RepeaterResources repeater_resources(double p, double working_fidelity);

}  // namespace wrep

#endif  // WREP_REPEATER_HPP_
