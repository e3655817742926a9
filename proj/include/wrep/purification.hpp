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

#ifndef WREP_PURIFICATION_HPP_
#define WREP_PURIFICATION_HPP_

#include <vector>

#include "wrep/density.hpp"

namespace wrep {

// The two protocols: the stabilizer recurrence alternates the three-copy
// stabilizer measurement with its dual; the improved recurrence replaces the
// dual by a two-copy parity projection.
enum class EppProtocol { Stabilizer, Improved };

enum class SubroutineKind { Stabilizer, DualStabilizer, EvenParity };

const char* subroutine_name(SubroutineKind kind);
const char* protocol_name(EppProtocol protocol);

struct SubroutineOutcome {
  SubroutineKind kind = SubroutineKind::Stabilizer;
  double eta = 0.0;  // success probability of the post-selection
  DensityOperator out_state;
  double fidelity = 0.0;
  int copies_consumed = 0;  // 3 for the three-copy routines, 2 for parity
};

// Three identical copies, per-party stabilizer measurement, accepted
// outcomes 001/010/100 collapsed to a fresh three-qubit state.
SubroutineOutcome stabilizer_subroutine(const DensityOperator& state,
                                        double p);

// Dual routine: basis change on every party followed by the conjugated
// stabilizer measurement; single accepted outcome.
SubroutineOutcome dual_subroutine(const DensityOperator& state, double p);

// Two copies, per-party even-parity projection with |00>/|11> relabeled to
// one qubit.
SubroutineOutcome parity_subroutine(const DensityOperator& state, double p);

struct EppStep {
  int iteration = 0;
  SubroutineKind subroutine = SubroutineKind::Stabilizer;
  double fidelity = 0.0;
  double success_prob = 0.0;
  int copies_consumed = 0;
  double cumulative_resources = 0.0;
};

struct EppTrace {
  std::vector<EppStep> steps;
  bool converged = false;
  bool failed = false;      // a degenerate outcome stopped the run
  int failed_iteration = -1;
  double fixed_point_fidelity = 0.0;  // last recorded fidelity
  std::vector<DensityOperator> states;  // state after every recorded step
};

struct EppOptions {
  int max_iters = 200;
  double conv_tol = 1e-9;
  bool keep_states = false;
};

// Greedy recurrence: each iteration evaluates both subroutines of the
// protocol on the current state and keeps the output of higher fidelity.
EppTrace epp_run(const DensityOperator& initial, EppProtocol protocol,
                 double p, const EppOptions& options = {});

// The depolarized-W one-parameter family and its fidelity.
DensityOperator depolarized_w(double q);
double depolarized_w_fidelity(double q);
// Channel strength whose depolarized W state has the given fidelity.
double depolarized_w_strength_for(double fidelity);

struct FixedPointResult {
  bool converged = false;
  double fidelity = 0.0;
  int iterations = 0;
};

// Attracting fidelity reached from a high-fidelity start (depolarized W at
// fidelity 0.95).
FixedPointResult epp_fixed_point(EppProtocol protocol, double p,
                                 int max_iters = 600, double conv_tol = 1e-9);

// A purifying fixed point exists when the run from the high-fidelity start
// converges above the minimal useful fidelity; decayed runs end far below.
inline constexpr double kOperationalFidelityBar = 0.465;
bool epp_has_purifying_fixed_point(EppProtocol protocol, double p);

// Largest operational noise 1-p that still admits a purifying fixed point.
double epp_noise_tolerance(EppProtocol protocol, double tol = 1e-4);

struct EppThresholdResult {
  bool found = false;
  double fidelity = 0.0;  // smallest purifiable initial fidelity
  double q = 0.0;         // channel strength at the boundary
  double f_max = 0.0;     // attracting fidelity used for classification
};

// Bisection over the depolarized-W family: smallest initial fidelity whose
// run converges into the fixed-point window. `tol` bounds the fidelity
// bracket width.
EppThresholdResult epp_threshold(EppProtocol protocol, double p,
                                 double tol = 1e-3);

// Purifiability of an arbitrary initial state at noise p, classified
// against the protocol's fixed point (one-sided 1e-3 window).
bool epp_purifies(const DensityOperator& initial, EppProtocol protocol,
                  double p, double f_max);

}  // namespace wrep

#endif  // WREP_PURIFICATION_HPP_
