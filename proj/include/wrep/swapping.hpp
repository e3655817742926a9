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

#ifndef WREP_SWAPPING_HPP_
#define WREP_SWAPPING_HPP_

#include <array>
#include <vector>

#include "wrep/density.hpp"

namespace wrep {

// An operator together with the qubits it acts on.
struct LabeledOperator {
  ComplexMatrix matrix;
  std::vector<QubitLabel> targets;
};

// One post-selected branch of the merging protocol. Branches 1..4 follow the
// odd/odd/even station pattern (two Bell measurements, even pair untouched);
// branches 5..8 follow even/even/odd (computational basis on the first even
// pair, Bell basis on the other two).
struct SwapBranch {
  int j = 0;
  bool odd_odd_even = false;
  LabeledOperator projector;   // on (r1,l3, u1,l2, r2,u3)
  LabeledOperator correction;  // on (l1, u2, r3)
};

struct SwapResult {
  double success_probability = 0.0;
  DensityOperator output_state;        // on generic labels (l, u, r)
  std::array<double, 8> branch_probabilities{};
  std::array<double, 8> branch_fidelities{};
  double fidelity = 0.0;               // of the mixed output vs |W>
};

// One round of the relay iteration.
struct RelayRound {
  int n = 0;
  double distance = 0.0;  // 2^n in units of the elementary segment
  double fidelity = 0.0;
  double success_probability = 0.0;
};

// Exact operator pair for branch j in 1..8.
SwapBranch build_branch(int j);

// Labels of the three measured station pairs and of the output qubits.
std::vector<QubitLabel> swap_station_qubits();
std::vector<QubitLabel> swap_output_qubits();

// Merges three 3-qubit states into one, applying operational depolarizing
// noise of strength p to all nine qubits first. Identical inputs use the
// representative outcome pattern with the exact symmetry factor 3; otherwise
// all three pattern variants are enumerated explicitly.
SwapResult swap_states(const DensityOperator& a, const DensityOperator& b,
                       const DensityOperator& c, double p);

// Probabilities of the eight parity-outcome patterns (station order
// (r1,l3), (u1,l2), (r2,u3); bit 1 = even). Sums to one for normalized
// inputs; used by completeness checks.
std::array<double, 8> swap_pattern_probabilities(const DensityOperator& a,
                                                 const DensityOperator& b,
                                                 const DensityOperator& c,
                                                 double p);

// Iterated merging of identical copies starting from a depolarized W state;
// stops after n_max rounds or once the fidelity falls below f_stop (the
// first below-threshold round is still recorded).
std::vector<RelayRound> relay_simulate(double q, double p, int n_max,
                                       double f_stop);

struct RelayResources {
  double total = 0.0;        // (9/2)^n elementary copies
  double per_segment = 0.0;  // (3/2)^n
};

RelayResources relay_resources(int n);

}  // namespace wrep

#endif  // WREP_SWAPPING_HPP_
