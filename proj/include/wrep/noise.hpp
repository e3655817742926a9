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

#ifndef WREP_NOISE_HPP_
#define WREP_NOISE_HPP_

#include <vector>

#include "wrep/density.hpp"

namespace wrep {

// Channel and preparation noise q, operational noise p. A strength of 1 is
// the identity channel; 0 fully depolarizes.
struct NoiseParams {
  double q = 1.0;
  double p = 1.0;
};

// rho -> s rho + (1-s)/4 sum_k sigma_k rho sigma_k on one qubit.
DensityOperator depolarize_qubit(const DensityOperator& state,
                                 const QubitLabel& target, double strength);

// Independent single-qubit depolarization on each listed qubit.
DensityOperator depolarize_register(const DensityOperator& state,
                                    const std::vector<QubitLabel>& targets,
                                    double strength);

// All qubits of the register.
DensityOperator depolarize_all(const DensityOperator& state, double strength);

}  // namespace wrep

#endif  // WREP_NOISE_HPP_
