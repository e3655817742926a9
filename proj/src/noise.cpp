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

#include "wrep/noise.hpp"

#include <stdexcept>

#include "wrep/states.hpp"

namespace wrep {

DensityOperator depolarize_qubit(const DensityOperator& state,
                                 const QubitLabel& target, double strength) {
  if (strength < 0.0 || strength > 1.0) {
    throw std::invalid_argument("depolarizing strength must lie in [0,1]");
  }
  if (strength == 1.0) return state;

  const std::vector<QubitLabel> targets = {target};
  ComplexMatrix sum = ComplexMatrix::Zero(state.dim(), state.dim());
  for (Pauli p : {Pauli::I, Pauli::X, Pauli::Z, Pauli::Y}) {
    sum += apply_local(state, pauli_matrix(p), targets).matrix();
  }
  ComplexMatrix out = strength * state.matrix() + (1.0 - strength) / 4.0 * sum;
  out = 0.5 * (out + out.adjoint().eval());
  return DensityOperator(state.reg(), std::move(out));
}

DensityOperator depolarize_register(const DensityOperator& state,
                                    const std::vector<QubitLabel>& targets,
                                    double strength) {
  DensityOperator out = state;
  for (const auto& t : targets) {
    out = depolarize_qubit(out, t, strength);
  }
  return out;
}

DensityOperator depolarize_all(const DensityOperator& state, double strength) {
  return depolarize_register(state, state.reg().labels(), strength);
}

}  // namespace wrep
