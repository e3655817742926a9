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

#ifndef WREP_STATES_HPP_
#define WREP_STATES_HPP_

#include <array>

#include "wrep/types.hpp"

namespace wrep {

enum class Pauli { I, X, Z, Y };
ComplexMatrix pauli_matrix(Pauli p);

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

// (|001> + |010> + |100|>)/sqrt(3), first qubit most significant.
ComplexVector w_state();

// The four maximally entangled two-qubit states.
ComplexVector bell_state(BellState which);

// |000...0> + excitation pattern helpers.
ComplexVector basis_vector(int num_qubits, std::int64_t index);

// Orthonormal three-qubit basis obtained by acting with
// (Z2 X3 + Z1 X2 + X1 Z3)/sqrt(3) on |ijk>.
ComplexVector w_basis_state(int i, int j, int k);
ComplexVector w_basis_state(int ijk);  // 3-bit packed index

// P^e = |00><00| + |11><11|, P^o = |01><01| + |10><10|.
enum class Parity { Even, Odd };
ComplexMatrix parity_projector(Parity parity);

// Operators used by the purification subroutines. Names describe the role:
//   StabilizerProjector     rank-2 projector onto the W^{ijk} / flipped pair
//   StabilizerReadout       isometry collapsing that pair to a logical qubit
//   DualBasisChange         Hadamards combined with an outer qubit swap
//   ExcitationFlip          swaps single and double excitation patterns,
//                           fixing |000> and |111>
//   DualStabilizerProjector StabilizerProjector(0) conjugated by the basis
//                           change
//   DualReadout             logical readout of the dual measurement branch
//   EvenParityReadout       |0><00| + |1><11|
enum class EppOperatorKind {
  StabilizerProjector,
  StabilizerReadout,
  DualStabilizerProjector,
  DualReadout,
  ExcitationFlip,
  DualBasisChange,
  EvenParityReadout,
};

// `ijk` must be a valid 3-bit index for the stabilizer families and is
// rejected for the fixed operators.
ComplexMatrix build_epp_operator(EppOperatorKind kind, int ijk = -1);

// Convenience accessors for the common cases.
ComplexMatrix stabilizer_projector(int ijk);       // M, 8x8
ComplexMatrix stabilizer_readout(int ijk);         // N, 2x8
ComplexMatrix dual_stabilizer_projector();         // 8x8
ComplexMatrix dual_readout();                      // 2x8
ComplexMatrix excitation_flip();                   // V, 8x8
ComplexMatrix dual_basis_change();                 // 8x8
ComplexMatrix even_parity_readout();               // 2x4

// The three stabilizer outcomes that herald success: 001, 010, 100.
inline constexpr std::array<int, 3> kAcceptedStabilizerOutcomes = {1, 2, 4};

}  // namespace wrep

#endif  // WREP_STATES_HPP_
