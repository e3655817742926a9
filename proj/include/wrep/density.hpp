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

#ifndef WREP_DENSITY_HPP_
#define WREP_DENSITY_HPP_

#include <vector>

#include "wrep/register.hpp"
#include "wrep/types.hpp"

namespace wrep {

// Hermitian matrix over a labeled qubit register. States may be temporarily
// unnormalized while a protocol is post-selecting; the trace is then the
// weight of the branch. Normalization is always an explicit call.
class DensityOperator {
 public:
  // Scalar placeholder state on an empty register.
  DensityOperator() : matrix_(ComplexMatrix::Ones(1, 1)) {}
  DensityOperator(QubitRegister reg, ComplexMatrix matrix);

  // rho = |psi><psi| on the given register.
  static DensityOperator from_pure(QubitRegister reg,
                                   const ComplexVector& psi);
  static DensityOperator maximally_mixed(QubitRegister reg);

  const QubitRegister& reg() const { return reg_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  std::int64_t dim() const { return matrix_.rows(); }

  double weight() const;  // trace, real part
  DensityOperator normalized() const;
  DensityOperator relabeled(QubitRegister reg) const;

  bool is_normalized(double tol = kTraceTol) const;
  // Hermitian within tol, PSD down to the eigenvalue floor, finite entries.
  bool is_valid_state(double tol = kHermitianTol) const;
  double min_eigenvalue() const;

 private:
  QubitRegister reg_;
  ComplexMatrix matrix_;
};

// One outcome of a projective measurement.
struct BranchResult {
  int index = 0;
  double probability = 0.0;
  DensityOperator post_state;
  bool empty = false;  // probability below kBranchEps; post_state is junk
};

// Kronecker product, a's indices most significant.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Tensor product of states; output register concatenates the input labels.
DensityOperator tensor_states(const DensityOperator& a,
                              const DensityOperator& b);

// Reduced state on `keep`; the output register is ordered as `keep`.
DensityOperator partial_trace(const DensityOperator& state,
                              const std::vector<QubitLabel>& keep);

// (O_full) rho (O_full^dag) with `op` embedded on `targets` and identity
// elsewhere. The result keeps its trace as branch weight; callers normalize
// explicitly. `op` may be rectangular (rows = 2^m mapping targets to a
// smaller register), in which case the target qubits are replaced by m
// generic ordinal qubits appended after the untouched ones.
DensityOperator apply_local(const DensityOperator& state,
                            const ComplexMatrix& op,
                            const std::vector<QubitLabel>& targets);

// Projective measurement; projectors must resolve the identity on the
// targets' subspace within kTraceTol.
std::vector<BranchResult> measure(const DensityOperator& state,
                                  const std::vector<ComplexMatrix>& projectors,
                                  const std::vector<QubitLabel>& targets);

// <psi| rho |psi>; requires a normalized target vector.
double fidelity_with_pure(const DensityOperator& state,
                          const ComplexVector& target);

// Same physical state with tensor slots reordered to `new_order`.
DensityOperator permute_qubits(const DensityOperator& state,
                               const std::vector<QubitLabel>& new_order);

}  // namespace wrep

#endif  // WREP_DENSITY_HPP_
