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

#include "wrep/states.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace wrep {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

ComplexMatrix kron3(const ComplexMatrix& a, const ComplexMatrix& b,
                    const ComplexMatrix& c) {
  return Eigen::kroneckerProduct(a, Eigen::kroneckerProduct(b, c).eval())
      .eval();
}

// Single-qubit operator embedded at `slot` of a 3-qubit space.
ComplexMatrix embed3(const ComplexMatrix& op, int slot) {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  switch (slot) {
    case 0:
      return kron3(op, id, id);
    case 1:
      return kron3(id, op, id);
    default:
      return kron3(id, id, op);
  }
}

ComplexMatrix x_all3() {
  const ComplexMatrix x = pauli_matrix(Pauli::X);
  return kron3(x, x, x);
}

ComplexMatrix swap_outer3() {
  // Exchanges the first and third qubit.
  ComplexMatrix s = ComplexMatrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) {
    const int b0 = (i >> 2) & 1, b1 = (i >> 1) & 1, b2 = i & 1;
    s((b2 << 2) | (b1 << 1) | b0, i) = 1.0;
  }
  return s;
}

}  // namespace

ComplexMatrix pauli_matrix(Pauli p) {
  ComplexMatrix m(2, 2);
  switch (p) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
    case Pauli::Y:
      m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
      break;
  }
  return m;
}

ComplexVector basis_vector(int num_qubits, std::int64_t index) {
  ComplexVector v = ComplexVector::Zero(std::int64_t{1} << num_qubits);
  v(index) = 1.0;
  return v;
}

ComplexVector w_state() {
  ComplexVector v = ComplexVector::Zero(8);
  v(0b001) = kInvSqrt3;
  v(0b010) = kInvSqrt3;
  v(0b100) = kInvSqrt3;
  return v;
}

ComplexVector bell_state(BellState which) {
  ComplexVector v = ComplexVector::Zero(4);
  switch (which) {
    case BellState::PhiPlus:
      v(0b00) = kInvSqrt2;
      v(0b11) = kInvSqrt2;
      break;
    case BellState::PhiMinus:
      v(0b00) = kInvSqrt2;
      v(0b11) = -kInvSqrt2;
      break;
    case BellState::PsiPlus:
      v(0b01) = kInvSqrt2;
      v(0b10) = kInvSqrt2;
      break;
    case BellState::PsiMinus:
      v(0b01) = kInvSqrt2;
      v(0b10) = -kInvSqrt2;
      break;
  }
  return v;
}

ComplexVector w_basis_state(int i, int j, int k) {
  if ((i | j | k) < 0 || i > 1 || j > 1 || k > 1) {
    throw std::invalid_argument("w_basis_state needs bits in {0,1}");
  }
  return w_basis_state((i << 2) | (j << 1) | k);
}

ComplexVector w_basis_state(int ijk) {
  if (ijk < 0 || ijk > 7) {
    throw std::invalid_argument("w_basis_state index out of range");
  }
  static const ComplexMatrix generator = [] {
    const ComplexMatrix x = pauli_matrix(Pauli::X);
    const ComplexMatrix z = pauli_matrix(Pauli::Z);
    ComplexMatrix g = embed3(z, 1) * embed3(x, 2) +
                      embed3(z, 0) * embed3(x, 1) +
                      embed3(x, 0) * embed3(z, 2);
    return (g * kInvSqrt3).eval();
  }();
  return generator * basis_vector(3, ijk);
}

ComplexMatrix parity_projector(Parity parity) {
  ComplexMatrix p = ComplexMatrix::Zero(4, 4);
  if (parity == Parity::Even) {
    p(0b00, 0b00) = 1.0;
    p(0b11, 0b11) = 1.0;
  } else {
    p(0b01, 0b01) = 1.0;
    p(0b10, 0b10) = 1.0;
  }
  return p;
}

ComplexMatrix stabilizer_projector(int ijk) {
  const ComplexVector w = w_basis_state(ijk);
  const ComplexVector wf = x_all3() * w;
  return w * w.adjoint() + wf * wf.adjoint();
}

ComplexMatrix stabilizer_readout(int ijk) {
  const ComplexVector w = w_basis_state(ijk);
  const ComplexVector zero = basis_vector(1, 0);
  const ComplexVector one = basis_vector(1, 1);
  return zero * w.adjoint() + one * (x_all3() * w).adjoint();
}

ComplexMatrix dual_basis_change() {
  const ComplexMatrix h = kInvSqrt2 * (pauli_matrix(Pauli::X) +
                                       pauli_matrix(Pauli::Z));
  return kron3(h, h, h) * swap_outer3();
}

ComplexMatrix dual_stabilizer_projector() {
  const ComplexMatrix lambda = dual_basis_change();
  return lambda.adjoint() * stabilizer_projector(0) * lambda;
}

ComplexMatrix excitation_flip() {
  ComplexVector d = basis_vector(3, 0b000) - basis_vector(3, 0b111);
  return x_all3() + d * d.adjoint();
}

ComplexMatrix dual_readout() {
  const ComplexVector plus =
      kInvSqrt2 * (basis_vector(1, 0) + basis_vector(1, 1));
  const ComplexVector minus =
      kInvSqrt2 * (basis_vector(1, 0) - basis_vector(1, 1));
  const ComplexMatrix head = plus * w_basis_state(7).adjoint() -
                             minus * w_basis_state(0).adjoint();
  return head * dual_basis_change() * excitation_flip();
}

ComplexMatrix even_parity_readout() {
  ComplexMatrix p = ComplexMatrix::Zero(2, 4);
  p(0, 0b00) = 1.0;
  p(1, 0b11) = 1.0;
  return p;
}

ComplexMatrix build_epp_operator(EppOperatorKind kind, int ijk) {
  const bool indexed = kind == EppOperatorKind::StabilizerProjector ||
                       kind == EppOperatorKind::StabilizerReadout;
  if (indexed && (ijk < 0 || ijk > 7)) {
    throw std::invalid_argument("stabilizer operator needs a 3-bit index");
  }
  if (!indexed && ijk != -1) {
    throw std::invalid_argument("operator kind does not take an index");
  }
  switch (kind) {
    case EppOperatorKind::StabilizerProjector:
      return stabilizer_projector(ijk);
    case EppOperatorKind::StabilizerReadout:
      return stabilizer_readout(ijk);
    case EppOperatorKind::DualStabilizerProjector:
      return dual_stabilizer_projector();
    case EppOperatorKind::DualReadout:
      return dual_readout();
    case EppOperatorKind::ExcitationFlip:
      return excitation_flip();
    case EppOperatorKind::DualBasisChange:
      return dual_basis_change();
    case EppOperatorKind::EvenParityReadout:
      return even_parity_readout();
  }
  throw std::invalid_argument("unknown operator kind");
}

}  // namespace wrep
