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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_helpers.hpp"
#include "wrep/density.hpp"
#include "wrep/noise.hpp"
#include "wrep/states.hpp"

using namespace wrep;
using wrep::testing::max_abs_diff;
using wrep::testing::random_state;

TEST_CASE("tensor product of identities and basis projectors") {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  CHECK(max_abs_diff(tensor_product(i2, i2),
                     ComplexMatrix::Identity(4, 4)) == 0.0);

  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
  p1(1, 1) = 1.0;
  const ComplexMatrix prod = tensor_product(p0, p1);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0b01, 0b01) = 1.0;  // |0>|1> with the first factor most significant
  CHECK(max_abs_diff(prod, expected) == 0.0);
}

TEST_CASE("tensor product multiplies traces") {
  const ComplexVector w = w_state();
  const ComplexMatrix pw = w * w.adjoint();
  const ComplexMatrix triple = tensor_product(tensor_product(pw, pw), pw);
  CHECK(std::abs(triple.trace().real() - 1.0) < 1e-12);
  CHECK(triple.rows() == 512);
}

TEST_CASE("partial trace of a Bell pair is maximally mixed") {
  const QubitRegister reg = QubitRegister::ordinals(2);
  const DensityOperator bell =
      DensityOperator::from_pure(reg, bell_state(BellState::PhiPlus));
  const DensityOperator reduced =
      partial_trace(bell, {QubitLabel::ordinal(0)});
  CHECK(max_abs_diff(reduced.matrix(), ComplexMatrix::Identity(2, 2) / 2.0) <
        1e-12);
}

TEST_CASE("partial trace of a product state recovers the factor") {
  std::mt19937 rng(7);
  const DensityOperator a = random_state(2, rng);
  DensityOperator b = random_state(1, rng);
  b = b.relabeled(QubitRegister({QubitLabel::ordinal(5)}));
  const DensityOperator joint = tensor_states(a, b);
  const DensityOperator back = partial_trace(joint, a.reg().labels());
  CHECK(max_abs_diff(back.matrix(), a.matrix()) < 1e-12);
}

TEST_CASE("reduced single qubit of the W state is diag(2/3, 1/3)") {
  const QubitRegister reg = QubitRegister::ordinals(3);
  const DensityOperator w = DensityOperator::from_pure(reg, w_state());
  const DensityOperator reduced = partial_trace(w, {QubitLabel::ordinal(0)});
  // Expansion of the state: the first qubit is excited in one of the three
  // equal-weight terms.
  CHECK(std::abs(reduced.matrix()(0, 0).real() - 2.0 / 3.0) < 1e-12);
  CHECK(std::abs(reduced.matrix()(1, 1).real() - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(reduced.matrix()(0, 1)) < 1e-12);
}

TEST_CASE("partial trace rejects unknown labels") {
  std::mt19937 rng(3);
  const DensityOperator s = random_state(2, rng);
  CHECK_THROWS_AS(partial_trace(s, {QubitLabel::ordinal(9)}),
                  std::invalid_argument);
}

TEST_CASE("apply_local flips a basis state") {
  const QubitRegister reg = QubitRegister::ordinals(3);
  const DensityOperator s =
      DensityOperator::from_pure(reg, basis_vector(3, 0b001));
  const DensityOperator flipped =
      apply_local(s, pauli_matrix(Pauli::X), {QubitLabel::ordinal(0)});
  ComplexMatrix expected = ComplexMatrix::Zero(8, 8);
  expected(0b101, 0b101) = 1.0;
  CHECK(max_abs_diff(flipped.matrix(), expected) < 1e-12);
}

TEST_CASE("even parity projector stabilizes the Bell pair") {
  const QubitRegister reg = QubitRegister::ordinals(2);
  const DensityOperator bell =
      DensityOperator::from_pure(reg, bell_state(BellState::PhiPlus));
  const DensityOperator projected =
      apply_local(bell, parity_projector(Parity::Even), reg.labels());
  CHECK(std::abs(projected.weight() - 1.0) < 1e-12);
  CHECK(max_abs_diff(projected.matrix(), bell.matrix()) < 1e-12);
}

TEST_CASE("even parity weight of the W state on the first pair is 1/3") {
  const QubitRegister reg = QubitRegister::ordinals(3);
  const DensityOperator w = DensityOperator::from_pure(reg, w_state());
  const DensityOperator projected =
      apply_local(w, parity_projector(Parity::Even),
                  {QubitLabel::ordinal(0), QubitLabel::ordinal(1)});
  // Only the term with the excitation on the last qubit has even parity on
  // the first two.
  CHECK(std::abs(projected.weight() - 1.0 / 3.0) < 1e-12);
}

TEST_CASE("apply_local rejects dimension mismatches") {
  std::mt19937 rng(11);
  const DensityOperator s = random_state(2, rng);
  CHECK_THROWS_AS(
      apply_local(s, pauli_matrix(Pauli::X), s.reg().labels()),
      std::invalid_argument);
}

TEST_CASE("measurement of the W state parities gives 1/3 and 2/3") {
  const QubitRegister reg = QubitRegister::ordinals(3);
  const DensityOperator w = DensityOperator::from_pure(reg, w_state());
  const auto branches =
      measure(w, {parity_projector(Parity::Even), parity_projector(Parity::Odd)},
              {QubitLabel::ordinal(0), QubitLabel::ordinal(1)});
  REQUIRE(branches.size() == 2);
  CHECK(std::abs(branches[0].probability - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(branches[1].probability - 2.0 / 3.0) < 1e-12);
}

TEST_CASE("parity measurement of a Bell pair is deterministic") {
  const QubitRegister reg = QubitRegister::ordinals(2);
  const DensityOperator bell =
      DensityOperator::from_pure(reg, bell_state(BellState::PhiPlus));
  const auto branches =
      measure(bell,
              {parity_projector(Parity::Even), parity_projector(Parity::Odd)},
              reg.labels());
  CHECK(std::abs(branches[0].probability - 1.0) < 1e-12);
  CHECK(branches[1].empty);
}

TEST_CASE("full Bell-basis measurement resolves psi minus") {
  const QubitRegister reg = QubitRegister::ordinals(2);
  const DensityOperator psi =
      DensityOperator::from_pure(reg, bell_state(BellState::PsiMinus));
  std::vector<ComplexMatrix> projectors;
  for (BellState b : {BellState::PhiPlus, BellState::PhiMinus,
                      BellState::PsiPlus, BellState::PsiMinus}) {
    const ComplexVector v = bell_state(b);
    projectors.push_back(v * v.adjoint());
  }
  const auto branches = measure(psi, projectors, reg.labels());
  CHECK(std::abs(branches[3].probability - 1.0) < 1e-12);
  for (int i = 0; i < 3; ++i) CHECK(branches[i].empty);
}

TEST_CASE("measurement rejects incomplete projector sets") {
  const QubitRegister reg = QubitRegister::ordinals(2);
  const DensityOperator bell =
      DensityOperator::from_pure(reg, bell_state(BellState::PhiPlus));
  CHECK_THROWS_AS(
      measure(bell, {parity_projector(Parity::Even)}, reg.labels()),
      std::invalid_argument);
}

TEST_CASE("measurement probabilities sum to the input trace") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityOperator s = random_state(3, rng);
    const auto branches =
        measure(s,
                {parity_projector(Parity::Even),
                 parity_projector(Parity::Odd)},
                {QubitLabel::ordinal(1), QubitLabel::ordinal(2)});
    double total = 0.0;
    for (const auto& b : branches) total += b.probability;
    CHECK(std::abs(total - s.weight()) < 1e-9);
  }
}

TEST_CASE("fidelity of the W state with itself and with white noise") {
  const QubitRegister reg = QubitRegister::ordinals(3);
  const DensityOperator w = DensityOperator::from_pure(reg, w_state());
  CHECK(std::abs(fidelity_with_pure(w, w_state()) - 1.0) < 1e-12);
  const DensityOperator mixed = DensityOperator::maximally_mixed(reg);
  CHECK(std::abs(fidelity_with_pure(mixed, w_state()) - 0.125) < 1e-12);
}

TEST_CASE("fidelity rejects unnormalized targets") {
  const QubitRegister reg = QubitRegister::ordinals(3);
  const DensityOperator w = DensityOperator::from_pure(reg, w_state());
  CHECK_THROWS_AS(fidelity_with_pure(w, 2.0 * w_state()),
                  std::invalid_argument);
}

TEST_CASE("fidelity is linear in the state") {
  std::mt19937 rng(5);
  const DensityOperator a = random_state(3, rng);
  const DensityOperator b = random_state(3, rng);
  const double lambda = 0.3;
  const DensityOperator mix(
      a.reg(), lambda * a.matrix() + (1.0 - lambda) * b.matrix());
  const double direct = fidelity_with_pure(mix, w_state());
  const double linear = lambda * fidelity_with_pure(a, w_state()) +
                        (1.0 - lambda) * fidelity_with_pure(b, w_state());
  CHECK(std::abs(direct - linear) < 1e-12);
}

TEST_CASE("identity permutation is bitwise identical") {
  std::mt19937 rng(17);
  const DensityOperator s = random_state(3, rng);
  const DensityOperator same = permute_qubits(s, s.reg().labels());
  CHECK(max_abs_diff(same.matrix(), s.matrix()) == 0.0);
}

TEST_CASE("swapping the qubits of |01> gives |10>") {
  const QubitRegister reg = QubitRegister::ordinals(2);
  const DensityOperator s =
      DensityOperator::from_pure(reg, basis_vector(2, 0b01));
  const DensityOperator swapped =
      permute_qubits(s, {QubitLabel::ordinal(1), QubitLabel::ordinal(0)});
  // The excited qubit now occupies the leading slot.
  CHECK(std::abs(swapped.matrix()(0b10, 0b10).real() - 1.0) < 1e-12);
  CHECK(swapped.reg().label(0) == QubitLabel::ordinal(1));
}

TEST_CASE("permutation followed by its inverse is the identity") {
  std::mt19937 rng(29);
  const DensityOperator s = random_state(3, rng);
  const std::vector<QubitLabel> order = {QubitLabel::ordinal(2),
                                         QubitLabel::ordinal(0),
                                         QubitLabel::ordinal(1)};
  const DensityOperator there = permute_qubits(s, order);
  const DensityOperator back = permute_qubits(there, s.reg().labels());
  CHECK(max_abs_diff(back.matrix(), s.matrix()) < 1e-12);
}

TEST_CASE("permute_qubits rejects non-permutations") {
  std::mt19937 rng(31);
  const DensityOperator s = random_state(2, rng);
  CHECK_THROWS_AS(
      permute_qubits(s, {QubitLabel::ordinal(0), QubitLabel::ordinal(0)}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      permute_qubits(s, {QubitLabel::ordinal(0), QubitLabel::ordinal(7)}),
      std::invalid_argument);
}

TEST_CASE("apply_local preserves hermiticity and positivity") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityOperator s = random_state(3, rng);
    const DensityOperator out =
        apply_local(s, parity_projector(Parity::Odd),
                    {QubitLabel::ordinal(0), QubitLabel::ordinal(2)});
    CHECK(out.is_valid_state());
  }
}

TEST_CASE("density operators reject non-Hermitian matrices") {
  ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(DensityOperator(QubitRegister::ordinals(1), bad),
                  std::invalid_argument);
}

TEST_CASE("registers reject duplicate labels") {
  CHECK_THROWS_AS(
      QubitRegister({QubitLabel::ordinal(0), QubitLabel::ordinal(0)}),
      std::invalid_argument);
}
