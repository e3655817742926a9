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

#include "wrep/swapping.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "wrep/noise.hpp"
#include "wrep/states.hpp"

namespace wrep {

namespace {

ComplexMatrix bell_projector(BellState which) {
  const ComplexVector v = bell_state(which);
  return v * v.adjoint();
}

ComplexMatrix zero_zero_projector() {
  ComplexMatrix p = ComplexMatrix::Zero(4, 4);
  p(0, 0) = 1.0;
  return p;
}

ComplexMatrix kron3(const ComplexMatrix& a, const ComplexMatrix& b,
                    const ComplexMatrix& c) {
  return Eigen::kroneckerProduct(a, Eigen::kroneckerProduct(b, c).eval())
      .eval();
}

QubitRegister copy_register(int copy) {
  return QubitRegister({QubitLabel::left(copy), QubitLabel::upper(copy),
                        QubitLabel::right(copy)});
}

QubitRegister generic_triangle() {
  return QubitRegister({QubitLabel::left(0), QubitLabel::upper(0),
                        QubitLabel::right(0)});
}

void check_input(const DensityOperator& s, const char* name) {
  if (s.reg().num_qubits() != 3) {
    throw std::invalid_argument(std::string("swap input ") + name +
                                " must hold exactly 3 qubits");
  }
  if (!s.is_normalized() || !s.is_valid_state()) {
    throw std::invalid_argument(std::string("swap input ") + name +
                                " is not a normalized valid state");
  }
}

// Copy-and-position cycle used to reach the other two outcome patterns:
// copies 1 -> 2 -> 3 -> 1 together with positions l -> u -> r -> l. It maps
// station pairs to station pairs and keeps the output set {l1, u2, r3}.
QubitLabel cycle_label(const QubitLabel& label) {
  const int copy = label.copy_index % 3 + 1;
  const int position = (label.position + 1) % 3;
  return QubitLabel{copy, position};
}

DensityOperator cycle_state(const DensityOperator& nine, int times) {
  DensityOperator out = nine;
  for (int t = 0; t < times; ++t) {
    std::vector<QubitLabel> relabeled;
    for (const auto& l : out.reg().labels()) {
      relabeled.push_back(cycle_label(l));
    }
    out = out.relabeled(QubitRegister(std::move(relabeled)));
    std::vector<QubitLabel> canonical;
    for (int copy = 1; copy <= 3; ++copy) {
      for (const auto& l : copy_register(copy).labels()) canonical.push_back(l);
    }
    out = permute_qubits(out, canonical);
  }
  return out;
}

struct BranchOutcome {
  double probability = 0.0;
  double fidelity = 0.0;
  ComplexMatrix reduced;  // corrected, unnormalized, on (l1,u2,r3)
};

BranchOutcome run_branch(const DensityOperator& nine, const SwapBranch& br) {
  BranchOutcome out;
  DensityOperator projected =
      apply_local(nine, br.projector.matrix, br.projector.targets);
  out.probability = projected.weight();
  DensityOperator corrected =
      apply_local(projected, br.correction.matrix, br.correction.targets);
  DensityOperator reduced = partial_trace(corrected, swap_output_qubits());
  out.reduced = reduced.matrix();
  out.fidelity = out.probability < kBranchEps
                     ? 0.0
                     : fidelity_with_pure(reduced.normalized(), w_state());
  return out;
}

}  // namespace

std::vector<QubitLabel> swap_station_qubits() {
  return {QubitLabel::right(1), QubitLabel::left(3),
          QubitLabel::upper(1), QubitLabel::left(2),
          QubitLabel::right(2), QubitLabel::upper(3)};
}

std::vector<QubitLabel> swap_output_qubits() {
  return {QubitLabel::left(1), QubitLabel::upper(2), QubitLabel::right(3)};
}

SwapBranch build_branch(int j) {
  if (j < 1 || j > 8) {
    throw std::invalid_argument("branch index must lie in 1..8");
  }
  SwapBranch br;
  br.j = j;
  br.odd_odd_even = j <= 4;
  br.projector.targets = swap_station_qubits();
  br.correction.targets = swap_output_qubits();

  const ComplexMatrix psi_p = bell_projector(BellState::PsiPlus);
  const ComplexMatrix psi_m = bell_projector(BellState::PsiMinus);
  const ComplexMatrix phi_p = bell_projector(BellState::PhiPlus);
  const ComplexMatrix phi_m = bell_projector(BellState::PhiMinus);
  const ComplexMatrix even = parity_projector(Parity::Even);
  const ComplexMatrix id = pauli_matrix(Pauli::I);
  const ComplexMatrix x = pauli_matrix(Pauli::X);
  const ComplexMatrix y = pauli_matrix(Pauli::Y);
  const ComplexMatrix z = pauli_matrix(Pauli::Z);

  switch (j) {
    case 1:
      br.projector.matrix = kron3(psi_p, psi_p, even);
      br.correction.matrix = kron3(id, id, id);
      break;
    case 2:
      br.projector.matrix = kron3(psi_p, psi_m, even);
      br.correction.matrix = kron3(id, z, id);
      break;
    case 3:
      br.projector.matrix = kron3(psi_m, psi_p, even);
      br.correction.matrix = kron3(id, id, z);
      break;
    case 4:
      br.projector.matrix = kron3(psi_m, psi_m, even);
      br.correction.matrix = kron3(z, id, id);
      break;
    case 5:
      br.projector.matrix = kron3(zero_zero_projector(), phi_p, psi_p);
      br.correction.matrix = kron3(x, id, id);
      break;
    case 6:
      br.projector.matrix = kron3(zero_zero_projector(), phi_p, psi_m);
      br.correction.matrix = kron3(y, z, id);
      break;
    case 7:
      br.projector.matrix = kron3(zero_zero_projector(), phi_m, psi_p);
      br.correction.matrix = kron3(y, id, id);
      break;
    case 8:
      br.projector.matrix = kron3(zero_zero_projector(), phi_m, psi_m);
      br.correction.matrix = kron3(x, z, id);
      break;
  }
  return br;
}

SwapResult swap_states(const DensityOperator& a, const DensityOperator& b,
                       const DensityOperator& c, double p) {
  check_input(a, "a");
  check_input(b, "b");
  check_input(c, "c");
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("operational noise must lie in [0,1]");
  }

  const bool identical =
      (a.matrix() - b.matrix()).cwiseAbs().maxCoeff() < kExactTol &&
      (a.matrix() - c.matrix()).cwiseAbs().maxCoeff() < kExactTol;

  // Operational noise hits all nine qubits before the measurements; applying
  // it per input copy is the same channel.
  auto noisy = [p](const DensityOperator& s, int copy) {
    DensityOperator relabeled = s.relabeled(copy_register(copy));
    return depolarize_all(relabeled, p);
  };
  DensityOperator nine =
      tensor_states(tensor_states(noisy(a, 1), noisy(b, 2)), noisy(c, 3));

  std::array<SwapBranch, 8> branches;
  for (int j = 1; j <= 8; ++j) branches[j - 1] = build_branch(j);

  SwapResult result{0.0, DensityOperator::maximally_mixed(generic_triangle())};
  ComplexMatrix mix = ComplexMatrix::Zero(8, 8);
  double total = 0.0;

  if (identical) {
    for (int j = 0; j < 8; ++j) {
      BranchOutcome out = run_branch(nine, branches[j]);
      result.branch_probabilities[j] = out.probability;
      result.branch_fidelities[j] = out.fidelity;
      mix += out.reduced;
      total += out.probability;
    }
    result.success_probability = 3.0 * total;
  } else {
    // Enumerate the three outcome-pattern variants by cycling the state
    // through the copy-and-position permutation. The reduced states of the
    // rotated variants come back with their roles rotated inside
    // (l1, u2, r3) and are derotated before mixing.
    for (int variant = 0; variant < 3; ++variant) {
      DensityOperator rotated = cycle_state(nine, variant);
      for (int j = 0; j < 8; ++j) {
        BranchOutcome out = run_branch(rotated, branches[j]);
        result.branch_probabilities[j] += out.probability;
        total += out.probability;
        if (out.probability < kBranchEps) continue;
        DensityOperator reduced(QubitRegister(swap_output_qubits()),
                                std::move(out.reduced));
        std::vector<QubitLabel> role_order = swap_output_qubits();
        std::rotate(role_order.begin(), role_order.begin() + variant,
                    role_order.end());
        DensityOperator aligned = permute_qubits(reduced, role_order);
        mix += aligned.matrix();
      }
    }
    result.success_probability = total;
    for (int j = 0; j < 8; ++j) {
      result.branch_fidelities[j] =
          result.branch_probabilities[j] < kBranchEps ? 0.0 : -1.0;
    }
  }

  if (total < kBranchEps) {
    throw DegenerateOutcomeError(
        "every merging branch has vanishing probability");
  }

  ComplexMatrix out_mat = mix / total;
  out_mat = 0.5 * (out_mat + out_mat.adjoint().eval());
  result.output_state = DensityOperator(generic_triangle(), std::move(out_mat));
  result.fidelity = fidelity_with_pure(result.output_state, w_state());
  return result;
}

std::array<double, 8> swap_pattern_probabilities(const DensityOperator& a,
                                                 const DensityOperator& b,
                                                 const DensityOperator& c,
                                                 double p) {
  check_input(a, "a");
  check_input(b, "b");
  check_input(c, "c");
  auto noisy = [p](const DensityOperator& s, int copy) {
    return depolarize_all(s.relabeled(copy_register(copy)), p);
  };
  DensityOperator nine =
      tensor_states(tensor_states(noisy(a, 1), noisy(b, 2)), noisy(c, 3));

  const std::vector<QubitLabel> stations = swap_station_qubits();
  const ComplexMatrix even = parity_projector(Parity::Even);
  const ComplexMatrix odd = parity_projector(Parity::Odd);

  std::array<double, 8> probs{};
  for (int pattern = 0; pattern < 8; ++pattern) {
    DensityOperator s = nine;
    for (int station = 0; station < 3; ++station) {
      const bool is_even = (pattern >> (2 - station)) & 1;
      const std::vector<QubitLabel> pair = {stations[2 * station],
                                            stations[2 * station + 1]};
      s = apply_local(s, is_even ? even : odd, pair);
    }
    probs[pattern] = s.weight();
  }
  return probs;
}

std::vector<RelayRound> relay_simulate(double q, double p, int n_max,
                                       double f_stop) {
  if (q < 0.0 || q > 1.0 || p < 0.0 || p > 1.0) {
    throw std::invalid_argument("noise parameters must lie in [0,1]");
  }
  if (n_max < 0 || n_max > 12) {
    throw std::invalid_argument("relay depth must lie in 0..12");
  }

  DensityOperator state = depolarize_all(
      DensityOperator::from_pure(generic_triangle(), w_state()), q);

  std::vector<RelayRound> rounds;
  for (int n = 1; n <= n_max; ++n) {
    SwapResult res = swap_states(state, state, state, p);
    rounds.push_back({n, std::pow(2.0, n), res.fidelity,
                      res.success_probability});
    state = res.output_state;
    if (res.fidelity < f_stop) break;
  }
  return rounds;
}

RelayResources relay_resources(int n) {
  if (n < 0) {
    throw std::invalid_argument("round count must be non-negative");
  }
  RelayResources r;
  if (n <= 20) {
    // 9^20 and 3^20 fit in 64 bits, so 9^n / 2^n is correctly rounded.
    std::uint64_t p9 = 1, p3 = 1;
    for (int i = 0; i < n; ++i) {
      p9 *= 9;
      p3 *= 3;
    }
    const double half_pow = std::pow(2.0, n);
    r.total = static_cast<double>(p9) / half_pow;
    r.per_segment = static_cast<double>(p3) / half_pow;
  } else {
    r.total = std::pow(4.5, n);
    r.per_segment = std::pow(1.5, n);
  }
  return r;
}

}  // namespace wrep
