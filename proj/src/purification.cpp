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

#include "wrep/purification.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

#include "wrep/noise.hpp"
#include "wrep/states.hpp"

namespace wrep {

namespace {

ComplexMatrix kron3(const ComplexMatrix& a, const ComplexMatrix& b,
                    const ComplexMatrix& c) {
  return Eigen::kroneckerProduct(a, Eigen::kroneckerProduct(b, c).eval())
      .eval();
}

// Copies of the input state, depolarized with strength p, tensored in copy
// order and then permuted so that each party's copy qubits sit together
// (copy 1 most significant inside a party block).
DensityOperator party_major_copies(const DensityOperator& state, double p,
                                   int copies) {
  if (state.reg().num_qubits() != 3) {
    throw std::invalid_argument("purification needs a three-qubit state");
  }
  if (!state.is_normalized() || !state.is_valid_state()) {
    throw std::invalid_argument("purification input is not a valid state");
  }
  const DensityOperator noisy = depolarize_all(state, p);

  auto copy_labels = [](int copy) {
    return std::vector<QubitLabel>{
        {copy, 0}, {copy, 1}, {copy, 2}};  // parties as positions
  };

  DensityOperator big = noisy.relabeled(QubitRegister(copy_labels(1)));
  for (int c = 2; c <= copies; ++c) {
    big = tensor_states(big,
                        noisy.relabeled(QubitRegister(copy_labels(c))));
  }

  std::vector<QubitLabel> party_major;
  for (int party = 0; party < 3; ++party) {
    for (int c = 1; c <= copies; ++c) {
      party_major.push_back({c, party});
    }
  }
  return permute_qubits(big, party_major);
}

// Applies an out x in map acting on the whole register and relabels the
// collapsed result to the original party labels.
SubroutineOutcome collapse(const DensityOperator& party_major,
                           const std::vector<ComplexMatrix>& maps,
                           const QubitRegister& out_reg, SubroutineKind kind,
                           int copies) {
  ComplexMatrix sum;
  bool first = true;
  for (const auto& m : maps) {
    DensityOperator mapped =
        apply_local(party_major, m, party_major.reg().labels());
    if (first) {
      sum = mapped.matrix();
      first = false;
    } else {
      sum += mapped.matrix();
    }
  }
  SubroutineOutcome out;
  out.kind = kind;
  out.copies_consumed = copies;
  out.eta = sum.trace().real();
  if (out.eta < kBranchEps) {
    throw DegenerateOutcomeError("purification branch has vanishing weight");
  }
  sum /= out.eta;
  sum = 0.5 * (sum + sum.adjoint().eval());
  out.out_state = DensityOperator(out_reg, std::move(sum));
  out.fidelity = fidelity_with_pure(out.out_state, w_state());
  return out;
}

const std::vector<ComplexMatrix>& stabilizer_maps() {
  static const std::vector<ComplexMatrix> maps = [] {
    std::vector<ComplexMatrix> m;
    for (int outcome : kAcceptedStabilizerOutcomes) {
      const ComplexMatrix n = stabilizer_readout(outcome);
      m.push_back(kron3(n, n, n));
    }
    return m;
  }();
  return maps;
}

const std::vector<ComplexMatrix>& dual_maps() {
  static const std::vector<ComplexMatrix> maps = [] {
    const ComplexMatrix n = dual_readout();
    return std::vector<ComplexMatrix>{kron3(n, n, n)};
  }();
  return maps;
}

const std::vector<ComplexMatrix>& parity_maps() {
  static const std::vector<ComplexMatrix> maps = [] {
    const ComplexMatrix pe = even_parity_readout();
    return std::vector<ComplexMatrix>{kron3(pe, pe, pe)};
  }();
  return maps;
}

struct Candidates {
  SubroutineOutcome first;
  SubroutineOutcome second;
  bool first_ok = false;
  bool second_ok = false;
};

Candidates evaluate_candidates(const DensityOperator& state,
                               EppProtocol protocol, double p) {
  Candidates c;
  const DensityOperator pm3 = party_major_copies(state, p, 3);
  try {
    c.first = collapse(pm3, stabilizer_maps(), state.reg(),
                       SubroutineKind::Stabilizer, 3);
    c.first_ok = true;
  } catch (const DegenerateOutcomeError&) {
  }
  try {
    if (protocol == EppProtocol::Stabilizer) {
      c.second = collapse(pm3, dual_maps(), state.reg(),
                          SubroutineKind::DualStabilizer, 3);
    } else {
      const DensityOperator pm2 = party_major_copies(state, p, 2);
      c.second = collapse(pm2, parity_maps(), state.reg(),
                          SubroutineKind::EvenParity, 2);
    }
    c.second_ok = true;
  } catch (const DegenerateOutcomeError&) {
  }
  return c;
}

}  // namespace

const char* subroutine_name(SubroutineKind kind) {
  switch (kind) {
    case SubroutineKind::Stabilizer:
      return "stabilizer";
    case SubroutineKind::DualStabilizer:
      return "dual";
    case SubroutineKind::EvenParity:
      return "parity";
  }
  return "?";
}

const char* protocol_name(EppProtocol protocol) {
  return protocol == EppProtocol::Stabilizer ? "stabilizer" : "improved";
}

SubroutineOutcome stabilizer_subroutine(const DensityOperator& state,
                                        double p) {
  return collapse(party_major_copies(state, p, 3), stabilizer_maps(),
                  state.reg(), SubroutineKind::Stabilizer, 3);
}

SubroutineOutcome dual_subroutine(const DensityOperator& state, double p) {
  return collapse(party_major_copies(state, p, 3), dual_maps(), state.reg(),
                  SubroutineKind::DualStabilizer, 3);
}

SubroutineOutcome parity_subroutine(const DensityOperator& state, double p) {
  return collapse(party_major_copies(state, p, 2), parity_maps(), state.reg(),
                  SubroutineKind::EvenParity, 2);
}

EppTrace epp_run(const DensityOperator& initial, EppProtocol protocol,
                 double p, const EppOptions& options) {
  if (options.max_iters < 0 || options.max_iters > 1000) {
    throw std::invalid_argument("iteration cap must lie in 0..1000");
  }
  if (options.conv_tol <= 0.0) {
    throw std::invalid_argument("convergence tolerance must be positive");
  }

  EppTrace trace;
  DensityOperator state = initial.normalized();
  double previous = fidelity_with_pure(state, w_state());
  double resources = 1.0;

  for (int k = 1; k <= options.max_iters; ++k) {
    Candidates c = evaluate_candidates(state, protocol, p);
    if (!c.first_ok && !c.second_ok) {
      trace.failed = true;
      trace.failed_iteration = k;
      break;
    }
    const SubroutineOutcome& chosen =
        !c.second_ok ? c.first
        : !c.first_ok ? c.second
        : (c.first.fidelity > c.second.fidelity ? c.first : c.second);

    resources *= static_cast<double>(chosen.copies_consumed) / chosen.eta;
    trace.steps.push_back({k, chosen.kind, chosen.fidelity, chosen.eta,
                           chosen.copies_consumed, resources});
    if (options.keep_states) {
      trace.states.push_back(chosen.out_state);
    }
    state = chosen.out_state;
    if (std::abs(chosen.fidelity - previous) < options.conv_tol) {
      trace.converged = true;
      previous = chosen.fidelity;
      break;
    }
    previous = chosen.fidelity;
  }
  trace.fixed_point_fidelity = previous;
  return trace;
}

DensityOperator depolarized_w(double q) {
  const QubitRegister reg = QubitRegister::ordinals(3);
  return depolarize_all(DensityOperator::from_pure(reg, w_state()), q);
}

double depolarized_w_fidelity(double q) {
  return fidelity_with_pure(depolarized_w(q), w_state());
}

double depolarized_w_strength_for(double fidelity) {
  if (fidelity < 0.125 || fidelity > 1.0) {
    throw std::invalid_argument(
        "depolarized-W fidelities lie in [0.125, 1]");
  }
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (depolarized_w_fidelity(mid) < fidelity) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

FixedPointResult epp_fixed_point(EppProtocol protocol, double p,
                                 int max_iters, double conv_tol) {
  const double q = depolarized_w_strength_for(0.95);
  EppOptions options;
  options.max_iters = max_iters;
  options.conv_tol = conv_tol;
  const EppTrace trace = epp_run(depolarized_w(q), protocol, p, options);
  FixedPointResult result;
  result.converged = trace.converged && !trace.failed;
  result.fidelity = trace.fixed_point_fidelity;
  result.iterations = static_cast<int>(trace.steps.size());
  return result;
}

bool epp_has_purifying_fixed_point(EppProtocol protocol, double p) {
  const FixedPointResult fp = epp_fixed_point(protocol, p);
  return fp.converged && fp.fidelity >= kOperationalFidelityBar;
}

double epp_noise_tolerance(EppProtocol protocol, double tol) {
  if (tol < 1e-6) {
    throw std::invalid_argument("tolerance too small");
  }
  // Coarse scan down from p = 1 to bracket the loss of the fixed point.
  double good = 1.0;
  if (!epp_has_purifying_fixed_point(protocol, good)) {
    throw std::runtime_error("no purifying fixed point even without noise");
  }
  double bad = good;
  for (double p = 0.99; p >= 0.90; p -= 0.01) {
    if (epp_has_purifying_fixed_point(protocol, p)) {
      good = p;
    } else {
      bad = p;
      break;
    }
  }
  if (bad == 1.0) {
    throw std::runtime_error("fixed point survives the whole scan range");
  }
  while (good - bad > tol) {
    const double mid = 0.5 * (good + bad);
    if (epp_has_purifying_fixed_point(protocol, mid)) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  return 1.0 - 0.5 * (good + bad);
}

bool epp_purifies(const DensityOperator& initial, EppProtocol protocol,
                  double p, double f_max) {
  EppOptions options;
  options.max_iters = 400;
  const EppTrace trace = epp_run(initial, protocol, p, options);
  return trace.converged && !trace.failed &&
         trace.fixed_point_fidelity >= f_max - 1e-3;
}

EppThresholdResult epp_threshold(EppProtocol protocol, double p, double tol) {
  if (tol < 1e-4) {
    throw std::invalid_argument("threshold tolerance must be at least 1e-4");
  }
  EppThresholdResult result;
  const FixedPointResult fp = epp_fixed_point(protocol, p);
  if (!fp.converged || fp.fidelity < kOperationalFidelityBar) {
    return result;  // not found
  }
  result.f_max = fp.fidelity;

  auto purifiable = [&](double q) {
    return epp_purifies(depolarized_w(q), protocol, p, fp.fidelity);
  };

  double hi = 1.0;
  if (!purifiable(hi)) {
    return result;
  }
  double lo = 0.55;
  while (lo > 0.0 && purifiable(lo)) {
    hi = lo;
    lo -= 0.15;
  }
  if (lo <= 0.0) {
    throw std::runtime_error("purification threshold not bracketed");
  }
  while (depolarized_w_fidelity(hi) - depolarized_w_fidelity(lo) > tol) {
    const double mid = 0.5 * (lo + hi);
    if (purifiable(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  result.found = true;
  result.q = 0.5 * (lo + hi);
  result.fidelity = depolarized_w_fidelity(result.q);
  return result;
}

}  // namespace wrep
