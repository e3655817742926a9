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

#include "wrep/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace wrep {

namespace {

bool all_finite(const ComplexMatrix& m) { return m.allFinite(); }

// Splits a basis index of `reg` into (target bits, rest bits). Target bits
// are packed in the order of `target_slots`, most significant first; the
// rest keep their relative order.
struct IndexSplitter {
  IndexSplitter(const QubitRegister& reg, const std::vector<int>& target_slots)
      : n(reg.num_qubits()), t(static_cast<int>(target_slots.size())) {
    std::vector<bool> is_target(n, false);
    for (int s : target_slots) is_target[s] = true;
    // Shift that moves the bit of slot s (slot 0 most significant) to bit 0.
    auto bit_of = [this](std::int64_t idx, int slot) {
      return (idx >> (n - 1 - slot)) & 1;
    };
    const std::int64_t dim = std::int64_t{1} << n;
    target_part.resize(dim);
    rest_part.resize(dim);
    for (std::int64_t idx = 0; idx < dim; ++idx) {
      std::int64_t tp = 0;
      for (int k = 0; k < t; ++k) {
        tp = (tp << 1) | bit_of(idx, target_slots[k]);
      }
      std::int64_t rp = 0;
      for (int s = 0; s < n; ++s) {
        if (!is_target[s]) rp = (rp << 1) | bit_of(idx, s);
      }
      target_part[idx] = tp;
      rest_part[idx] = rp;
    }
    // Inverse map: (target bits, rest bits) -> full index.
    combine.resize(dim);
    for (std::int64_t idx = 0; idx < dim; ++idx) {
      combine[(target_part[idx] << (n - t)) | rest_part[idx]] = idx;
    }
  }

  std::int64_t index_of(std::int64_t target_bits, std::int64_t rest_bits) const {
    return combine[(target_bits << (n - t)) | rest_bits];
  }

  int n, t;
  std::vector<std::int64_t> target_part, rest_part, combine;
};

std::vector<int> slots_of(const QubitRegister& reg,
                          const std::vector<QubitLabel>& labels) {
  std::vector<int> slots;
  slots.reserve(labels.size());
  for (const auto& l : labels) slots.push_back(reg.slot_of(l));
  return slots;
}

}  // namespace

DensityOperator::DensityOperator(QubitRegister reg, ComplexMatrix matrix)
    : reg_(std::move(reg)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw std::invalid_argument("density matrix must be square");
  }
  if (matrix_.rows() != reg_.dim()) {
    throw std::invalid_argument("density matrix dimension " +
                                std::to_string(matrix_.rows()) +
                                " does not match register " + reg_.str());
  }
  if (!all_finite(matrix_)) {
    throw std::invalid_argument("density matrix has non-finite entries");
  }
  const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    throw std::invalid_argument("density matrix is not Hermitian (residual " +
                                std::to_string(herm) + ")");
  }
}

DensityOperator DensityOperator::from_pure(QubitRegister reg,
                                           const ComplexVector& psi) {
  if (psi.size() != reg.dim()) {
    throw std::invalid_argument("state vector dimension does not match register");
  }
  if (std::abs(psi.norm() - 1.0) > kHermitianTol) {
    throw std::invalid_argument("state vector is not normalized");
  }
  ComplexMatrix m = psi * psi.adjoint();
  return DensityOperator(std::move(reg), std::move(m));
}

DensityOperator DensityOperator::maximally_mixed(QubitRegister reg) {
  const auto d = reg.dim();
  ComplexMatrix m = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  return DensityOperator(std::move(reg), std::move(m));
}

double DensityOperator::weight() const { return matrix_.trace().real(); }

DensityOperator DensityOperator::normalized() const {
  const double w = weight();
  if (w < kBranchEps) {
    throw DegenerateOutcomeError("cannot normalize a zero-weight state");
  }
  return DensityOperator(reg_, matrix_ / w);
}

DensityOperator DensityOperator::relabeled(QubitRegister reg) const {
  if (reg.dim() != dim()) {
    throw std::invalid_argument("relabel register has wrong size");
  }
  return DensityOperator(std::move(reg), matrix_);
}

bool DensityOperator::is_normalized(double tol) const {
  return std::abs(weight() - 1.0) <= tol;
}

bool DensityOperator::is_valid_state(double tol) const {
  if (!all_finite(matrix_)) return false;
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  return min_eigenvalue() >= kEigenvalueFloor;
}

double DensityOperator::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      matrix_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

DensityOperator tensor_states(const DensityOperator& a,
                              const DensityOperator& b) {
  std::vector<QubitLabel> labels = a.reg().labels();
  const auto& bl = b.reg().labels();
  labels.insert(labels.end(), bl.begin(), bl.end());
  return DensityOperator(QubitRegister(std::move(labels)),
                         tensor_product(a.matrix(), b.matrix()));
}

DensityOperator partial_trace(const DensityOperator& state,
                              const std::vector<QubitLabel>& keep) {
  const auto& reg = state.reg();
  const std::vector<int> keep_slots = slots_of(reg, keep);
  IndexSplitter split(reg, keep_slots);
  const int traced = split.n - split.t;
  const std::int64_t kd = std::int64_t{1} << split.t;
  const std::int64_t td = std::int64_t{1} << traced;

  ComplexMatrix out = ComplexMatrix::Zero(kd, kd);
  const auto& m = state.matrix();
  for (std::int64_t a = 0; a < kd; ++a) {
    for (std::int64_t b = 0; b < kd; ++b) {
      Complex sum = 0.0;
      for (std::int64_t e = 0; e < td; ++e) {
        sum += m(split.index_of(a, e), split.index_of(b, e));
      }
      out(a, b) = sum;
    }
  }
  return DensityOperator(QubitRegister(keep), std::move(out));
}

DensityOperator apply_local(const DensityOperator& state,
                            const ComplexMatrix& op,
                            const std::vector<QubitLabel>& targets) {
  const auto& reg = state.reg();
  const int t = static_cast<int>(targets.size());
  const std::int64_t tdim = std::int64_t{1} << t;
  if (op.cols() != tdim) {
    throw std::invalid_argument(
        "operator has " + std::to_string(op.cols()) + " columns, expected " +
        std::to_string(tdim) + " for " + std::to_string(t) + " target qubits");
  }
  const std::vector<int> target_slots = slots_of(reg, targets);
  IndexSplitter split(reg, target_slots);
  const std::int64_t dim = reg.dim();
  const auto& rho = state.matrix();

  if (op.rows() == tdim) {
    // Square case: targets keep their slots.
    ComplexMatrix left = ComplexMatrix::Zero(dim, dim);
    for (std::int64_t i = 0; i < dim; ++i) {
      const std::int64_t ti = split.target_part[i];
      const std::int64_t ri = split.rest_part[i];
      for (std::int64_t s = 0; s < tdim; ++s) {
        const Complex c = op(ti, s);
        if (c == Complex(0.0)) continue;
        left.row(i) += c * rho.row(split.index_of(s, ri));
      }
    }
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (std::int64_t j = 0; j < dim; ++j) {
      const std::int64_t tj = split.target_part[j];
      const std::int64_t rj = split.rest_part[j];
      for (std::int64_t s = 0; s < tdim; ++s) {
        const Complex c = std::conj(op(tj, s));
        if (c == Complex(0.0)) continue;
        out.col(j) += c * left.col(split.index_of(s, rj));
      }
    }
    out = 0.5 * (out + out.adjoint().eval());
    return DensityOperator(reg, std::move(out));
  }

  // Rectangular case: the target qubits are replaced by fresh ordinal
  // qubits appended after the untouched ones.
  const auto out_rows = op.rows();
  int m = 0;
  while ((std::int64_t{1} << m) < out_rows) ++m;
  if ((std::int64_t{1} << m) != out_rows) {
    throw std::invalid_argument("operator row count is not a power of two");
  }
  std::vector<QubitLabel> out_labels;
  for (const auto& l : reg.labels()) {
    if (std::find(targets.begin(), targets.end(), l) == targets.end()) {
      out_labels.push_back(l);
    }
  }
  for (int k = 0; k < m; ++k) {
    QubitLabel fresh = QubitLabel::ordinal(k);
    if (std::find(out_labels.begin(), out_labels.end(), fresh) !=
        out_labels.end()) {
      throw std::invalid_argument(
          "fresh ordinal label collides with untouched qubit");
    }
    out_labels.push_back(fresh);
  }
  const int rest_n = split.n - split.t;
  const std::int64_t rest_dim = std::int64_t{1} << rest_n;
  const std::int64_t out_dim = rest_dim << m;
  auto out_index = [&](std::int64_t rest, std::int64_t s_out) {
    return (rest << m) | s_out;
  };
  ComplexMatrix left = ComplexMatrix::Zero(out_dim, dim);
  for (std::int64_t r = 0; r < rest_dim; ++r) {
    for (std::int64_t so = 0; so < out_rows; ++so) {
      auto row = left.row(out_index(r, so));
      for (std::int64_t s = 0; s < tdim; ++s) {
        const Complex c = op(so, s);
        if (c == Complex(0.0)) continue;
        row += c * rho.row(split.index_of(s, r));
      }
    }
  }
  ComplexMatrix out = ComplexMatrix::Zero(out_dim, out_dim);
  for (std::int64_t r = 0; r < rest_dim; ++r) {
    for (std::int64_t so = 0; so < out_rows; ++so) {
      auto col = out.col(out_index(r, so));
      for (std::int64_t s = 0; s < tdim; ++s) {
        const Complex c = std::conj(op(so, s));
        if (c == Complex(0.0)) continue;
        col += c * left.col(split.index_of(s, r));
      }
    }
  }
  out = 0.5 * (out + out.adjoint().eval());
  return DensityOperator(QubitRegister(std::move(out_labels)), std::move(out));
}

std::vector<BranchResult> measure(const DensityOperator& state,
                                  const std::vector<ComplexMatrix>& projectors,
                                  const std::vector<QubitLabel>& targets) {
  if (projectors.empty()) {
    throw std::invalid_argument("measurement needs at least one projector");
  }
  const std::int64_t tdim = std::int64_t{1} << targets.size();
  ComplexMatrix sum = ComplexMatrix::Zero(tdim, tdim);
  for (const auto& p : projectors) {
    if (p.rows() != tdim || p.cols() != tdim) {
      throw std::invalid_argument("projector dimension mismatch");
    }
    sum += p;
  }
  if ((sum - ComplexMatrix::Identity(tdim, tdim)).cwiseAbs().maxCoeff() >
      kTraceTol) {
    throw std::invalid_argument("projectors do not resolve the identity");
  }

  std::vector<BranchResult> branches;
  branches.reserve(projectors.size());
  int index = 0;
  for (const auto& p : projectors) {
    DensityOperator projected = apply_local(state, p, targets);
    const double prob = projected.weight();
    if (prob < kBranchEps) {
      branches.push_back({index, 0.0, std::move(projected), true});
    } else {
      branches.push_back({index, prob, projected.normalized(), false});
    }
    ++index;
  }
  return branches;
}

double fidelity_with_pure(const DensityOperator& state,
                          const ComplexVector& target) {
  if (target.size() != state.dim()) {
    throw std::invalid_argument("target vector dimension mismatch");
  }
  if (std::abs(target.norm() - 1.0) > kHermitianTol) {
    throw std::invalid_argument("target vector is not normalized");
  }
  const Complex value = target.adjoint() * state.matrix() * target;
  if (std::abs(value.imag()) > kHermitianTol) {
    throw std::runtime_error("fidelity has non-negligible imaginary part");
  }
  return value.real();
}

DensityOperator permute_qubits(const DensityOperator& state,
                               const std::vector<QubitLabel>& new_order) {
  const auto& reg = state.reg();
  const int n = reg.num_qubits();
  if (static_cast<int>(new_order.size()) != n) {
    throw std::invalid_argument("new order must list every register label");
  }
  // old slot of the label landing in each new slot; slot_of throws on
  // unknown labels and QubitRegister rejects duplicates.
  std::vector<int> old_slot(n);
  for (int s = 0; s < n; ++s) {
    old_slot[s] = reg.slot_of(new_order[s]);
  }
  QubitRegister out_reg((std::vector<QubitLabel>(new_order)));

  const std::int64_t dim = reg.dim();
  std::vector<std::int64_t> map(dim);
  for (std::int64_t i = 0; i < dim; ++i) {
    std::int64_t j = 0;
    for (int s = 0; s < n; ++s) {
      j = (j << 1) | ((i >> (n - 1 - old_slot[s])) & 1);
    }
    map[i] = j;
  }
  const auto& m = state.matrix();
  ComplexMatrix out(dim, dim);
  for (std::int64_t i = 0; i < dim; ++i) {
    for (std::int64_t j = 0; j < dim; ++j) {
      out(map[i], map[j]) = m(i, j);
    }
  }
  return DensityOperator(std::move(out_reg), std::move(out));
}

}  // namespace wrep
