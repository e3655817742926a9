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

#ifndef WREP_TESTS_TEST_HELPERS_HPP_
#define WREP_TESTS_TEST_HELPERS_HPP_

#include <random>

#include "wrep/density.hpp"

namespace wrep::testing {

// Random full-rank density matrix: G G^dag / tr, Gaussian entries.
inline DensityOperator random_state(QubitRegister reg, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto d = reg.dim();
  ComplexMatrix g(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      g(r, c) = Complex(gauss(rng), gauss(rng));
    }
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint().eval());
  return DensityOperator(std::move(reg), std::move(rho));
}

inline DensityOperator random_state(int qubits, std::mt19937& rng) {
  return random_state(QubitRegister::ordinals(qubits), rng);
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace wrep::testing

#endif  // WREP_TESTS_TEST_HELPERS_HPP_
