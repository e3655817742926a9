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

#ifndef WREP_TYPES_HPP_
#define WREP_TYPES_HPP_

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace wrep {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Tolerances used across the library.
inline constexpr double kHermitianTol = 1e-9;
inline constexpr double kTraceTol = 1e-9;
inline constexpr double kEigenvalueFloor = -1e-9;
inline constexpr double kExactTol = 1e-12;
inline constexpr double kBranchEps = 1e-12;

// Registers are capped well below anything that would need sparse kernels.
inline constexpr int kMaxQubits = 10;

// Thrown when every branch of a post-selected protocol carries (numerically)
// zero probability, so no output state can be defined.
class DegenerateOutcomeError : public std::runtime_error {
 public:
  explicit DegenerateOutcomeError(const std::string& what)
      : std::runtime_error(what) {}
};

inline ComplexMatrix dagger(const ComplexMatrix& m) { return m.adjoint(); }

}  // namespace wrep

#endif  // WREP_TYPES_HPP_
