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

#ifndef WREP_REGISTER_HPP_
#define WREP_REGISTER_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wrep {

// A qubit inside a multi-copy register. Copies are numbered from 1; copy 0
// marks a generic register whose qubits are identified by ordinal only.
// For the triangle arrangement, positions 0/1/2 are the left, upper and
// right qubit of a copy.
struct QubitLabel {
  int copy_index = 0;
  int position = 0;

  static constexpr int kLeft = 0;
  static constexpr int kUpper = 1;
  static constexpr int kRight = 2;

  static QubitLabel left(int copy) { return {copy, kLeft}; }
  static QubitLabel upper(int copy) { return {copy, kUpper}; }
  static QubitLabel right(int copy) { return {copy, kRight}; }
  static QubitLabel ordinal(int k) { return {0, k}; }

  friend auto operator<=>(const QubitLabel&, const QubitLabel&) = default;

  std::string str() const;
};

// An ordered list of unique qubit labels. The first label is the most
// significant tensor slot: basis index b0 b1 ... b_{n-1} reads left to right.
class QubitRegister {
 public:
  QubitRegister() = default;
  explicit QubitRegister(std::vector<QubitLabel> labels);

  static QubitRegister ordinals(int n);

  int num_qubits() const { return static_cast<int>(labels_.size()); }
  std::int64_t dim() const { return std::int64_t{1} << labels_.size(); }
  const std::vector<QubitLabel>& labels() const { return labels_; }
  const QubitLabel& label(int slot) const { return labels_.at(slot); }

  // Tensor slot of a label; throws if the label is not in the register.
  int slot_of(const QubitLabel& label) const;
  bool contains(const QubitLabel& label) const;

  bool operator==(const QubitRegister& other) const = default;

  std::string str() const;

 private:
  std::vector<QubitLabel> labels_;
};

}  // namespace wrep

#endif  // WREP_REGISTER_HPP_
