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

#include "wrep/register.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "wrep/types.hpp"

namespace wrep {

std::string QubitLabel::str() const {
  if (copy_index == 0) {
    return "q" + std::to_string(position);
  }
  const char* names[] = {"l", "u", "r"};
  if (position >= 0 && position <= 2) {
    return names[position] + std::to_string(copy_index);
  }
  return "p" + std::to_string(position) + "c" + std::to_string(copy_index);
}

QubitRegister::QubitRegister(std::vector<QubitLabel> labels)
    : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw std::invalid_argument("register exceeds " +
                                std::to_string(kMaxQubits) + " qubits");
  }
  std::set<QubitLabel> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) {
    throw std::invalid_argument("register labels are not unique");
  }
}

QubitRegister QubitRegister::ordinals(int n) {
  std::vector<QubitLabel> labels;
  labels.reserve(n);
  for (int k = 0; k < n; ++k) {
    labels.push_back(QubitLabel::ordinal(k));
  }
  return QubitRegister(std::move(labels));
}

int QubitRegister::slot_of(const QubitLabel& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw std::invalid_argument("label " + label.str() +
                                " not in register " + str());
  }
  return static_cast<int>(it - labels_.begin());
}

bool QubitRegister::contains(const QubitLabel& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::string QubitRegister::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i > 0) out += ",";
    out += labels_[i].str();
  }
  return out + ")";
}

}  // namespace wrep
