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

#ifndef WREP_SWEEP_HPP_
#define WREP_SWEEP_HPP_

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace wrep {

// One (parameter point -> observables) record. Values keep insertion order.
class SweepRow {
 public:
  SweepRow& set(std::string key, double value);
  SweepRow& set(std::string key, int value);
  SweepRow& set(std::string key, std::string value);

  const std::vector<std::string>& keys() const { return keys_; }
  std::string value_str(std::size_t i) const;   // CSV form
  std::string value_json(std::size_t i) const;  // JSON form (NaN -> null)

 private:
  std::vector<std::string> keys_;
  std::vector<std::variant<double, int, std::string>> values_;
};

// A table carries its column schema so an empty result still emits a
// header; every added row must match the schema exactly.
class SweepTable {
 public:
  SweepTable() = default;
  explicit SweepTable(std::vector<std::string> columns)
      : columns_(std::move(columns)) {}

  void add(SweepRow row);
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<SweepRow>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }

 private:
  std::vector<std::string> columns_;
  std::vector<SweepRow> rows_;
};

// Reals carry 12 significant digits.
std::string format_real(double value);

void emit_csv(const SweepTable& table, std::ostream& out);
void emit_json(const SweepTable& table, std::ostream& out);

// `path` of "-" writes to standard output.
void emit(const SweepTable& table, const std::string& format,
          const std::string& path);

}  // namespace wrep

#endif  // WREP_SWEEP_HPP_
