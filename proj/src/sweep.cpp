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

#include "wrep/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <stdexcept>

namespace wrep {

SweepRow& SweepRow::set(std::string key, double value) {
  keys_.push_back(std::move(key));
  values_.emplace_back(value);
  return *this;
}

SweepRow& SweepRow::set(std::string key, int value) {
  keys_.push_back(std::move(key));
  values_.emplace_back(value);
  return *this;
}

SweepRow& SweepRow::set(std::string key, std::string value) {
  keys_.push_back(std::move(key));
  values_.emplace_back(std::move(value));
  return *this;
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string SweepRow::value_str(std::size_t i) const {
  const auto& v = values_.at(i);
  if (std::holds_alternative<double>(v)) {
    return format_real(std::get<double>(v));
  }
  if (std::holds_alternative<int>(v)) {
    return std::to_string(std::get<int>(v));
  }
  return std::get<std::string>(v);
}

std::string SweepRow::value_json(std::size_t i) const {
  const auto& v = values_.at(i);
  if (std::holds_alternative<double>(v)) {
    const double d = std::get<double>(v);
    if (std::isnan(d) || std::isinf(d)) return "null";
    return format_real(d);
  }
  if (std::holds_alternative<int>(v)) {
    return std::to_string(std::get<int>(v));
  }
  return "\"" + std::get<std::string>(v) + "\"";
}

void SweepTable::add(SweepRow row) {
  if (columns_.empty()) {
    columns_ = row.keys();
  } else if (row.keys() != columns_) {
    throw std::logic_error("sweep row does not match the table columns");
  }
  rows_.push_back(std::move(row));
}

void emit_csv(const SweepTable& table, std::ostream& out) {
  const auto& columns = table.columns();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out << (i ? "," : "") << columns[i];
  }
  out << "\n";
  for (const auto& row : table.rows()) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out << (i ? "," : "") << row.value_str(i);
    }
    out << "\n";
  }
}

void emit_json(const SweepTable& table, std::ostream& out) {
  out << "[";
  const auto& rows = table.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    out << (r ? ",\n " : "\n ") << "{";
    for (std::size_t i = 0; i < row.keys().size(); ++i) {
      out << (i ? ", " : "") << "\"" << row.keys()[i]
          << "\": " << row.value_json(i);
    }
    out << "}";
  }
  out << (rows.empty() ? "]" : "\n]") << "\n";
}

void emit(const SweepTable& table, const std::string& format,
          const std::string& path) {
  std::ofstream file;
  const bool to_stdout = path.empty() || path == "-";
  if (!to_stdout) {
    file.open(path, std::ios::binary);
    if (!file) {
      throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& out = to_stdout ? std::cout : file;
  if (format == "csv") {
    emit_csv(table, out);
  } else if (format == "json") {
    emit_json(table, out);
  } else {
    throw std::invalid_argument("unknown output format: " + format);
  }
  out.flush();
  if (!to_stdout && !file) {
    throw std::runtime_error("write failed: " + path);
  }
}

}  // namespace wrep
