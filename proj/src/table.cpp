// Copyright 2026 The minienv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "minienv/table.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "minienv/error.hpp"

namespace minienv {

void Table::add_meta(std::string key, std::string value) {
  metadata.emplace_back(std::move(key), std::move(value));
}

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size())
    fail(ErrorCode::InvalidArgument,
         "Table: row has " + std::to_string(row.size()) + " cells, expected " +
             std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

std::size_t Table::column_index(const std::string &name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  fail(ErrorCode::InvalidArgument, "Table: no column '" + name + "'");
}

std::vector<double> Table::column(const std::string &name) const {
  const std::size_t j = column_index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto &r : rows) out.push_back(r[j]);
  return out;
}

std::string format_number(double v) {
  if (v == 0.0) return "0";
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[48];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  if (ec != std::errc()) fail(ErrorCode::Io, "format_number: conversion failed");
  return std::string(buf, ptr);
}

namespace {

void write_rows(std::ostream &out, const Table &t, char sep) {
  for (const auto &row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << sep;
      out << format_number(row[j]);
    }
    out << '\n';
  }
}

void write_meta(std::ostream &out, const Table &t) {
  for (const auto &[k, v] : t.metadata) out << "# " << k << '=' << v << '\n';
}

template <class Writer>
void to_file(const std::string &path, const Table &t, Writer w) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
  w(f, t);
  f.flush();
  if (!f) fail(ErrorCode::Io, "write to '" + path + "' failed");
}

}  // namespace

void write_csv(std::ostream &out, const Table &t) {
  write_meta(out, t);
  for (std::size_t j = 0; j < t.columns.size(); ++j)
    out << (j ? "," : "") << t.columns[j];
  out << '\n';
  write_rows(out, t, ',');
}

void write_dat(std::ostream &out, const Table &t) {
  write_meta(out, t);
  out << '#';
  for (const auto &c : t.columns) out << ' ' << c;
  out << '\n';
  write_rows(out, t, ' ');
}

std::string to_csv(const Table &t) {
  std::ostringstream s;
  write_csv(s, t);
  return s.str();
}

void write_csv_file(const std::string &path, const Table &t) {
  to_file(path, t, [](std::ostream &o, const Table &x) { write_csv(o, x); });
}

void write_dat_file(const std::string &path, const Table &t) {
  to_file(path, t, [](std::ostream &o, const Table &x) { write_dat(o, x); });
}

}  // namespace minienv
