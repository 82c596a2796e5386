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

#ifndef MINIENV_TABLE_HPP
#define MINIENV_TABLE_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace minienv {

// Numeric result table with a `# key=value` metadata preamble.
struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_meta(std::string key, std::string value);
  void add_row(std::vector<double> row);  // size must match columns
  std::size_t column_index(const std::string &name) const;
  std::vector<double> column(const std::string &name) const;
};

// 12 significant digits, '.' separator, -0 printed as 0.
std::string format_number(double v);

void write_csv(std::ostream &out, const Table &t);
// Same numbers, space separated, header and metadata as comments.
void write_dat(std::ostream &out, const Table &t);

std::string to_csv(const Table &t);

void write_csv_file(const std::string &path, const Table &t);
void write_dat_file(const std::string &path, const Table &t);

}  // namespace minienv

#endif  // MINIENV_TABLE_HPP
