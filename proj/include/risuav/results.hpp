// SPDX-License-Identifier: Apache-2.0
//
// risuav: simulation and optimization toolkit for RIS-carrying UAV networks
// Copyright (C) 2026 The risuav authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace risuav {

struct Column {
    std::string name;
    std::string unit;
    friend bool operator==(const Column &, const Column &) = default;
};

using Cell = std::variant<double, std::string>;

/// Plot-ready table of sweep results. Every row has one cell per column.
struct ResultTable {
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;  // insertion order is kept

    friend bool operator==(const ResultTable &, const ResultTable &) = default;

    std::size_t column_index(std::string_view name) const;  // throws if absent
    double number(std::size_t row, std::string_view column) const;
};

enum class ResultFormat { Csv, Json };

ResultFormat parse_format(std::string_view name);
// csv unless the extension is .json
ResultFormat format_for_path(const std::filesystem::path &path);

// Shortest decimal that parses back to the same double.
std::string format_double(double v);

/// CSV with `# key: value` metadata lines, a `name[unit]` header row, RFC 4180
/// quoting and LF line endings.
std::string to_csv(const ResultTable &table);

/// {"metadata": [{"key", "value"}...], "columns": [{"name", "unit"}...], "rows": [[...]...]}
std::string to_json(const ResultTable &table);
ResultTable table_from_json(std::string_view text);

// Throws Error naming the path on I/O failure.
void write_results(const ResultTable &table, ResultFormat format, const std::filesystem::path &path);

}  // namespace risuav
