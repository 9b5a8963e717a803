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

#include "risuav/results.hpp"

#include "risuav/errors.hpp"

#include "json.hpp"

#include <array>
#include <charconv>
#include <fstream>

namespace risuav {

using ojson = nlohmann::ordered_json;

std::size_t ResultTable::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i].name == name) return i;
    throw Error("result table has no column '" + std::string(name) + "'");
}

double ResultTable::number(std::size_t row, std::string_view column) const {
    const Cell &c = rows.at(row).at(column_index(column));
    if (const double *d = std::get_if<double>(&c)) return *d;
    throw Error("column '" + std::string(column) + "' is not numeric");
}

ResultFormat parse_format(std::string_view name) {
    if (name == "csv") return ResultFormat::Csv;
    if (name == "json") return ResultFormat::Json;
    throw Error("unknown result format '" + std::string(name) + "' (expected csv or json)");
}

ResultFormat format_for_path(const std::filesystem::path &path) {
    return path.extension() == ".json" ? ResultFormat::Json : ResultFormat::Csv;
}

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw Error("format_double: conversion failed");
    return {buf.data(), end};
}

namespace {

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_text(const Cell &c) {
    if (const double *d = std::get_if<double>(&c)) return format_double(*d);
    return std::get<std::string>(c);
}

void check_rectangular(const ResultTable &t) {
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        if (t.rows[r].size() != t.columns.size())
            throw Error("result table row " + std::to_string(r) + " has " + std::to_string(t.rows[r].size()) +
                        " cells for " + std::to_string(t.columns.size()) + " columns");
}

}  // namespace

std::string to_csv(const ResultTable &t) {
    check_rectangular(t);
    std::string out;
    for (const auto &[k, v] : t.metadata) out += "# " + k + ": " + v + "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_field(t.columns[i].name + "[" + t.columns[i].unit + "]");
    }
    out += '\n';
    for (const auto &row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_field(cell_text(row[i]));
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const ResultTable &t) {
    check_rectangular(t);
    ojson j;
    j["metadata"] = ojson::array();
    for (const auto &[k, v] : t.metadata) j["metadata"].push_back({{"key", k}, {"value", v}});
    j["columns"] = ojson::array();
    for (const auto &c : t.columns) j["columns"].push_back({{"name", c.name}, {"unit", c.unit}});
    j["rows"] = ojson::array();
    for (const auto &row : t.rows) {
        ojson r = ojson::array();
        for (const auto &c : row) {
            if (const double *d = std::get_if<double>(&c))
                r.push_back(*d);
            else
                r.push_back(std::get<std::string>(c));
        }
        j["rows"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

ResultTable table_from_json(std::string_view text) {
    ResultTable t;
    try {
        const ojson j = ojson::parse(text);
        for (const auto &m : j.at("metadata"))
            t.metadata.emplace_back(m.at("key").get<std::string>(), m.at("value").get<std::string>());
        for (const auto &c : j.at("columns"))
            t.columns.push_back({c.at("name").get<std::string>(), c.at("unit").get<std::string>()});
        for (const auto &r : j.at("rows")) {
            std::vector<Cell> row;
            for (const auto &c : r) {
                if (c.is_string())
                    row.emplace_back(c.get<std::string>());
                else
                    row.emplace_back(c.get<double>());
            }
            t.rows.push_back(std::move(row));
        }
    } catch (const nlohmann::json::exception &e) {
        throw Error(std::string("table_from_json: ") + e.what());
    }
    check_rectangular(t);
    return t;
}

void write_results(const ResultTable &table, ResultFormat format, const std::filesystem::path &path) {
    const std::string body = format == ResultFormat::Csv ? to_csv(table) : to_json(table);
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw Error("cannot create directory for '" + path.string() + "': " + ec.message());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!out) throw Error("write to '" + path.string() + "' failed");
}

}  // namespace risuav
