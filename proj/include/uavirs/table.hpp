// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace uavirs {

// Empty cells (monostate) print as "" in CSV and null in JSON.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

// Nine significant digits; -0 prints as 0; nan/inf print as nan/inf/-inf.
std::string format_number(double v);

// Header plus one LF-terminated line per row.
std::string to_csv(const Table& table);

// Array of row objects keyed by column.
nlohmann::ordered_json to_json(const Table& table);

}  // namespace uavirs
