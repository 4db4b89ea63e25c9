// Tabular artifacts with deterministic CSV and JSON renderings.
//
// CSV: '#'-prefixed metadata lines (tool version, config echo), a header row,
// the data rows, then '#'-prefixed check lines. Doubles are written as fixed
// 17-significant-digit scientific, which round-trips exactly.
// JSON: {config, columns, rows, checks} with insertion key order; doubles use
// the shortest round-trip representation. Both renderings carry identical
// numeric content.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dirac1d {

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, Cell>> checks;

    void add_row(std::vector<Cell> row);  // throws on width mismatch
};

std::string format_double(double x);  // %.16e

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

// Renders in the requested format ("csv" or "json").
std::string render(const Table& t, const std::string& format);

}  // namespace dirac1d
