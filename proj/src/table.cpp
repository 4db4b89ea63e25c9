#include "dirac1d/table.hpp"

#include <cstdio>
#include <stdexcept>

#include "dirac1d/version.hpp"
#include "json.hpp"

namespace dirac1d {

namespace {

std::string cell_to_csv(const Cell& c)
{
    if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
    if (std::holds_alternative<std::int64_t>(c))
        return std::to_string(std::get<std::int64_t>(c));
    const std::string& s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n") != std::string::npos)
        throw std::invalid_argument("Table: string cells must not need CSV quoting");
    return s;
}

nlohmann::ordered_json cell_to_json(const Cell& c)
{
    if (std::holds_alternative<double>(c)) return std::get<double>(c);
    if (std::holds_alternative<std::int64_t>(c)) return std::get<std::int64_t>(c);
    return std::get<std::string>(c);
}

}  // namespace

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size())
        throw std::invalid_argument("Table: row width does not match column count");
    rows.push_back(std::move(row));
}

std::string format_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

std::string to_csv(const Table& t)
{
    std::string out;
    out += "# ";
    out += kVersion;
    out += '\n';
    for (const auto& [key, value] : t.config) out += "# " + key + " = " + value + "\n";

    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += t.columns[i];
    }
    out += '\n';

    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += cell_to_csv(row[i]);
        }
        out += '\n';
    }

    for (const auto& [name, value] : t.checks)
        out += "# check " + name + " = " + cell_to_csv(value) + "\n";
    return out;
}

std::string to_json(const Table& t)
{
    nlohmann::ordered_json j;
    j["config"] = nlohmann::ordered_json::object();
    j["config"]["version"] = kVersion;
    for (const auto& [key, value] : t.config) j["config"][key] = value;

    j["columns"] = t.columns;

    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json jr = nlohmann::ordered_json::array();
        for (const auto& c : row) jr.push_back(cell_to_json(c));
        j["rows"].push_back(std::move(jr));
    }

    j["checks"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : t.checks) j["checks"][name] = cell_to_json(value);

    return j.dump(2) + "\n";
}

std::string render(const Table& t, const std::string& format)
{
    if (format == "csv") return to_csv(t);
    if (format == "json") return to_json(t);
    throw std::invalid_argument("render: format must be csv or json, got '" + format + "'");
}

}  // namespace dirac1d
