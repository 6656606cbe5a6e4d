#include "vwm/table.hpp"

#include <vwm/format.hpp>

#include <nlohmann/json.hpp>

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace vwm::cli {

namespace {

std::string csv_cell(Cell const& cell)
{
    return std::visit(
        [](auto const& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>)
                return {};
            else if constexpr (std::is_same_v<T, double>)
                return format_double(v);
            else if constexpr (std::is_same_v<T, std::int64_t>)
                return std::to_string(v);
            else
                return v;
        },
        cell);
}

std::string json_cell(Cell const& cell)
{
    return std::visit(
        [](auto const& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>)
                return "null";
            else if constexpr (std::is_same_v<T, double>)
                return std::isfinite(v) ? format_double(v) : "null";
            else if constexpr (std::is_same_v<T, std::int64_t>)
                return std::to_string(v);
            else
                return nlohmann::json(v).dump();
        },
        cell);
}

} // namespace

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size())
        throw std::logic_error("row has " + std::to_string(row.size()) + " cells for " +
                               std::to_string(columns.size()) + " columns");
    rows.push_back(std::move(row));
}

OutputFormat parse_output_format(std::string const& name)
{
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "json")
        return OutputFormat::json;
    throw std::invalid_argument("unknown output format '" + name + "'");
}

void write_table(std::ostream& out, Table const& table, OutputFormat format)
{
    if (format == OutputFormat::csv) {
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            out << (c ? "," : "") << table.columns[c];
        out << '\n';
        for (auto const& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                out << (c ? "," : "") << csv_cell(row[c]);
            out << '\n';
        }
        return;
    }

    out << "[";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out << (r ? ",\n " : "\n ") << "{";
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            out << (c ? "," : "") << nlohmann::json(table.columns[c]).dump() << ":" << json_cell(table.rows[r][c]);
        out << "}";
    }
    out << "\n]\n";
}

} // namespace vwm::cli
