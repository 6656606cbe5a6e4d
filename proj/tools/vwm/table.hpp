#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace vwm::cli {

/// Empty cells print as an empty CSV field and as JSON null.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

enum class OutputFormat { csv, json };

OutputFormat parse_output_format(std::string const& name);

/// CSV: header line plus one line per row. JSON: an array of row objects.
/// Doubles use 17 significant digits in both.
void write_table(std::ostream& out, Table const& table, OutputFormat format);

} // namespace vwm::cli
