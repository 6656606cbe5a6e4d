#include "vwm/ingest.hpp"

#include "vwm/errors.hpp"
#include "vwm/format.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vwm {

namespace {

using json = nlohmann::json;

std::string_view value_column(IngestSchema::Variant v) noexcept
{
    return v == IngestSchema::Variant::ts_cost_volume ? "cost" : "price";
}

double nanoseconds_to_seconds(std::int64_t ns) noexcept
{
    auto const whole = ns / 1'000'000'000;
    auto const frac = ns % 1'000'000'000;
    return static_cast<double>(whole) + static_cast<double>(frac) * 1e-9;
}

double parse_timestamp(std::string_view token, IngestSchema::TimeUnit unit, std::size_t line)
{
    if (unit == IngestSchema::TimeUnit::nanoseconds) {
        std::int64_t ns = 0;
        auto const [end, ec] = std::from_chars(token.data(), token.data() + token.size(), ns);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
            throw ParseError(line, "timestamp '" + std::string(token) + "' is not an integer nanosecond count");
        return nanoseconds_to_seconds(ns);
    }
    double t = 0.0;
    if (!parse_double(token, t))
        throw ParseError(line, "timestamp '" + std::string(token) + "' is not a number");
    return t;
}

double parse_field(std::string_view token, std::string_view name, std::size_t line)
{
    double v = 0.0;
    if (!parse_double(token, v))
        throw ParseError(line, std::string(name) + " '" + std::string(token) + "' is not a number");
    return v;
}

RawTrade to_raw(double ts, double value, double volume, IngestSchema::Variant variant)
{
    double const cost = variant == IngestSchema::Variant::ts_price_volume ? value * volume : value;
    return {ts, cost, volume};
}

void strip_cr(std::string& line)
{
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
}

std::vector<std::string_view> split_commas(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto const comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

void read_csv(std::istream& in, IngestSchema schema, std::vector<RawTrade>& rows, std::vector<std::size_t>& lines)
{
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(1, "empty input: expected a header line");
    strip_cr(line);
    std::string const expected = "ts," + std::string(value_column(schema.variant)) + ",volume";
    if (line != expected)
        throw ParseError(1, "header '" + line + "' does not match '" + expected + "'");

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        auto const fields = split_commas(line);
        if (fields.size() != 3)
            throw ParseError(line_no, "expected 3 fields, found " + std::to_string(fields.size()));
        double const ts = parse_timestamp(fields[0], schema.time_unit, line_no);
        double const value = parse_field(fields[1], value_column(schema.variant), line_no);
        double const volume = parse_field(fields[2], "volume", line_no);
        rows.push_back(to_raw(ts, value, volume, schema.variant));
        lines.push_back(line_no);
    }
}

double json_number(json const& obj, char const* key, std::size_t line)
{
    auto const it = obj.find(key);
    if (it == obj.end())
        throw ParseError(line, std::string("missing field '") + key + "'");
    if (!it->is_number())
        throw ParseError(line, std::string("field '") + key + "' is not a number");
    return it->get<double>();
}

void read_ndjson(std::istream& in, IngestSchema schema, std::vector<RawTrade>& rows,
                 std::vector<std::size_t>& lines)
{
    std::string const value_key(value_column(schema.variant));
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        json obj;
        try {
            obj = json::parse(line);
        } catch (json::parse_error const& e) {
            throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
        }
        if (!obj.is_object())
            throw ParseError(line_no, "expected a JSON object");
        for (auto const& [key, _] : obj.items())
            if (key != "ts" && key != value_key && key != "volume")
                throw ParseError(line_no, "unexpected field '" + key + "'");

        double ts = 0.0;
        if (schema.time_unit == IngestSchema::TimeUnit::nanoseconds) {
            auto const it = obj.find("ts");
            if (it == obj.end())
                throw ParseError(line_no, "missing field 'ts'");
            if (!it->is_number_integer())
                throw ParseError(line_no, "field 'ts' must be an integer nanosecond count");
            ts = nanoseconds_to_seconds(it->get<std::int64_t>());
        } else {
            ts = json_number(obj, "ts", line_no);
        }
        double const value = json_number(obj, value_key.c_str(), line_no);
        double const volume = json_number(obj, "volume", line_no);
        rows.push_back(to_raw(ts, value, volume, schema.variant));
        lines.push_back(line_no);
    }
}

std::string format_timestamp(double t, IngestSchema::TimeUnit unit)
{
    if (unit == IngestSchema::TimeUnit::nanoseconds)
        return std::to_string(std::llround(t * 1e9));
    return format_double(t);
}

} // namespace

FileFormat format_from_path(std::filesystem::path const& path)
{
    auto const ext = path.extension().string();
    if (ext == ".ndjson" || ext == ".jsonl" || ext == ".json")
        return FileFormat::ndjson;
    return FileFormat::csv;
}

IngestSchema::Variant parse_variant(std::string_view name)
{
    if (name == "ts_cost_volume" || name == "cost")
        return IngestSchema::Variant::ts_cost_volume;
    if (name == "ts_price_volume" || name == "price")
        return IngestSchema::Variant::ts_price_volume;
    throw std::invalid_argument("unknown schema '" + std::string(name) + "'");
}

std::string_view variant_name(IngestSchema::Variant variant) noexcept
{
    return variant == IngestSchema::Variant::ts_cost_volume ? "ts_cost_volume" : "ts_price_volume";
}

TradeSeries read_trades(std::istream& in, IngestSchema schema, FileFormat format)
{
    std::vector<RawTrade> rows;
    std::vector<std::size_t> lines;
    if (format == FileFormat::csv)
        read_csv(in, schema, rows, lines);
    else
        read_ndjson(in, schema, rows, lines);
    if (rows.empty())
        throw ParseError(lines.empty() ? 1 : lines.back(), "input contains no trades");

    try {
        return validate_series(rows);
    } catch (ValidationError const& e) {
        throw ValidationError(e.row(), e.reason(), lines[e.row()]);
    }
}

TradeSeries load_trades(std::filesystem::path const& path, IngestSchema schema)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open '" + path.string() + "'");
    return read_trades(in, schema, format_from_path(path));
}

void write_trades(std::ostream& out, TradeSeries const& series, IngestSchema schema, FileFormat format)
{
    bool const price = schema.variant == IngestSchema::Variant::ts_price_volume;
    std::string_view const column = value_column(schema.variant);
    if (format == FileFormat::csv)
        out << "ts," << column << ",volume\n";
    for (auto const& t : series.trades()) {
        auto const ts = format_timestamp(t.timestamp, schema.time_unit);
        auto const value = format_double(price ? price_of(t) : t.cost);
        auto const volume = format_double(t.volume);
        if (format == FileFormat::csv)
            out << ts << ',' << value << ',' << volume << '\n';
        else
            out << "{\"ts\":" << ts << ",\"" << column << "\":" << value << ",\"volume\":" << volume << "}\n";
    }
}

void save_trades(std::filesystem::path const& path, TradeSeries const& series, IngestSchema schema)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    write_trades(out, series, schema, format_from_path(path));
}

} // namespace vwm
