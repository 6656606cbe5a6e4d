#pragma once

#include "vwm/trade.hpp"

#include <filesystem>
#include <iosfwd>
#include <string_view>

namespace vwm {

/// Column layout and timestamp unit of a trade file.
struct IngestSchema
{
    enum class Variant { ts_cost_volume, ts_price_volume };
    enum class TimeUnit { seconds, nanoseconds };

    Variant variant = Variant::ts_cost_volume;
    TimeUnit time_unit = TimeUnit::seconds;
};

enum class FileFormat { csv, ndjson };

/// ".ndjson", ".jsonl" and ".json" are NDJSON; everything else is CSV.
FileFormat format_from_path(std::filesystem::path const& path);

/// "ts_cost_volume" / "cost" and "ts_price_volume" / "price".
IngestSchema::Variant parse_variant(std::string_view name);
std::string_view variant_name(IngestSchema::Variant variant) noexcept;

/*!
    Reads trades from CSV or NDJSON.

    CSV: header exactly `ts,cost,volume` or `ts,price,volume` (matching the
    schema), one trade per line, LF endings with or without a final newline.
    NDJSON: one object per line with exactly the keys `ts`, `cost`|`price`,
    `volume`. Price rows are converted with cost = price * volume.

    Nanosecond timestamps are integers; they are converted to seconds as
    whole seconds plus fractional part, so anything finer than the double's
    resolution at that magnitude (about 0.2 us at current epochs) is lost.

    Throws ParseError (1-based line) on malformed input or when the input has
    no trade rows, ValidationError on rows that break a Trade invariant.
*/
TradeSeries read_trades(std::istream& in, IngestSchema schema, FileFormat format);
TradeSeries load_trades(std::filesystem::path const& path, IngestSchema schema);

/// Writes trades with 17 significant digits. Price rows carry cost / volume.
void write_trades(std::ostream& out, TradeSeries const& series, IngestSchema schema, FileFormat format);
void save_trades(std::filesystem::path const& path, TradeSeries const& series, IngestSchema schema);

} // namespace vwm
