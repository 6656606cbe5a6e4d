#include "vwm/commands.hpp"

#include <vwm/errors.hpp>
#include <vwm/format.hpp>
#include <vwm/price_volatility.hpp>
#include <vwm/returns.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <string_view>

namespace vwm::cli {

namespace {

constexpr double kMaxWindows = 1e7;

TradeSeries load_input(RunConfig const& config)
{
    if (config.input.empty())
        throw ConfigError("--input is required");
    return load_trades(config.input, config.schema);
}

double require_window(RunConfig const& config)
{
    if (!config.window)
        throw ConfigError("--window is required");
    if (!std::isfinite(*config.window) || !(*config.window > 0.0))
        throw ConfigError("--window must be positive");
    return *config.window;
}

std::vector<double> centers_for(TradeSeries const& series, RunConfig const& config)
{
    double const width = require_window(config);
    double const stride = config.stride.value_or(width);
    if (!std::isfinite(stride) || !(stride > 0.0))
        throw ConfigError("--stride must be positive");
    double const span = series.trades().back().timestamp - series.trades().front().timestamp;
    if (span / stride > kMaxWindows)
        throw ConfigError("--stride gives more than 1e7 windows over the input span");
    return rolling_centers(series, width, stride);
}

void check_degrees(RunConfig const& config)
{
    if (config.degrees.empty())
        throw ConfigError("--degrees must list at least one degree");
    if (config.degree_cap < 1 || config.degree_cap > kMaxDegreeCap)
        throw ConfigError("--degree-cap must be in [1, " + std::to_string(kMaxDegreeCap) + "]");
    for (int n : config.degrees)
        if (n < 1 || n > config.degree_cap)
            throw ConfigError("degree " + std::to_string(n) + " outside [1, " + std::to_string(config.degree_cap) +
                              "]");
}

void check_lag(RunConfig const& config, TradeSeries const& series)
{
    if (config.lag < 1)
        throw ConfigError("--lag must be >= 1");
    if (static_cast<std::size_t>(config.lag) >= series.size())
        throw ConfigError("--lag " + std::to_string(config.lag) + " needs more than " +
                          std::to_string(series.size()) + " trades");
}

Cell count_cell(std::size_t n) { return static_cast<std::int64_t>(n); }
Cell flag_cell(bool b) { return static_cast<std::int64_t>(b ? 1 : 0); }

} // namespace

TimeGrid parse_grid(std::string const& text)
{
    auto const a = text.find(':');
    auto const b = a == std::string::npos ? a : text.find(':', a + 1);
    if (b == std::string::npos || text.find(':', b + 1) != std::string::npos)
        throw ConfigError("--grid must be start:step:count");
    TimeGrid grid;
    std::string_view const sv(text);
    std::string_view const count_text = sv.substr(b + 1);
    auto const [end, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), grid.count);
    if (!parse_double(sv.substr(0, a), grid.start) || !parse_double(sv.substr(a + 1, b - a - 1), grid.step) ||
        ec != std::errc{} || end != count_text.data() + count_text.size())
        throw ConfigError("--grid must be start:step:count, got '" + text + "'");
    if (!std::isfinite(grid.start) || !std::isfinite(grid.step) || !(grid.step > 0.0) || grid.count == 0)
        throw ConfigError("--grid needs a finite start, positive step and count >= 1");
    return grid;
}

std::vector<double> load_test_function(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open test function file '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || (line != "x" && line != "x\r"))
        throw ParseError(1, "test function header must be 'x'");
    std::vector<double> values;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        double v = 0.0;
        if (!parse_double(line, v) || !std::isfinite(v))
            throw ParseError(line_no, "test function value '" + line + "' is not a finite number");
        values.push_back(v);
    }
    return values;
}

Table cmd_moments(RunConfig const& config)
{
    check_degrees(config);
    auto const series = load_input(config);
    double const width = require_window(config);

    Table table;
    table.columns = {"t", "N"};
    for (int n : config.degrees)
        for (char const* prefix : {"C_", "V_", "p_"})
            table.columns.push_back(prefix + std::to_string(n));

    for (double center : centers_for(series, config)) {
        auto const rec = window_moments(select_window(series, {center, width}), config.degrees, config.degree_cap);
        std::vector<Cell> row{center, count_cell(rec.trade_count)};
        for (std::size_t k = 0; k < config.degrees.size(); ++k) {
            if (rec.empty()) {
                row.insert(row.end(), 3, Cell{});
                continue;
            }
            auto const& e = rec.entries[k];
            row.insert(row.end(), {e.cost_sum, e.volume_sum, e.moment});
        }
        table.add_row(std::move(row));
    }
    return table;
}

Table cmd_price_vol(RunConfig const& config)
{
    auto const series = load_input(config);
    double const width = require_window(config);

    Table table;
    table.columns = {"t",       "N",       "sigma2_direct", "sigma2_closed", "sigmaC2",
                     "sigmaV2", "phiC2",   "phiV2",         "negative_flag"};
    for (double center : centers_for(series, config)) {
        auto const view = select_window(series, {center, width});
        if (view.empty()) {
            std::vector<Cell> row(table.columns.size());
            row[0] = center;
            row[1] = count_cell(0);
            table.add_row(std::move(row));
            continue;
        }
        auto const r = price_volatility_report(view);
        table.add_row({center, count_cell(r.n_trades), r.sigma_p2_direct, r.sigma_p2_closed, r.stats.sigma_c2,
                       r.stats.sigma_v2, r.stats.phi_c2, r.stats.phi_v2, flag_cell(r.negative_flag)});
    }
    return table;
}

Table cmd_returns_vol(RunConfig const& config)
{
    auto const series = load_input(config);
    double const width = require_window(config);
    check_lag(config, series);
    auto const records = build_returns(series, config.lag);

    Table table;
    table.columns = {"t",     "N_records", "mean_return", "sigma2_direct", "sigma2_rform",
                     "sigma2_closed", "r11", "r21",       "r22",           "negative_flag"};
    for (double center : centers_for(series, config)) {
        WindowSpec const spec{center, width};
        auto const window = select_records(records, spec);
        if (window.empty()) {
            std::vector<Cell> row(table.columns.size());
            row[0] = center;
            row[1] = count_cell(0);
            table.add_row(std::move(row));
            continue;
        }
        auto const r = returns_volatility_report(window, spec, config.lag);
        table.add_row({center, count_cell(r.n_records), r.mean_return, r.sigma_q2_direct, r.sigma_q2_rform,
                       r.sigma_q2_closed, r.terms.r11, r.terms.r21, r.terms.r22, flag_cell(r.negative_flag)});
    }
    return table;
}

Table cmd_charfun(RunConfig const& config)
{
    if (config.grid.empty())
        throw ConfigError("--grid is required");
    if (config.testfn.empty())
        throw ConfigError("--testfn is required");
    if (config.degree_cap < 1 || config.degree_cap > kMaxDegreeCap)
        throw ConfigError("--degree-cap must be in [1, " + std::to_string(kMaxDegreeCap) + "]");
    if (config.nmax < 1 || config.nmax > config.degree_cap)
        throw ConfigError("--nmax must be in [1, " + std::to_string(config.degree_cap) + "]");
    auto const grid = parse_grid(config.grid);
    double const width = require_window(config);
    auto const x = load_test_function(config.testfn);
    if (x.size() != grid.count)
        throw ConfigError("test function has " + std::to_string(x.size()) + " values for " +
                          std::to_string(grid.count) + " grid points");

    auto const series = load_input(config);
    PairSeries pairs;
    if (config.lag_given) {
        check_lag(config, series);
        pairs = PairSeries::from_returns(build_returns(series, config.lag));
    } else {
        pairs = PairSeries::from_trades(series);
    }

    CharFunResult result;
    try {
        result = charfun_truncated(pairs, width, grid, x, config.nmax, config.degree_cap);
    } catch (EmptyWindow const& e) {
        throw ConfigError(std::string("grid point without data: ") + e.what());
    }

    Table table;
    table.columns = {"order", "term_re", "term_im", "partial_re", "partial_im"};
    for (std::size_t n = 0; n < result.terms.size(); ++n)
        table.add_row({count_cell(n), result.terms[n].real(), result.terms[n].imag(), result.partial_sums[n].real(),
                       result.partial_sums[n].imag()});
    return table;
}

TradeSeries cmd_simulate(RunConfig const& config)
{
    try {
        check_config(config.sim);
    } catch (std::invalid_argument const& e) {
        throw ConfigError(e.what());
    }
    return simulate_trades(config.sim);
}

IdentityReport cmd_identity_check(RunConfig const& config)
{
    auto const series = config.input.empty() ? cmd_simulate(config) : load_input(config);
    if (config.lag < 1)
        throw ConfigError("--lag must be >= 1");

    std::vector<double> centers;
    double width = 0.0;
    if (config.window) {
        width = require_window(config);
        centers = centers_for(series, config);
    } else {
        double const first = series.trades().front().timestamp;
        double const last = series.trades().back().timestamp;
        width = (last - first) + 1.0;
        centers = {0.5 * (first + last)};
    }

    struct Tally
    {
        char const* name;
        std::size_t windows = 0;
        double max_deviation = 0.0;

        void add(double a, double b)
        {
            ++windows;
            max_deviation = std::max(max_deviation, scaled_deviation(a, b));
        }
    };
    Tally price{"price_direct_vs_closed"};
    Tally ret_dr{"returns_direct_vs_rform"};
    Tally ret_dc{"returns_direct_vs_closed"};
    Tally ret_rc{"returns_rform_vs_closed"};

    std::vector<ReturnsRecord> records;
    if (static_cast<std::size_t>(config.lag) < series.size())
        records = build_returns(series, config.lag);

    for (double center : centers) {
        WindowSpec const spec{center, width};
        auto const view = select_window(series, spec);
        if (!view.empty()) {
            auto const r = price_volatility_report(view);
            price.add(r.sigma_p2_direct, r.sigma_p2_closed);
        }
        auto const window = select_records(records, spec);
        if (!window.empty()) {
            auto const r = returns_volatility_report(window, spec, config.lag);
            ret_dr.add(r.sigma_q2_direct, r.sigma_q2_rform);
            ret_dc.add(r.sigma_q2_direct, r.sigma_q2_closed);
            ret_rc.add(r.sigma_q2_rform, r.sigma_q2_closed);
        }
    }

    IdentityReport report;
    report.table.columns = {"identity", "windows", "max_deviation", "tolerance", "status"};
    for (auto const* t : {&price, &ret_dr, &ret_dc, &ret_rc}) {
        bool const ok = !(t->max_deviation > kIdentityTolerance);
        report.pass = report.pass && ok;
        report.table.add_row({std::string(t->name), count_cell(t->windows), t->max_deviation, kIdentityTolerance,
                              std::string(ok ? "PASS" : "FAIL")});
    }
    return report;
}

int guarded(std::ostream& err, std::function<int()> const& body)
{
    try {
        return body();
    } catch (ConfigError const& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (std::invalid_argument const& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (DegreeOutOfRange const& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (TruncationOrderOutOfRange const& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (LagTooLarge const& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (UnsupportedWindowOverlap const& e) {
        err << "unsupported configuration: " << e.what() << '\n';
        return kUnsupported;
    } catch (ParseError const& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (ValidationError const& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (std::exception const& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

} // namespace vwm::cli
