// vwm: volume-weighted moments, volatilities and characteristic functionals of trade data.

#include "vwm/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

using namespace vwm;
using namespace vwm::cli;

namespace {

struct Flags
{
    RunConfig config;
    std::string schema = "cost";
    std::string ts_unit = "s";
    std::string format = "csv";
    double window = 0.0;
    double stride = 0.0;
};

void add_input(CLI::App& cmd, Flags& f, bool required)
{
    auto* opt = cmd.add_option("--input", f.config.input, "Trade file (.csv, or .ndjson/.jsonl)");
    if (required)
        opt->required();
    cmd.add_option("--schema", f.schema, "cost | price (ts_cost_volume | ts_price_volume)")->capture_default_str();
    cmd.add_option("--ts-unit", f.ts_unit, "Timestamp unit of the input: s | ns")->capture_default_str();
}

void add_window(CLI::App& cmd, Flags& f, bool required)
{
    auto* w = cmd.add_option("--window", f.window, "Averaging window width (seconds)");
    if (required)
        w->required();
    cmd.add_option("--stride", f.stride, "Distance between window centers (default: window width)");
}

void add_output(CLI::App& cmd, Flags& f)
{
    cmd.add_option("--format", f.format, "csv | json")->capture_default_str();
    cmd.add_option("--output", f.config.output, "Output file (default: standard output)");
}

void add_sim(CLI::App& cmd, Flags& f)
{
    auto& s = f.config.sim;
    cmd.add_option("--seed", s.seed, "RNG seed")->capture_default_str();
    cmd.add_option("--n-trades", s.n_trades, "Number of trades")->capture_default_str();
    cmd.add_option("--initial-price", s.initial_price)->capture_default_str();
    cmd.add_option("--sigma-step", s.sigma_step, "Per-trade log-price increment scale")->capture_default_str();
    cmd.add_option("--volume-mu", s.volume_mu, "Log-volume location")->capture_default_str();
    cmd.add_option("--volume-sigma", s.volume_sigma, "Log-volume scale")->capture_default_str();
    cmd.add_option("--rate", s.arrival_rate, "Trades per second")->capture_default_str();
    cmd.add_option("--start-time", s.start_time)->capture_default_str();
}

void finish(CLI::App const& cmd, Flags& f)
{
    auto& c = f.config;
    c.schema.variant = parse_variant(f.schema);
    if (f.ts_unit == "s")
        c.schema.time_unit = IngestSchema::TimeUnit::seconds;
    else if (f.ts_unit == "ns")
        c.schema.time_unit = IngestSchema::TimeUnit::nanoseconds;
    else
        throw ConfigError("--ts-unit must be s or ns");
    auto given = [&cmd](char const* name) {
        auto const* opt = cmd.get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    };
    if (given("--window"))
        c.window = f.window;
    if (given("--stride"))
        c.stride = f.stride;
    c.lag_given = given("--lag");
}

int emit(Table const& table, RunConfig const& config)
{
    if (config.output.empty()) {
        write_table(std::cout, table, config.format);
        return std::cout ? kSuccess : kInputError;
    }
    std::ofstream out(config.output);
    if (!out)
        throw ConfigError("cannot write '" + config.output + "'");
    write_table(out, table, config.format);
    return kSuccess;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Volume-weighted price and returns moments, volatilities and characteristic functionals"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "vwm 0.1.0");

    Flags f;

    auto* moments = app.add_subcommand("moments", "n-th degree price moments per window");
    add_input(*moments, f, true);
    add_window(*moments, f, true);
    moments->add_option("--degrees", f.config.degrees, "Comma-separated degrees")->delimiter(',');
    moments->add_option("--degree-cap", f.config.degree_cap, "Highest allowed degree (<= 16)")->capture_default_str();
    add_output(*moments, f);

    auto* price_vol = app.add_subcommand("price-vol", "Price volatility, direct and closed forms");
    add_input(*price_vol, f, true);
    add_window(*price_vol, f, true);
    add_output(*price_vol, f);

    auto* returns_vol = app.add_subcommand("returns-vol", "Returns volatility in three forms");
    add_input(*returns_vol, f, true);
    add_window(*returns_vol, f, true);
    returns_vol->add_option("--lag", f.config.lag, "Lag m in trades")->capture_default_str();
    add_output(*returns_vol, f);

    auto* charfun = app.add_subcommand("charfun", "Truncated characteristic functional on a grid");
    add_input(*charfun, f, true);
    add_window(*charfun, f, true);
    charfun->add_option("--grid", f.config.grid, "start:step:count")->required();
    charfun->add_option("--testfn", f.config.testfn, "CSV with header 'x', one value per grid point")->required();
    charfun->add_option("--nmax", f.config.nmax, "Truncation order")->capture_default_str();
    charfun->add_option("--lag", f.config.lag, "Use lag-m returns instead of prices");
    charfun->add_option("--degree-cap", f.config.degree_cap, "Highest allowed order (<= 16)")->capture_default_str();
    add_output(*charfun, f);

    auto* simulate = app.add_subcommand("simulate", "Write a synthetic trade series");
    add_sim(*simulate, f);
    simulate->add_option("--schema", f.schema, "cost | price")->capture_default_str();
    simulate->add_option("--format", f.format, "csv | ndjson")->capture_default_str();
    simulate->add_option("--output", f.config.output, "Output file (default: standard output)");

    auto* identity = app.add_subcommand("identity-check", "Check the volatility identities, PASS/FAIL at 1e-10");
    add_input(*identity, f, false);
    add_window(*identity, f, false);
    identity->add_option("--lag", f.config.lag, "Lag m in trades")->capture_default_str();
    add_sim(*identity, f);
    identity->add_option("--format", f.format, "csv | json")->capture_default_str();
    identity->add_option("--output", f.config.output, "Output file (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e);
    } catch (CLI::CallForVersion const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    }

    return guarded(std::cerr, [&]() -> int {
        auto const* cmd = app.get_subcommands().front();
        finish(*cmd, f);
        auto& config = f.config;

        if (cmd == simulate) {
            if (f.format != "csv" && f.format != "ndjson")
                throw ConfigError("--format must be csv or ndjson for simulate");
            auto const series = cmd_simulate(config);
            auto const format = f.format == "csv" ? FileFormat::csv : FileFormat::ndjson;
            std::cerr << "seed: " << config.sim.seed << '\n';
            if (config.output.empty()) {
                write_trades(std::cout, series, config.schema, format);
            } else {
                std::ofstream out(config.output);
                if (!out)
                    throw ConfigError("cannot write '" + config.output + "'");
                write_trades(out, series, config.schema, format);
            }
            return kSuccess;
        }

        config.format = parse_output_format(f.format);
        if (cmd == moments)
            return emit(cmd_moments(config), config);
        if (cmd == price_vol)
            return emit(cmd_price_vol(config), config);
        if (cmd == returns_vol)
            return emit(cmd_returns_vol(config), config);
        if (cmd == charfun)
            return emit(cmd_charfun(config), config);

        auto const report = cmd_identity_check(config);
        int const rc = emit(report.table, config);
        if (rc != kSuccess)
            return rc;
        return report.pass ? kSuccess : kIdentityFail;
    });
}
