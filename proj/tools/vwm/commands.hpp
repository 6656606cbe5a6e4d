#pragma once

#include "vwm/table.hpp"

#include <vwm/charfun.hpp>
#include <vwm/ingest.hpp>
#include <vwm/price_moments.hpp>
#include <vwm/simulate.hpp>

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vwm::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    kIdentityFail = 1,
    kConfigError = 2,
    kInputError = 3,
    kUnsupported = 4,
};

/// Bad flag value or flag combination.
class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig
{
    std::string input;
    IngestSchema schema;
    std::optional<double> window;
    std::optional<double> stride; ///< defaults to the window width
    std::vector<int> degrees{1, 2};
    int degree_cap = kDefaultDegreeCap;
    int lag = 1;
    bool lag_given = false;
    int nmax = 4;
    std::string grid;   ///< "start:step:count"
    std::string testfn; ///< CSV with header `x`, one value per grid point
    OutputFormat format = OutputFormat::csv;
    std::string output; ///< empty: standard output

    SimConfig sim;
    FileFormat sim_format = FileFormat::csv;
};

/// Parses "start:step:count".
TimeGrid parse_grid(std::string const& text);

/// Reads a single-column CSV with header `x`.
std::vector<double> load_test_function(std::string const& path);

/// One row per window center: t, N, then C_n, V_n, p_n per degree.
Table cmd_moments(RunConfig const& config);

/// t, N, sigma2_direct, sigma2_closed, sigmaC2, sigmaV2, phiC2, phiV2, negative_flag.
Table cmd_price_vol(RunConfig const& config);

/// t, N_records, mean_return, sigma2_direct, sigma2_rform, sigma2_closed, r11, r21, r22, negative_flag.
Table cmd_returns_vol(RunConfig const& config);

/// order, term_re, term_im, partial_re, partial_im; the last row carries the truncated value.
Table cmd_charfun(RunConfig const& config);

TradeSeries cmd_simulate(RunConfig const& config);

struct IdentityReport
{
    Table table;
    bool pass = true;
};

/// Maximum scaled deviation per identity over every non-empty window, against 1e-10.
IdentityReport cmd_identity_check(RunConfig const& config);

inline constexpr double kIdentityTolerance = 1e-10;

/// Runs `body`, printing a one-line diagnostic to `err` and mapping exceptions to exit codes.
int guarded(std::ostream& err, std::function<int()> const& body);

} // namespace vwm::cli
