#include "../support/generators.hpp"

#include <vwm/errors.hpp>
#include <vwm/trade.hpp>

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace vwm;

namespace {

TradeSeries series_at(std::initializer_list<double> times)
{
    std::vector<RawTrade> rows;
    for (double t : times)
        rows.push_back({t, 4.0, 2.0});
    return validate_series(rows);
}

} // namespace

TEST_CASE("validate_series sorts by timestamp and reindexes")
{
    std::vector<RawTrade> rows{{1.0, 4.0, 2.0}, {0.5, 6.0, 3.0}};
    auto const s = validate_series(rows);
    REQUIRE(s.size() == 2);
    CHECK(s[0].timestamp == 0.5);
    CHECK(s[0].cost == 6.0);
    CHECK(s[0].index == 0);
    CHECK(s[1].timestamp == 1.0);
    CHECK(s[1].index == 1);
}

TEST_CASE("validate_series keeps input order among equal timestamps")
{
    std::vector<RawTrade> rows{{1.0, 4.0, 2.0}, {1.0, 6.0, 3.0}, {0.0, 1.0, 1.0}, {1.0, 8.0, 1.0}};
    auto const s = validate_series(rows);
    REQUIRE(s.size() == 4);
    CHECK(s[1].cost == 4.0);
    CHECK(s[2].cost == 6.0);
    CHECK(s[3].cost == 8.0);
}

TEST_CASE("validate_series rejects invalid rows and names them")
{
    double const nan = std::numeric_limits<double>::quiet_NaN();
    double const inf = std::numeric_limits<double>::infinity();

    auto reject = [](std::vector<RawTrade> rows, std::size_t row, std::string const& reason) {
        try {
            validate_series(rows);
            FAIL("expected ValidationError");
        } catch (ValidationError const& e) {
            CHECK(e.row() == row);
            CHECK(e.reason() == reason);
            CHECK(std::string(e.what()).find("row " + std::to_string(row)) != std::string::npos);
        }
    };

    reject({{1.0, 4.0, 0.0}}, 0, "volume must be positive");
    reject({{0.0, 1.0, 1.0}, {1.0, -4.0, 2.0}}, 1, "cost must be positive");
    reject({{0.0, 1.0, 1.0}, {nan, 4.0, 2.0}}, 1, "timestamp must be finite");
    reject({{inf, 4.0, 2.0}}, 0, "timestamp must be finite");
    reject({{0.0, 4.0, nan}}, 0, "volume must be finite");
    reject({{0.0, 0.0, 1.0}}, 0, "cost must be positive");
}

TEST_CASE("TradeSeries constructor enforces ordering and indices")
{
    CHECK_THROWS_AS(TradeSeries({Trade{0, 1.0, 1.0, 1.0}, Trade{1, 0.5, 1.0, 1.0}}), ValidationError);
    CHECK_THROWS_AS(TradeSeries({Trade{1, 1.0, 1.0, 1.0}}), ValidationError);
    CHECK_NOTHROW(TradeSeries({Trade{0, 1.0, 1.0, 1.0}, Trade{1, 1.0, 2.0, 1.0}}));
}

TEST_CASE("price_of divides cost by volume")
{
    CHECK(price_of(Trade{0, 0.0, 10.0, 2.0}) == 5.0);
    CHECK(price_of(Trade{0, 0.0, 6.0, 3.0}) == 2.0);
    for (double x : {0.001, 1.0, 3.25, 1e9})
        CHECK(price_of(Trade{0, 0.0, x, 1.0}) == x);
}

TEST_CASE("select_window includes both boundaries")
{
    auto const s = series_at({0.0, 1.0, 2.0});

    auto const all = select_window(s, {1.0, 2.0});
    CHECK(all.member_indices() == std::vector<std::size_t>{0, 1, 2});
    CHECK(trade_count(all) == 3);

    auto const middle = select_window(s, {1.0, 1.9});
    CHECK(middle.member_indices() == std::vector<std::size_t>{1});
    CHECK(trade_count(middle) == 1);

    auto const none = select_window(s, {10.0, 1.0});
    CHECK(none.empty());
    CHECK(trade_count(none) == 0);

    auto const single = series_at({5.0});
    CHECK(trade_count(select_window(single, {5.0, 0.5})) == 1);
}

TEST_CASE("select_window rejects non-positive widths")
{
    auto const s = series_at({0.0});
    CHECK_THROWS_AS(select_window(s, {0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(select_window(s, {0.0, -1.0}), std::invalid_argument);
    CHECK_THROWS_AS(select_window(s, {0.0, std::nan("")}), std::invalid_argument);
}

TEST_CASE("window properties on random series")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int iter = 0; iter < 200; ++iter) {
        auto const rows = gen::random_rows(rng, 1 + iter % 60);
        auto const s = validate_series(rows);
        double const span = s.trades().back().timestamp - s.trades().front().timestamp;
        double const center = s.trades().front().timestamp + u(rng) * span;
        double const width = 0.01 + u(rng) * span;

        auto const view = select_window(s, {center, width});

        // membership matches a full scan
        std::vector<std::size_t> scanned;
        for (auto const& t : s.trades())
            if (ref::in_window(t.timestamp, center, width))
                scanned.push_back(t.index);
        CHECK(view.member_indices() == scanned);

        // idempotent over the restricted series
        auto const restricted = s.slice(view.first(), view.size());
        auto const again = select_window(restricted, {center, width});
        CHECK(again.size() == view.size());
        CHECK(again.first() == 0);

        // widening never removes members
        auto const wider = select_window(s, {center, width * 1.5});
        CHECK(wider.first() <= view.first());
        CHECK(wider.first() + wider.size() >= view.first() + view.size());

        auto const& pick = s[static_cast<std::size_t>(iter) % s.size()];
        auto const exact = select_window(s, {pick.timestamp, width});
        auto const members = exact.member_indices();
        CHECK(std::find(members.begin(), members.end(), pick.index) != members.end());
    }
}

TEST_CASE("trades exactly on a boundary are members")
{
    auto const s = series_at({-3.0, 0.0, 0.25, 4.0, 7.5});
    for (auto const& t : s.trades()) {
        // dyadic values: center +/- width/2 lands on t exactly
        CHECK(trade_count(select_window(s, {t.timestamp - 0.5, 1.0})) >= 1);
        CHECK(trade_count(select_window(s, {t.timestamp + 0.5, 1.0})) >= 1);
        auto const left = select_window(s, {t.timestamp + 0.5, 1.0});
        CHECK(left.first() == t.index);
    }
}
