#include "../support/generators.hpp"
#include "../support/reference.hpp"

#include <vwm/errors.hpp>
#include <vwm/price_moments.hpp>
#include <vwm/price_volatility.hpp>

#include <doctest.h>

#include <cmath>
#include <random>

using namespace vwm;

namespace {

struct Fixture
{
    TradeSeries series;
    WindowView view;

    explicit Fixture(std::vector<RawTrade> rows)
        : series(validate_series(rows)), view(select_window(series, {0.5, 4.0}))
    {
    }
    Fixture(Fixture const&) = delete;
};

} // namespace

TEST_CASE("dispersion_stats on the two-trade window")
{
    Fixture f({{0.0, 10.0, 2.0}, {1.0, 6.0, 3.0}});
    auto const s = dispersion_stats(f.view);
    CHECK(s.n_trades == 2);
    CHECK(s.cost_mean == 8.0);
    CHECK(s.cost_sq_mean == 68.0);
    CHECK(s.sigma_c2 == 4.0);
    CHECK(s.phi_c2 == 132.0);
    CHECK(s.volume_mean == 2.5);
    CHECK(s.volume_sq_mean == 6.5);
    CHECK(s.sigma_v2 == 0.25);
    CHECK(s.phi_v2 == 12.75);
}

TEST_CASE("both volatility forms on the two-trade window")
{
    Fixture f({{0.0, 10.0, 2.0}, {1.0, 6.0, 3.0}});
    double const expected = 72.0 / 325.0; // 136/13 - (16/5)^2 = 36/162.5
    CHECK(std::fabs(price_volatility_direct(f.view) - expected) <= 1e-14);
    CHECK(std::fabs(price_volatility_closed(dispersion_stats(f.view)) - expected) <= 1e-14);

    auto const r = price_volatility_report(f.view);
    CHECK(r.n_trades == 2);
    CHECK_FALSE(r.negative_flag);
    CHECK(r.sigma_p2_direct == price_volatility_direct(f.view));
}

TEST_CASE("negative volatility is reported and flagged, not clamped")
{
    // prices {2, 1}, volumes {1, 10}
    Fixture f({{0.0, 2.0, 1.0}, {1.0, 10.0, 10.0}});
    double const expected = -1960.0 / 12221.0; // 104/101 - (12/11)^2
    auto const r = price_volatility_report(f.view);
    CHECK(std::fabs(r.sigma_p2_direct - expected) <= 1e-14);
    CHECK(std::fabs(r.sigma_p2_closed - expected) <= 1e-14);
    CHECK(r.negative_flag);
}

TEST_CASE("degenerate windows")
{
    SUBCASE("identical trades")
    {
        Fixture f({{0.0, 6.0, 1.5}, {0.5, 6.0, 1.5}, {1.0, 6.0, 1.5}});
        auto const s = dispersion_stats(f.view);
        CHECK(s.sigma_c2 == 0.0);
        CHECK(s.sigma_v2 == 0.0);
        CHECK(price_volatility_closed(s) == 0.0);
        CHECK(std::fabs(price_volatility_direct(f.view)) <= 1e-12);
    }
    SUBCASE("single trade")
    {
        Fixture f({{0.0, 9.0, 2.0}});
        auto const s = dispersion_stats(f.view);
        CHECK(s.sigma_c2 == 0.0);
        CHECK(s.sigma_v2 == 0.0);
        CHECK(s.phi_c2 == 162.0);
        CHECK(s.phi_v2 == 8.0);
        CHECK(price_volatility_closed(s) == 0.0);
        CHECK(price_volatility_direct(f.view) == 0.0);
    }
    SUBCASE("constant price, varying volume")
    {
        std::mt19937_64 rng(3);
        std::lognormal_distribution<double> vol(0.0, 1.5);
        for (double p : {0.5, 1.0, 3.0}) {
            std::vector<RawTrade> rows;
            for (int i = 0; i < 40; ++i) {
                double const v = vol(rng);
                rows.push_back({i * 0.1, p * v, v});
            }
            Fixture f(rows);
            auto const r = price_volatility_report(f.view);
            CHECK(std::fabs(r.sigma_p2_direct) <= 1e-12);
            CHECK(std::fabs(r.sigma_p2_closed) <= 1e-12);
        }
    }
}

TEST_CASE("errors")
{
    Fixture f({{0.0, 10.0, 2.0}});
    auto const empty = select_window(f.series, {50.0, 1.0});
    CHECK_THROWS_AS(dispersion_stats(empty), EmptyWindow);
    CHECK_THROWS_AS(price_volatility_direct(empty), EmptyWindow);
    CHECK_THROWS_AS(price_volatility_report(empty), EmptyWindow);

    TradeDispersionStats corrupted;
    corrupted.phi_v2 = 1.0;
    corrupted.sigma_v2 = 1.0;
    CHECK_THROWS_AS(price_volatility_closed(corrupted), DegenerateDenominator);
}

TEST_CASE("uncentered dispersion clamps only rounding residue")
{
    CHECK(uncentered_dispersion(1.0, 1.0 - 1e-14) == 0.0);
    CHECK(uncentered_dispersion(1e3, 1e6 - 1e-7) == 0.0);
    CHECK(uncentered_dispersion(1.0, 1.0 - 1e-6) < 0.0);
    CHECK(uncentered_dispersion(2.0, 5.0) == 1.0);
}

TEST_CASE("properties: identity, covariance, oracle")
{
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<std::size_t> size(2, 100);
    for (int iter = 0; iter < 200; ++iter) {
        auto const rows = gen::random_rows(rng, size(rng));
        auto const s = validate_series(rows);
        auto const all = gen::ticks(s);
        double const center = 0.5 * (all.front().t + all.back().t);
        double const width = all.back().t - all.front().t + 1.0;
        auto const view = select_window(s, {center, width});
        auto const w = ref::members(all, center, width);

        auto const r = price_volatility_report(view);
        CHECK(scaled_deviation(r.sigma_p2_direct, r.sigma_p2_closed) <= 1e-10);
        CHECK(r.negative_flag == (r.sigma_p2_direct < 0.0));
        CHECK(ref::scaled_err(ref::price_volatility(w), r.sigma_p2_direct) <= 1e-10);
        CHECK(ref::scaled_err(ref::price_volatility(w), r.sigma_p2_closed) <= 1e-10);

        auto const d = ref::dispersions(w);
        CHECK(ref::rel_err(d.c1, r.stats.cost_mean) <= 1e-12);
        CHECK(ref::rel_err(d.v2, r.stats.volume_sq_mean) <= 1e-12);
        CHECK(std::fabs(d.sigma_c2 - r.stats.sigma_c2) <= 1e-10 * std::fmax(1.0, d.c2));
        CHECK(std::fabs(d.sigma_v2 - r.stats.sigma_v2) <= 1e-10 * std::fmax(1.0, d.v2));
        CHECK(r.stats.phi_c2 >= r.stats.sigma_c2);
        CHECK(r.stats.phi_v2 > r.stats.sigma_v2);

        for (double lambda : {1e-3, 1e3}) {
            auto const vs = validate_series(gen::scale_volume(rows, lambda));
            auto const cs = validate_series(gen::scale_cost(rows, lambda));
            auto const vr = price_volatility_report(select_window(vs, {center, width}));
            auto const cr = price_volatility_report(select_window(cs, {center, width}));
            CHECK(ref::scaled_err(r.sigma_p2_direct, vr.sigma_p2_direct) <= 1e-10);
            CHECK(ref::scaled_err(r.sigma_p2_closed, vr.sigma_p2_closed) <= 1e-10);
            double const scale = lambda * lambda;
            CHECK(ref::scaled_err(r.sigma_p2_direct, cr.sigma_p2_direct / scale) <= 1e-10);
            CHECK(ref::scaled_err(r.sigma_p2_closed, cr.sigma_p2_closed / scale) <= 1e-10);
        }
    }
}
