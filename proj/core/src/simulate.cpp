#include "vwm/simulate.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace vwm {

namespace {

class PortableDraws
{
public:
    explicit PortableDraws(std::uint64_t seed) : engine_(seed) {}

    double uniform()
    {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double normal()
    {
        double const u1 = uniform();
        double const u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace

void check_config(SimConfig const& c)
{
    if (c.n_trades < 1)
        throw std::invalid_argument("n_trades must be >= 1");
    if (!std::isfinite(c.start_time))
        throw std::invalid_argument("start_time must be finite");
    if (!(c.initial_price > 0.0) || !std::isfinite(c.initial_price))
        throw std::invalid_argument("initial_price must be positive");
    if (!(c.sigma_step >= 0.0) || !std::isfinite(c.sigma_step))
        throw std::invalid_argument("sigma_step must be >= 0");
    if (!std::isfinite(c.volume_mu))
        throw std::invalid_argument("volume_mu must be finite");
    if (!(c.volume_sigma >= 0.0) || !std::isfinite(c.volume_sigma))
        throw std::invalid_argument("volume_sigma must be >= 0");
    if (!(c.arrival_rate > 0.0) || !std::isfinite(c.arrival_rate))
        throw std::invalid_argument("arrival_rate must be positive");
}

TradeSeries simulate_trades(SimConfig const& config)
{
    check_config(config);
    PortableDraws draws(config.seed);

    std::vector<Trade> trades;
    trades.reserve(config.n_trades);
    double t = config.start_time;
    double price = config.initial_price;
    for (std::size_t k = 0; k < config.n_trades; ++k) {
        double const next = t - std::log(draws.uniform()) / config.arrival_rate;
        t = next > t ? next : std::nextafter(t, INFINITY);
        price *= std::exp(config.sigma_step * draws.normal());
        double const volume = std::exp(config.volume_mu + config.volume_sigma * draws.normal());
        trades.push_back(Trade{k, t, price * volume, volume});
    }
    return TradeSeries(std::move(trades));
}

} // namespace vwm
