#pragma once

#include "vwm/trade.hpp"

#include <cstdint>

namespace vwm {

/*!
    Parameters of the synthetic trade generator.

    Generator (fixed so fixtures are reproducible): std::mt19937_64 seeded
    with `seed`. Uniforms are u = ((x >> 11) + 0.5) * 2^-53, strictly inside
    (0, 1). Standard normals use one Box-Muller draw per pair of uniforms,
    z = sqrt(-2 ln u1) cos(2 pi u2). For each trade k = 0, 1, ... five
    uniforms are consumed in order:

      dt_k = -ln(u) / arrival_rate             t_k = t_{k-1} + dt_k, t_{-1} = start_time
      p_k  = p_{k-1} exp(sigma_step z)          p_{-1} = initial_price
      v_k  = exp(volume_mu + volume_sigma z)
      C_k  = p_k v_k

    Timestamps are forced strictly increasing by bumping a tie to the next
    representable double.
*/
struct SimConfig
{
    std::size_t n_trades = 1000;
    std::uint64_t seed = 42;
    double start_time = 0.0;
    double initial_price = 1.0;
    double sigma_step = 0.01; ///< >= 0; 0 gives a constant price
    double volume_mu = 0.0;
    double volume_sigma = 1.0; ///< >= 0
    double arrival_rate = 1.0; ///< trades per second, > 0
};

/// Throws std::invalid_argument on an invalid config.
void check_config(SimConfig const& config);

TradeSeries simulate_trades(SimConfig const& config);

} // namespace vwm
