#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <variant>

#include "libnet/region.hpp"
#include "libnet/rng.hpp"

namespace libnet::detail
{
//---------------------------------------------------------------------------//
/*!
 * Draw one PPP realization, handing each point to `emit`.
 *
 * Shared by sample_ppp and the Monte Carlo kernels so both consume a
 * realization's stream identically. `count_dist` is copied so no state
 * carries over between realizations.
 */
template<class Emit>
void draw_ppp(Region const& region,
              std::poisson_distribution<std::uint64_t> const* count_dist,
              Xoshiro256& rng,
              Emit&& emit)
{
    if (!count_dist)
        return;
    auto dist = *count_dist;
    std::uint64_t const n = dist(rng);

    std::visit(
        [&](auto const& s) {
            using S = std::decay_t<decltype(s)>;
            for (std::uint64_t i = 0; i < n; ++i)
            {
                if constexpr (std::is_same_v<S, Interval>)
                {
                    double const x = s.a + rng.uniform() * (s.b - s.a);
                    emit(Point{std::min(x, s.b), 0});
                }
                else if constexpr (std::is_same_v<S, Annulus>)
                {
                    double const lo2 = s.r_min * s.r_min;
                    double const span2 = (s.r_max - s.r_min) * (s.r_max + s.r_min);
                    double const r = std::min(
                        std::sqrt(lo2 + rng.uniform() * span2), s.r_max);
                    double const phi = 2 * std::numbers::pi * rng.uniform();
                    emit(Point{r * std::cos(phi), r * std::sin(phi)});
                }
                else
                {
                    double const x = s.x0 + rng.uniform() * (s.x1 - s.x0);
                    double const y = s.y0 + rng.uniform() * (s.y1 - s.y0);
                    emit(Point{std::min(x, s.x1), std::min(y, s.y1)});
                }
            }
        },
        region.shape());
}

}  // namespace libnet::detail
