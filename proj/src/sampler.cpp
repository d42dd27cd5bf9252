#include "libnet/sampler.hpp"

#include <optional>
#include <ostream>
#include <random>

#include "libnet/csv.hpp"
#include "libnet/errors.hpp"
#include "ppp_stream.hpp"

namespace libnet
{
double expected_count(Region const& region, double lambda)
{
    if (!(lambda >= 0))
        throw DomainError("intensity must be non-negative");
    return lambda == 0 ? 0 : lambda * region.measure();
}

PointField sample_ppp(Region const& region,
                      double lambda,
                      std::uint64_t seed,
                      std::uint64_t index,
                      double max_expected_points)
{
    double const mean = expected_count(region, lambda);
    if (!std::isfinite(mean))
        throw DomainError("cannot sample an unbounded region");
    if (mean > max_expected_points)
    {
        throw CapacityError("expected point count exceeds the sampler cap");
    }

    PointField field;
    field.dimension = region.dimension();
    field.region = region;
    field.seed_info = {seed, index};

    Xoshiro256 rng(seed, index);
    std::optional<std::poisson_distribution<std::uint64_t>> dist;
    if (mean > 0)
        dist.emplace(mean);
    detail::draw_ppp(region, dist ? &*dist : nullptr, rng,
                     [&](Point p) { field.points.push_back(p); });
    return field;
}

void write_field_csv(std::ostream& os, PointField const& field)
{
    os << (field.dimension == 1 ? "x\n" : "x,y\n");
    for (Point const& p : field.points)
    {
        os << format_real(p.x);
        if (field.dimension == 2)
            os << ',' << format_real(p.y);
        os << '\n';
    }
}

}  // namespace libnet
