#include "libnet/region.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "libnet/errors.hpp"

namespace libnet
{
namespace
{
template<class... Ts>
struct Overloaded : Ts...
{
    using Ts::operator()...;
};

bool is_lower_edge(double v)
{
    return std::isfinite(v);
}

bool is_upper_edge(double v)
{
    return !std::isnan(v) && v != -std::numeric_limits<double>::infinity();
}
}  // namespace

Region Region::interval(double a, double b)
{
    if (!is_lower_edge(a) || !is_upper_edge(b) || !(a < b))
        throw DomainError("interval requires finite a < b");
    return Region{Interval{a, b}};
}

Region Region::annulus(double r_min, double r_max)
{
    if (!is_lower_edge(r_min) || !is_upper_edge(r_max)
        || !(0 <= r_min && r_min < r_max))
    {
        throw DomainError("annulus requires 0 <= r_min < r_max");
    }
    return Region{Annulus{r_min, r_max}};
}

Region Region::rectangle(double x0, double x1, double y0, double y1)
{
    if (!std::isfinite(x0) || !std::isfinite(x1) || !std::isfinite(y0)
        || !std::isfinite(y1) || !(x0 < x1) || !(y0 < y1))
    {
        throw DomainError("rectangle requires finite x0 < x1 and y0 < y1");
    }
    return Region{Rectangle{x0, x1, y0, y1}};
}

int Region::dimension() const
{
    return std::holds_alternative<Interval>(shape_) ? 1 : 2;
}

double Region::measure() const
{
    return std::visit(
        Overloaded{
            [](Interval const& s) { return s.b - s.a; },
            [](Annulus const& s) {
                // (r_max - r_min)(r_max + r_min) avoids squaring cancellation
                return std::numbers::pi * (s.r_max - s.r_min) * (s.r_max + s.r_min);
            },
            [](Rectangle const& s) { return (s.x1 - s.x0) * (s.y1 - s.y0); },
        },
        shape_);
}

bool Region::contains(Point p) const
{
    return std::visit(
        Overloaded{
            [&](Interval const& s) {
                return p.y == 0 && s.a <= p.x && p.x <= s.b;
            },
            [&](Annulus const& s) {
                // polar sampling rounds (r, phi) -> (x, y); allow a few ulps
                constexpr double slack = 1e-14;
                double const r = p.distance();
                return s.r_min * (1 - slack) <= r && r <= s.r_max * (1 + slack);
            },
            [&](Rectangle const& s) {
                return s.x0 <= p.x && p.x <= s.x1 && s.y0 <= p.y && p.y <= s.y1;
            },
        },
        shape_);
}

}  // namespace libnet
