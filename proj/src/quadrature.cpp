#include "libnet/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "libnet/errors.hpp"

namespace libnet
{
namespace
{
constexpr unsigned max_depth = 30;
}

QuadResult integrate(RadialFn const& f, double a, double b, QuadTolerance tol)
{
    if (a == b)
        return {};
    if (std::isinf(b))
    {
        // finite head [a, c], tail x = c / t over (0, 1]
        double const c = std::max(2 * std::fabs(a), 1.0);
        auto head = integrate(f, a, c, tol);
        auto tail = integrate([&](double t) { return f(c / t) * c / (t * t); }, 0, 1, tol);
        return {head.value + tail.value, head.error_estimate + tail.error_estimate};
    }
    double error = 0;
    double l1 = 0;
    double const value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, a, b, max_depth, tol.rel, &error, &l1);
    if (!std::isfinite(value) || error > std::max(tol.abs, tol.rel * l1))
    {
        throw ConvergenceError("adaptive quadrature did not reach its tolerance",
                               error);
    }
    return {value, error};
}

QuadResult campbell_integral(RadialFn const& intensity,
                             RadialFn const& kernel,
                             Region const& support,
                             QuadTolerance tol)
{
    if (auto const* s = std::get_if<Interval>(&support.shape()))
    {
        return integrate([&](double x) { return intensity(x) * kernel(x); },
                         s->a, s->b, tol);
    }
    if (auto const* s = std::get_if<Annulus>(&support.shape()))
    {
        auto radial = integrate(
            [&](double r) { return r == 0 ? 0.0 : intensity(r) * kernel(r) * r; },
            s->r_min, s->r_max, tol);
        constexpr double two_pi = 2 * std::numbers::pi;
        return {two_pi * radial.value, two_pi * radial.error_estimate};
    }
    throw DomainError("radial Campbell integral needs an interval or annulus support");
}

QuadResult campbell_integral_planar(PlanarFn const& intensity,
                                    PlanarFn const& kernel,
                                    Region const& support,
                                    QuadTolerance tol)
{
    // Inner integrals run tighter so their error does not dominate the outer.
    QuadTolerance const inner{tol.rel * 0.1, tol.abs * 0.1};
    double inner_error = 0;
    QuadResult outer;
    if (auto const* s = std::get_if<Annulus>(&support.shape()))
    {
        outer = integrate(
            [&](double phi) {
                double const c = std::cos(phi);
                double const sn = std::sin(phi);
                auto r = integrate(
                    [&](double rr) {
                        return intensity(rr * c, rr * sn) * kernel(rr * c, rr * sn) * rr;
                    },
                    s->r_min, s->r_max, inner);
                inner_error = std::max(inner_error, r.error_estimate);
                return r.value;
            },
            0, 2 * std::numbers::pi, tol);
        outer.error_estimate += 2 * std::numbers::pi * inner_error;
        return outer;
    }
    if (auto const* s = std::get_if<Rectangle>(&support.shape()))
    {
        outer = integrate(
            [&](double y) {
                auto r = integrate(
                    [&](double x) { return intensity(x, y) * kernel(x, y); },
                    s->x0, s->x1, inner);
                inner_error = std::max(inner_error, r.error_estimate);
                return r.value;
            },
            s->y0, s->y1, tol);
        outer.error_estimate += (s->y1 - s->y0) * inner_error;
        return outer;
    }
    throw DomainError("planar Campbell integral needs an annulus or rectangle support");
}

}  // namespace libnet
