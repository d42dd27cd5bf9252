#pragma once

#include <functional>

#include "region.hpp"

namespace libnet
{
//---------------------------------------------------------------------------//
//! Convergence target: error <= max(abs, rel * integral of |f|).
struct QuadTolerance
{
    double rel{1e-10};
    double abs{1e-12};
};

struct QuadResult
{
    double value{0};
    double error_estimate{0};
};

using RadialFn = std::function<double(double)>;
using PlanarFn = std::function<double(double, double)>;

/*!
 * Adaptive Gauss-Kronrod (61-point) integral of f over [a, b].
 *
 * b may be +inf: [a, c] is integrated directly and the tail through
 * x = c / t on (0, 1], with c = max(2|a|, 1). Throws ConvergenceError
 * carrying the achieved error estimate when the tolerance is not met at
 * maximum depth.
 */
QuadResult integrate(RadialFn const& f, double a, double b, QuadTolerance tol = {});

/*!
 * Mean of a shot-noise sum over a Poisson process (Campbell's theorem).
 *
 * \f[ E\Big[\sum_{x\in\psi} f(x)\Big] = \int_S \lambda(x) f(x)\, dx \f]
 *
 * For an interval support the functions take the coordinate x. For an
 * annulus they take the radius r and the integral is polar-reduced to
 * \f$ 2\pi \int \lambda(r) f(r)\, r\, dr \f$, i.e. both must be radially
 * symmetric. Rectangles need campbell_integral_planar.
 */
QuadResult campbell_integral(RadialFn const& intensity,
                             RadialFn const& kernel,
                             Region const& support,
                             QuadTolerance tol = {});

//! Nested planar version over an annulus (polar) or rectangle.
QuadResult campbell_integral_planar(PlanarFn const& intensity,
                                    PlanarFn const& kernel,
                                    Region const& support,
                                    QuadTolerance tol = {});

}  // namespace libnet
