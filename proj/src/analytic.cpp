#include "libnet/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "libnet/errors.hpp"
#include "libnet/hyp2f1.hpp"

namespace libnet
{
namespace
{
constexpr double inf = std::numeric_limits<double>::infinity();

// G(x) = int_0^x (t^2 + h^2)^-beta dt
double head_integral(double x, double h, double beta)
{
    if (x == 0)
        return 0;
    if (std::isinf(x))
    {
        double const ratio = std::tgamma(beta - 0.5) / std::tgamma(beta);
        return std::pow(h, 1 - 2 * beta) * std::sqrt(std::numbers::pi) * ratio / 2;
    }
    double const q = x / h;
    return x * std::pow(h, -2 * beta) * hyp2f1({0.5, beta, 1.5, -q * q});
}

// T(x) = int_x^inf (t^2 + h^2)^-beta dt, for x >= h
double tail_integral(double x, double h, double beta)
{
    if (std::isinf(x))
        return 0;
    double const q = h / x;
    return std::pow(x, 1 - 2 * beta) / (2 * beta - 1)
           * hyp2f1({beta, beta - 0.5, beta + 0.5, -q * q});
}
}  // namespace

void validate(MeanInterferenceInputs const& in)
{
    if (!(in.lambda >= 0) || !std::isfinite(in.lambda))
        throw DomainError("intensity must be finite and non-negative");
    if (!(in.h > 0) || !std::isfinite(in.h))
        throw DomainError("balloon height must be positive and finite");
    if (!(in.z >= 0) || !std::isfinite(in.z))
        throw DomainError("receiver offset z must be finite and non-negative");
    check_fov(in.theta_f);
    if (!(in.beta > 1) || !std::isfinite(in.beta))
        throw DomainError("interference exponent beta must exceed 1");
}

double interval_interference_1d(double lambda, double h, double beta,
                                double r_lo, double r_hi)
{
    if (!(r_hi > r_lo) || lambda == 0)
        return 0;
    double integral = 0;
    if (r_lo >= h)
        integral = tail_integral(r_lo, h, beta) - tail_integral(r_hi, h, beta);
    else
        integral = head_integral(r_hi, h, beta) - head_integral(r_lo, h, beta);
    return lambda * integral;
}

double annulus_interference_2d(double lambda, double h, double beta,
                               double r_lo, double r_hi)
{
    if (!(r_hi > r_lo) || lambda == 0)
        return 0;
    double const base = h * h + r_lo * r_lo;
    double const scale = std::numbers::pi / (beta - 1) * std::pow(base, 1 - beta);
    if (std::isinf(r_hi))
        return lambda * scale;
    // (h^2 + r_hi^2) / base = 1 + q, with q formed without cancellation
    double const q = (r_hi - r_lo) * (r_hi + r_lo) / base;
    return lambda * scale * -std::expm1((1 - beta) * std::log1p(q));
}

MeanInterference mean_interference_1d(MeanInterferenceInputs const& in, Sides sides)
{
    validate(in);
    double const radius = fov_radius(in.h, in.theta_f);
    if (in.z > radius)
        return {0, true};
    double value = interval_interference_1d(in.lambda, in.h, in.beta, in.z, radius);
    if (sides == Sides::two_sided)
        value *= 2;
    return {value, false};
}

MeanInterference mean_interference_2d(MeanInterferenceInputs const& in)
{
    validate(in);
    double const radius = fov_radius(in.h, in.theta_f);
    if (in.z > radius)
        return {0, true};
    return {annulus_interference_2d(in.lambda, in.h, in.beta, in.z, radius), false};
}

QuadResult mean_interference_quadrature(MeanInterferenceInputs const& in,
                                        int dimension,
                                        QuadTolerance tol)
{
    validate(in);
    if (dimension != 1 && dimension != 2)
        throw DomainError("dimension must be 1 or 2");
    double const radius = fov_radius(in.h, in.theta_f);
    if (!(radius > in.z) || in.lambda == 0)
        return {};
    double const h2 = in.h * in.h;
    auto intensity = [&](double) { return in.lambda; };
    auto kernel = [&](double x) { return std::pow(x * x + h2, -in.beta); };
    if (dimension == 2 && std::isinf(radius))
    {
        // u = r^2 + h^2 = u0 / t maps [z, inf) onto (0, 1]
        double const u0 = in.z * in.z + h2;
        auto mapped = [&](double t) {
            double const r = std::sqrt(std::max(0.0, u0 / t - h2));
            return in.lambda * kernel(r) * u0 / (2 * t * t);
        };
        auto r = integrate(mapped, 0, 1, tol);
        constexpr double two_pi = 2 * std::numbers::pi;
        return {two_pi * r.value, two_pi * r.error_estimate};
    }
    Region const support = dimension == 1 ? Region::interval(in.z, radius)
                                          : Region::annulus(in.z, radius);
    return campbell_integral(intensity, kernel, support, tol);
}

//---------------------------------------------------------------------------//
namespace
{
// Lambda * int_S (1 - exp(-s f)), valid for any real s on integrable f.
double laplace_exponent(double s, double lambda, LambertianChannel const& channel,
                        Region const& support, QuadTolerance tol)
{
    if (s == 0 || lambda == 0)
        return 0;
    if (support.dimension() == 1 || std::holds_alternative<Annulus>(support.shape()))
    {
        auto kernel = [&](double x) { return -std::expm1(-s * channel.path_gain(x)); };
        return campbell_integral([&](double) { return lambda; }, kernel, support, tol)
            .value;
    }
    auto kernel = [&](double x, double y) {
        return -std::expm1(-s * channel.path_gain(std::hypot(x, y)));
    };
    return campbell_integral_planar([&](double, double) { return lambda; }, kernel,
                                    support, tol)
        .value;
}

double nearest_distance(Region const& support)
{
    return std::visit(
        [](auto const& s) -> double {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, Interval>)
                return (s.a <= 0 && 0 <= s.b) ? 0 : std::min(std::fabs(s.a), std::fabs(s.b));
            else if constexpr (std::is_same_v<S, Annulus>)
                return s.r_min;
            else
            {
                double const dx = (s.x0 <= 0 && 0 <= s.x1) ? 0 : std::min(std::fabs(s.x0), std::fabs(s.x1));
                double const dy = (s.y0 <= 0 && 0 <= s.y1) ? 0 : std::min(std::fabs(s.y0), std::fabs(s.y1));
                return std::hypot(dx, dy);
            }
        },
        support.shape());
}
}  // namespace

double laplace_functional(double s,
                          double lambda,
                          LambertianChannel const& channel,
                          Region const& support,
                          QuadTolerance tol)
{
    if (!(s >= 0))
        throw DomainError("Laplace variable s must be non-negative");
    if (!(lambda >= 0))
        throw DomainError("intensity must be non-negative");
    return std::exp(-laplace_exponent(s, lambda, channel, support, tol));
}

double laplace_slope_at_zero(double lambda,
                             LambertianChannel const& channel,
                             Region const& support,
                             double delta)
{
    if (!(delta > 0))
        throw DomainError("difference step must be positive");
    double const step = delta / channel.path_gain(nearest_distance(support));
    QuadTolerance const tol{1e-14, 0};
    double const up = -laplace_exponent(-step, lambda, channel, support, tol);
    double const down = -laplace_exponent(step, lambda, channel, support, tol);
    // exp(up) - exp(down) without cancellation
    return 2 * std::exp((up + down) / 2) * std::sinh((up - down) / 2) / (2 * step);
}

}  // namespace libnet
