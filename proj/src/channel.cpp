#include "libnet/channel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "libnet/errors.hpp"

namespace libnet
{
double lambertian_order(double theta_h)
{
    if (!(theta_h > 0 && theta_h < std::numbers::pi / 2))
    {
        throw DomainError("half-power semi-angle must lie in (0, pi/2)");
    }
    // ln cos(t) = log1p(-2 sin^2(t/2)) keeps precision for small angles
    double const s = std::sin(theta_h / 2);
    double const log_cos = std::log1p(-2 * s * s);
    if (!(log_cos < 0))
    {
        throw DomainError("half-power semi-angle too small for a finite order");
    }
    return -std::numbers::ln2 / log_cos;
}

LambertianChannel::LambertianChannel(double theta_h, double height)
    : theta_h_(theta_h), m_(lambertian_order(theta_h)), beta_(m_ + 3), h_(height)
{
    if (!(height > 0) || !std::isfinite(height))
    {
        throw DomainError("balloon height must be positive and finite");
    }
}

void check_fov(double fov)
{
    if (!(fov > 0 && fov <= unbounded_fov))
    {
        throw DomainError("fov out of range: must lie in (0, pi/2]");
    }
}

double fov_radius(double h, double fov)
{
    check_fov(fov);
    if (fov == unbounded_fov)
        return std::numeric_limits<double>::infinity();
    return h * std::tan(fov);
}

int fov_gate(double horizontal_distance, double h, double fov)
{
    if (!(h > 0))
        throw DomainError("balloon height must be positive");
    return std::fabs(horizontal_distance) <= fov_radius(h, fov) ? 1 : 0;
}

double gated_interference(std::span<Point const> interferers,
                          LambertianChannel const& channel,
                          double fov)
{
    double const radius = fov_radius(channel.height(), fov);
    double total = 0;
    for (Point const& p : interferers)
    {
        double const d = p.distance();
        if (d <= radius)
            total += channel.path_gain(d);
    }
    return total;
}

SinrValue sinr_from_interference(double interference,
                                 LambertianChannel const& channel,
                                 Receiver const& rx)
{
    double const h = channel.height();
    if (!(rx.offset_z >= 0) || !(rx.noise_omega >= 0))
    {
        throw DomainError("receiver offset and noise must be non-negative");
    }
    if (rx.offset_z > rx.fov_radius(h))
    {
        throw DomainError("tagged balloon outside the receiver FOV radius");
    }
    double const numerator = channel.path_gain(rx.offset_z)
                             * fov_gate(rx.offset_z, h, rx.fov);
    double const denominator = interference + rx.noise_omega;
    if (denominator == 0)
    {
        return {numerator == 0 ? SinrValue::Kind::undefined
                               : SinrValue::Kind::infinite,
                std::numeric_limits<double>::infinity()};
    }
    return {SinrValue::Kind::finite, numerator / denominator};
}

SinrValue sinr(PointField const& field,
               LambertianChannel const& channel,
               Receiver const& rx)
{
    return sinr_from_interference(
        gated_interference(field.points, channel, rx.fov), channel, rx);
}

}  // namespace libnet
