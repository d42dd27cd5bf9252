#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "libnet/analytic.hpp"
#include "libnet/errors.hpp"
#include "libnet/quadrature.hpp"
#include "oracles/reference_values.hpp"

using namespace libnet;
using std::numbers::pi;

namespace
{
double rel_diff(double a, double b)
{
    return std::fabs(a - b) / std::max(std::fabs(b), 1e-300);
}

MeanInterferenceInputs baseline_1d()
{
    return {1, 1, 0, pi / 4, 4};
}

// Random valid inputs over the property-test ranges.
MeanInterferenceInputs random_inputs(std::mt19937_64& gen)
{
    std::uniform_real_distribution<double> u(0, 1);
    MeanInterferenceInputs in;
    in.lambda = 0.1 + 4.9 * u(gen);
    in.h = 0.5 + 19.5 * u(gen);
    in.beta = 3 + 7 * (1 - u(gen));
    in.theta_f = 0.1 + (pi / 2 - 0.1) * u(gen);
    in.z = 0.95 * in.h * std::tan(in.theta_f) * u(gen);
    return in;
}
}  // namespace

TEST_CASE("1D worked example matches the quadrature oracle")
{
    auto const r = mean_interference_1d(baseline_1d());
    CHECK_FALSE(r.empty_support);
    CHECK(rel_diff(r.value, oracle::mean1d_l1_h1_z0_pi4_b4) < 1e-12);
    auto const q = mean_interference_quadrature(baseline_1d(), 1);
    CHECK(rel_diff(q.value, oracle::mean1d_l1_h1_z0_pi4_b4) < 1e-10);
}

TEST_CASE("2D worked examples")
{
    MeanInterferenceInputs in{2, 1.5, 0.3, pi / 3, 5};
    CHECK(rel_diff(mean_interference_2d(in).value, oracle::mean2d_l2_h1p5_z0p3_pi3_b5) < 1e-12);
    CHECK(rel_diff(mean_interference_quadrature(in, 2).value,
                   oracle::mean2d_l2_h1p5_z0p3_pi3_b5)
          < 1e-10);

    MeanInterferenceInputs open{1, 1, 0, unbounded_fov, 4};
    CHECK(rel_diff(mean_interference_2d(open).value, pi / 3) < 1e-14);
    CHECK(rel_diff(mean_interference_quadrature(open, 2).value, pi / 3) < 1e-10);
}

TEST_CASE("zero intensity gives zero mean")
{
    auto in = baseline_1d();
    in.lambda = 0;
    CHECK(mean_interference_1d(in).value == 0);
    CHECK(mean_interference_2d(in).value == 0);
}

TEST_CASE("boundary z equal to the FOV radius gives exactly zero")
{
    for (double theta : {0.2, pi / 4, pi / 3, 1.4})
    {
        for (double h : {0.5, 1.0, 7.0})
        {
            MeanInterferenceInputs in{1.5, h, h * std::tan(theta), theta, 4.5};
            auto const a = mean_interference_1d(in);
            auto const b = mean_interference_2d(in);
            CHECK(std::fabs(a.value) <= 1e-12);
            CHECK(std::fabs(b.value) <= 1e-12);
            CHECK_FALSE(a.empty_support);
        }
    }
}

TEST_CASE("z beyond the FOV radius is clamped with a flag")
{
    MeanInterferenceInputs in{1, 1, 1.5, pi / 4, 4};
    auto const a = mean_interference_1d(in);
    auto const b = mean_interference_2d(in);
    CHECK(a.value == 0);
    CHECK(a.empty_support);
    CHECK(b.value == 0);
    CHECK(b.empty_support);
}

TEST_CASE("input validation")
{
    auto in = baseline_1d();
    in.lambda = -1;
    CHECK_THROWS_AS(mean_interference_1d(in), DomainError);
    in = baseline_1d();
    in.h = 0;
    CHECK_THROWS_AS(mean_interference_2d(in), DomainError);
    in = baseline_1d();
    in.beta = 1;
    CHECK_THROWS_AS(mean_interference_2d(in), DomainError);
    in = baseline_1d();
    in.theta_f = 0;
    CHECK_THROWS_AS(mean_interference_1d(in), DomainError);
    in.theta_f = 1.6;
    CHECK_THROWS_AS(mean_interference_1d(in), DomainError);
    in = baseline_1d();
    in.z = -0.1;
    CHECK_THROWS_AS(mean_interference_1d(in), DomainError);
}

TEST_CASE("two-sided 1D doubles the one-sided value")
{
    auto in = baseline_1d();
    in.z = 0.3;
    auto const one = mean_interference_1d(in, Sides::one_sided).value;
    auto const two = mean_interference_1d(in, Sides::two_sided).value;
    CHECK(rel_diff(two, 2 * one) < 1e-15);
}

TEST_CASE("1D unbounded FOV uses the full half line")
{
    MeanInterferenceInputs in{1, 1, 0, unbounded_fov, 4};
    // int_0^inf (x^2+1)^-4 dx = 5 pi / 32
    CHECK(rel_diff(mean_interference_1d(in).value, 5 * pi / 32) < 1e-13);
}

TEST_CASE("campbell integral examples")
{
    auto const one = [](double) { return 1.0; };
    auto const zero = [](double) { return 0.0; };
    auto const kernel = [](double x) { return 1 / (x * x + 1); };
    CHECK(campbell_integral(zero, kernel, Region::interval(0, 1)).value == 0);
    CHECK(rel_diff(campbell_integral(one, kernel, Region::interval(0, 1)).value, pi / 4)
          < 1e-12);
    // polar reduction: 2 pi int_0^1 r dr = pi
    CHECK(rel_diff(campbell_integral(one, one, Region::annulus(0, 1)).value, pi) < 1e-12);
    auto const planar = campbell_integral_planar(
        [](double, double) { return 2.0; },
        [](double x, double y) { return x * y; },
        Region::rectangle(0, 1, 0, 2));
    CHECK(rel_diff(planar.value, 2) < 1e-12);
}

TEST_CASE("closed forms agree with quadrature on random inputs")
{
    std::mt19937_64 gen(20240601);
    for (int i = 0; i < 100; ++i)
    {
        auto const in = random_inputs(gen);
        CAPTURE(in.lambda);
        CAPTURE(in.h);
        CAPTURE(in.z);
        CAPTURE(in.theta_f);
        CAPTURE(in.beta);
        CHECK(rel_diff(mean_interference_1d(in).value,
                       mean_interference_quadrature(in, 1).value)
              < 1e-8);
        CHECK(rel_diff(mean_interference_2d(in).value,
                       mean_interference_quadrature(in, 2).value)
              < 1e-8);
    }
}

TEST_CASE("monotonicity in lambda, theta_f and z")
{
    std::mt19937_64 gen(99);
    for (int i = 0; i < 50; ++i)
    {
        auto const in = random_inputs(gen);
        for (int dim : {1, 2})
        {
            auto const eval = [dim](MeanInterferenceInputs const& x) {
                return dim == 1 ? mean_interference_1d(x).value
                                : mean_interference_2d(x).value;
            };
            double const base = eval(in);
            auto more = in;
            more.lambda *= 1.3;
            CHECK(eval(more) >= base);
            auto wider = in;
            wider.theta_f = std::min(pi / 2, in.theta_f + 0.05);
            CHECK(eval(wider) >= base);
            auto farther = in;
            farther.z *= 1.1;
            CHECK(eval(farther) <= base);
        }
    }
}

TEST_CASE("laplace functional trivial values")
{
    LambertianChannel const ch(pi / 3, 1);
    auto const support = Region::interval(0, 1);
    CHECK(laplace_functional(0, 1, ch, support) == 1);
    CHECK(laplace_functional(3, 0, ch, support) == 1);
    CHECK_THROWS_AS(laplace_functional(-1, 1, ch, support), DomainError);
}

TEST_CASE("laplace functional matches frozen oracle on the 1D baseline")
{
    LambertianChannel const ch(pi / 3, 1);
    auto const support = Region::interval(0, 1);
    CHECK(rel_diff(laplace_functional(0.1, 1, ch, support), oracle::laplace1d_baseline_s0p1)
          < 1e-10);
    CHECK(rel_diff(laplace_functional(1, 1, ch, support), oracle::laplace1d_baseline_s1) < 1e-10);
    CHECK(rel_diff(laplace_functional(10, 1, ch, support), oracle::laplace1d_baseline_s10)
          < 1e-10);
}

TEST_CASE("laplace functional is non-increasing and obeys the mean bound")
{
    LambertianChannel const ch(pi / 3, 1.2);
    for (auto const& support : {Region::interval(0.1, 2), Region::annulus(0.1, 2)})
    {
        MeanInterferenceInputs in{0.8, 1.2, 0.1, std::atan(2 / 1.2), ch.beta()};
        double const mean = support.dimension() == 1 ? mean_interference_1d(in).value
                                                     : mean_interference_2d(in).value;
        double prev = 1;
        for (double s : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 20.0, 100.0})
        {
            double const l = laplace_functional(s, 0.8, ch, support);
            CHECK(l <= prev);
            CHECK(l > 0);
            CHECK(1 - l <= s * mean * (1 + 1e-12));
            prev = l;
        }
    }
}

TEST_CASE("laplace slope at zero recovers the mean")
{
    LambertianChannel const ch(pi / 3, 1);
    CHECK(rel_diff(laplace_slope_at_zero(1, ch, Region::interval(0, 1)),
                   mean_interference_1d(baseline_1d()).value)
          < 1e-4);
    LambertianChannel const ch2(0.7, 1.5);
    MeanInterferenceInputs in{2, 1.5, 0.3, pi / 3, ch2.beta()};
    CHECK(rel_diff(laplace_slope_at_zero(2, ch2, Region::annulus(0.3, 1.5 * std::tan(pi / 3))),
                   mean_interference_2d(in).value)
          < 1e-4);
}
