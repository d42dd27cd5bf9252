#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "libnet/analytic.hpp"
#include "libnet/errors.hpp"
#include "libnet/montecarlo.hpp"

using namespace libnet;
using std::numbers::pi;

namespace
{
// theta_h = 60 deg gives m = 1, beta = 4
McConfig make_config(int dim, double lambda, double h, double z, double theta_f,
                     std::uint64_t trials, std::uint64_t seed = 7)
{
    McConfig cfg;
    cfg.scenario.dimension = dim;
    cfg.scenario.channel = LambertianChannel(pi / 3, h);
    cfg.scenario.rx = Receiver{theta_f, z, 0.1};
    cfg.scenario.lambda = lambda;
    cfg.trials = trials;
    cfg.seed = seed;
    return cfg;
}

double rel_diff(double a, double b)
{
    return std::fabs(a - b) / std::fabs(b);
}
}  // namespace

TEST_CASE("compare examples")
{
    EmpiricalResult e;
    e.mean = 1.001;
    e.std_error = 0.001;
    auto v = compare(1.0, e);
    CHECK(v.pass);
    CHECK(v.z_score == doctest::Approx(1.0).epsilon(1e-9));

    e.mean = 1.010;
    v = compare(1.0, e);
    CHECK_FALSE(v.pass);
    CHECK(v.z_score == doctest::Approx(10.0).epsilon(1e-9));

    e.mean = 0;
    e.std_error = 0;
    v = compare(0, e);
    CHECK(v.pass);
    CHECK(v.z_score == 0);

    e.mean = 1e-3;
    CHECK_FALSE(compare(0, e).pass);
    CHECK(compare(0, e, 2e-3).pass);
}

TEST_CASE("empirical result interval is mean +/- 1.96 se")
{
    auto const r = make_result(2, 4, 100, SamplingMode::support_sampling);
    CHECK(r.std_error == doctest::Approx(0.2));
    CHECK(r.ci_lo == doctest::Approx(2 - 1.96 * 0.2));
    CHECK(r.ci_hi == doctest::Approx(2 + 1.96 * 0.2));
}

TEST_CASE("zero intensity gives mean 0 and std error 0")
{
    for (int dim : {1, 2})
    {
        auto const r = empirical_mean_interference(make_config(dim, 0, 1, 0, pi / 4, 500));
        CHECK(r.mean == 0);
        CHECK(r.std_error == 0);
        CHECK(r.trials == 500);
    }
}

TEST_CASE("sequential and parallel runs agree")
{
    for (int dim : {1, 2})
    {
        auto cfg = make_config(dim, 1.5, 1, 0.2, pi / 3, 20000);
        cfg.execution = Execution::sequential;
        auto const a = interference_samples(cfg);
        auto const ra = empirical_mean_interference(cfg);
        cfg.execution = Execution::parallel;
        auto const b = interference_samples(cfg);
        auto const rb = empirical_mean_interference(cfg);
        CHECK(a == b);
        CHECK(rel_diff(rb.mean, ra.mean) <= 1e-12);
        CHECK(rel_diff(rb.std_error, ra.std_error) <= 1e-12);
    }
}

TEST_CASE("identical seed and trials reproduce the result bit for bit")
{
    auto cfg = make_config(2, 1, 1, 0.1, pi / 4, 5000, 1234);
    cfg.execution = Execution::sequential;
    auto const a = empirical_mean_interference(cfg);
    auto const b = empirical_mean_interference(cfg);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    cfg.seed = 1235;
    CHECK(empirical_mean_interference(cfg).mean != a.mean);
}

TEST_CASE("1D baseline covers the closed form")
{
    auto const cfg = make_config(1, 1, 1, 0, pi / 4, 200000);
    auto const ref = analytic_reference(cfg);
    auto const emp = empirical_mean_interference(cfg);
    CHECK(rel_diff(ref.value, mean_interference_1d({1, 1, 0, pi / 4, 4}).value) < 1e-14);
    CHECK(compare(ref.value, emp).pass);
}

TEST_CASE("2D unbounded FOV truncated at r_max = 50")
{
    auto cfg = make_config(2, 1, 1, 0, unbounded_fov, 4000);
    cfg.truncation_radius = 50;
    auto const plan = plan_sampling(cfg);
    CHECK(plan.truncated);
    CHECK(plan.outer_radius == 50);
    auto const ref = analytic_reference(cfg);
    CHECK(rel_diff(ref.value, pi / 3) < 1e-14);
    double const tail = pi * std::pow(50.0 * 50 + 1, -3.0) / 3;
    CHECK(rel_diff(ref.tail_bound, tail) < 1e-10);
    CHECK(ref.tail_bound < 1e-6);
    auto const emp = empirical_mean_interference(cfg);
    CHECK(compare(ref.value, emp, ref.tail_bound).pass);
}

TEST_CASE("automatic truncation keeps the tail below 1e-6 of the mean")
{
    for (int dim : {1, 2})
    {
        auto const cfg = make_config(dim, 1, 2, 0.5, unbounded_fov, 10);
        auto const ref = analytic_reference(cfg);
        CHECK(ref.tail_bound <= 1e-6 * ref.value);
        CHECK(ref.tail_bound > 0);
    }
}

TEST_CASE("full-region filtering")
{
    SUBCASE("1D at z = 0 covers twice the one-sided value")
    {
        auto cfg = make_config(1, 1, 1, 0, pi / 4, 100000);
        cfg.mode = SamplingMode::full_region_filtering;
        auto const one_sided = mean_interference_1d({1, 1, 0, pi / 4, 4}).value;
        auto const emp = empirical_mean_interference(cfg);
        CHECK(compare(2 * one_sided, emp).pass);
        CHECK(rel_diff(analytic_reference(cfg).value, 2 * one_sided) < 1e-14);
    }
    SUBCASE("2D matches support sampling's closed form")
    {
        auto cfg = make_config(2, 0.5, 1, 0.3, pi / 4, 100000);
        cfg.mode = SamplingMode::full_region_filtering;
        auto const analytic = mean_interference_2d({0.5, 1, 0.3, pi / 4, 4}).value;
        CHECK(compare(analytic, empirical_mean_interference(cfg)).pass);
    }
}

TEST_CASE("unbiased over seeds and configurations")
{
    struct Geometry
    {
        int dim;
        double lambda, h, z, theta_f;
    };
    std::vector<Geometry> const grid{
        {1, 1, 1, 0, pi / 4},      {1, 2, 0.8, 0.3, pi / 3},  {1, 0.5, 1.5, 0, 1.2},
        {1, 3, 1, 0.5, 0.9},       {1, 1, 2, 1, 1.0},         {2, 1, 1, 0, pi / 4},
        {2, 0.5, 1, 0.2, pi / 3},  {2, 2, 0.7, 0.1, 0.8},     {2, 0.3, 1.2, 0, 1.1},
        {2, 1, 1, 0.5, 1.0},
    };
    int failures = 0;
    int runs = 0;
    for (auto const& g : grid)
    {
        for (std::uint64_t seed = 1; seed <= 50; ++seed)
        {
            auto const cfg = make_config(g.dim, g.lambda, g.h, g.z, g.theta_f, 10000, seed);
            auto const ref = analytic_reference(cfg);
            failures += compare(ref.value, empirical_mean_interference(cfg)).pass ? 0 : 1;
            ++runs;
        }
    }
    CAPTURE(failures);
    CHECK(static_cast<double>(failures) / runs <= 0.01);
}

TEST_CASE("empirical laplace")
{
    auto const cfg = make_config(1, 1, 1, 0, pi / 4, 100000);
    std::vector<double> const s{0, 0.1, 1, 10};
    auto const emp = empirical_laplace(cfg, s);
    REQUIRE(emp.size() == 4);
    CHECK(emp[0].mean == 1);
    CHECK(emp[0].std_error == 0);
    auto const support = Region::interval(0, 1);
    for (std::size_t k = 1; k < s.size(); ++k)
    {
        double const analytic = laplace_functional(s[k], 1, cfg.scenario.channel, support);
        CHECK(compare(analytic, emp[k]).pass);
    }

    auto const none = empirical_laplace(make_config(2, 0, 1, 0, pi / 4, 100), s);
    for (auto const& r : none)
        CHECK(r.mean == 1);
}

TEST_CASE("laplace slope at zero matches the empirical mean")
{
    auto const cfg = make_config(2, 1, 1, 0.2, pi / 3, 50000);
    auto const samples = interference_samples(cfg);
    auto const mean = summarize(samples, cfg);
    double const s = 1e-6;
    std::vector<double> const sv{s};
    auto const l = empirical_laplace(samples, cfg, sv).front();
    double const slope = (1 - l.mean) / s;
    double const slope_se = l.std_error / s;
    CHECK(std::fabs(slope - mean.mean) <= 3 * (mean.std_error + slope_se));
}

TEST_CASE("SINR examples")
{
    SUBCASE("no interferers with unit noise")
    {
        auto cfg = make_config(1, 0, 1, 0, pi / 4, 1000);
        cfg.scenario.rx.noise_omega = 1;
        std::vector<double> const t{0.5, 2};
        auto const s = sinr_samples(cfg, t);
        CHECK(s.infinite_count == 0);
        CHECK(s.mean_finite_gamma == 1);
        REQUIRE(s.coverage.size() == 2);
        CHECK(s.coverage[0].probability == 1);
        CHECK(s.coverage[1].probability == 0);
        for (auto const& g : s.gamma)
            CHECK(g.value == 1);
    }
    SUBCASE("injected interferer at d = 1 with zero noise")
    {
        auto cfg = make_config(1, 1, 1, 0, pi / 3, 200);
        cfg.scenario.rx.noise_omega = 0;
        cfg.injected = std::vector<Point>{{1, 0}};
        auto const s = sinr_samples(cfg, {});
        CHECK(s.infinite_count == 0);
        for (auto const& g : s.gamma)
            CHECK(g.value == doctest::Approx(16).epsilon(1e-14));
        CHECK(s.mean_finite_gamma == doctest::Approx(16).epsilon(1e-14));
    }
    SUBCASE("zero noise with a random field needs the opt-in")
    {
        auto cfg = make_config(1, 0.5, 1, 0, pi / 4, 1000);
        cfg.scenario.rx.noise_omega = 0;
        CHECK_THROWS_AS(sinr_samples(cfg, {}), DomainError);
        auto const s = sinr_samples(cfg, std::vector<double>{1.0}, true);
        CHECK(s.infinite_count > 0);
        CHECK(s.infinite_fraction() == doctest::Approx(std::exp(-0.5)).epsilon(0.1));
    }
    SUBCASE("tagged balloon outside the FOV")
    {
        auto cfg = make_config(1, 1, 1, 2, pi / 4, 10);
        CHECK_THROWS_AS(sinr_samples(cfg, {}), DomainError);
    }
}

TEST_CASE("SINR denominator mean is noise plus mean interference")
{
    auto cfg = make_config(2, 0.5, 1, 0.2, pi / 3, 100000);
    cfg.scenario.rx.noise_omega = 0.1;
    auto const s = sinr_samples(cfg, {});
    auto const emp = empirical_mean_interference(cfg);
    CHECK(rel_diff(s.denominator.mean, 0.1 + emp.mean) <= 1e-12);
    double const analytic = mean_interference_2d({0.5, 1, 0.2, pi / 3, 4}).value;
    CHECK(compare(0.1 + analytic, s.denominator).pass);
}

TEST_CASE("sampler cap propagates")
{
    auto cfg = make_config(2, 1000, 1, 0, pi / 3, 10);
    cfg.max_expected_points = 100;
    CHECK_THROWS_AS(empirical_mean_interference(cfg), CapacityError);
}
