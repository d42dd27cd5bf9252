#include "libnet/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "libnet/analytic.hpp"
#include "libnet/errors.hpp"
#include "libnet/kernels.hpp"
#include "libnet/summation.hpp"
#include "ppp_stream.hpp"

namespace libnet
{
namespace
{
constexpr double inf = std::numeric_limits<double>::infinity();

//! Full-region box half-width relative to a finite gate radius
constexpr double full_region_margin = 1.25;

//! Relative tail mass tolerated by automatic truncation
constexpr double auto_truncation_tail = 1e-6;

double kernel_integral(int dimension, double h, double beta, double lo, double hi)
{
    return dimension == 1 ? interval_interference_1d(1, h, beta, lo, hi)
                          : annulus_interference_2d(1, h, beta, lo, hi);
}

double auto_truncation_radius(int dimension, double h, double beta, double z)
{
    double const total = kernel_integral(dimension, h, beta, z, inf);
    double r = 2 * std::max(h, z);
    while (kernel_integral(dimension, h, beta, r, inf) > auto_truncation_tail * total)
        r *= 1.5;
    return r;
}

void check_config(McConfig const& cfg)
{
    auto const& sc = cfg.scenario;
    if (sc.dimension != 1 && sc.dimension != 2)
        throw DomainError("dimension must be 1 or 2");
    if (!(sc.lambda >= 0) || !std::isfinite(sc.lambda))
        throw DomainError("intensity must be finite and non-negative");
    if (!(sc.rx.offset_z >= 0) || !std::isfinite(sc.rx.offset_z))
        throw DomainError("receiver offset z must be finite and non-negative");
    if (!(sc.rx.noise_omega >= 0))
        throw DomainError("noise power must be non-negative");
    check_fov(sc.rx.fov);
    if (cfg.trials < 1)
        throw DomainError("trials must be at least 1");
}
}  // namespace

std::string_view to_string(SamplingMode mode)
{
    return mode == SamplingMode::support_sampling ? "support_sampling"
                                                  : "full_region_filtering";
}

std::optional<SamplingMode> parse_sampling_mode(std::string_view s)
{
    if (s == "support_sampling")
        return SamplingMode::support_sampling;
    if (s == "full_region_filtering")
        return SamplingMode::full_region_filtering;
    return std::nullopt;
}

//---------------------------------------------------------------------------//
SamplingPlan plan_sampling(McConfig const& cfg)
{
    check_config(cfg);
    auto const& sc = cfg.scenario;
    double const h = sc.channel.height();
    double const z = sc.rx.offset_z;

    SamplingPlan plan;
    plan.gate_radius = fov_radius(h, sc.rx.fov);
    plan.exclusion_radius = z;
    plan.outer_radius = plan.gate_radius;
    if (std::isinf(plan.gate_radius))
    {
        plan.truncated = true;
        plan.outer_radius = cfg.truncation_radius > 0
                                ? cfg.truncation_radius
                                : auto_truncation_radius(sc.dimension, h,
                                                         sc.channel.beta(), z);
        if (!(plan.outer_radius > z) || !std::isfinite(plan.outer_radius))
            throw DomainError("truncation radius must be finite and exceed z");
    }
    if (cfg.injected || !(plan.outer_radius > z))
        return plan;

    if (cfg.mode == SamplingMode::support_sampling)
    {
        plan.region = sc.dimension == 1 ? Region::interval(z, plan.outer_radius)
                                        : Region::annulus(z, plan.outer_radius);
    }
    else
    {
        double const half = plan.truncated ? plan.outer_radius
                                           : full_region_margin * plan.gate_radius;
        plan.region = sc.dimension == 1
                          ? Region::interval(-half, half)
                          : Region::rectangle(-half, half, -half, half);
    }
    double const mean = expected_count(*plan.region, sc.lambda);
    if (mean > cfg.max_expected_points)
        throw CapacityError("expected point count exceeds the sampler cap");
    return plan;
}

AnalyticReference analytic_reference(McConfig const& cfg)
{
    auto const plan = plan_sampling(cfg);
    auto const& sc = cfg.scenario;
    AnalyticReference ref;
    if (cfg.injected)
    {
        ref.value = gated_interference(*cfg.injected, sc.channel, sc.rx.fov);
        return ref;
    }
    double const z = sc.rx.offset_z;
    if (z > plan.gate_radius)
    {
        ref.empty_support = true;
        return ref;
    }
    double const h = sc.channel.height();
    double const beta = sc.channel.beta();
    double const sides
        = (sc.dimension == 1 && cfg.mode == SamplingMode::full_region_filtering) ? 2 : 1;
    ref.value = sides * sc.lambda * kernel_integral(sc.dimension, h, beta, z, plan.gate_radius);
    if (plan.truncated)
    {
        ref.tail_bound = sides * sc.lambda
                         * kernel_integral(sc.dimension, h, beta, plan.outer_radius, inf);
    }
    return ref;
}

//---------------------------------------------------------------------------//
double trial_interference(McConfig const& cfg, SamplingPlan const& plan,
                          std::uint64_t index)
{
    auto const& sc = cfg.scenario;
    if (cfg.injected)
        return gated_interference(*cfg.injected, sc.channel, sc.rx.fov);
    if (!plan.region || sc.lambda == 0)
        return 0;

    double const h2 = sc.channel.height() * sc.channel.height();
    double const beta = sc.channel.beta();
    std::poisson_distribution<std::uint64_t> const count(
        expected_count(*plan.region, sc.lambda));
    Xoshiro256 rng(cfg.seed, index);

    double total = 0;
    if (cfg.mode == SamplingMode::support_sampling)
    {
        // every draw lies on the visible support by construction
        detail::draw_ppp(*plan.region, &count, rng, [&](Point p) {
            total += std::pow(p.x * p.x + p.y * p.y + h2, -beta);
        });
    }
    else
    {
        double const lo = plan.exclusion_radius;
        double const hi = plan.outer_radius;
        detail::draw_ppp(*plan.region, &count, rng, [&](Point p) {
            double const d = p.distance();
            if (lo <= d && d <= hi)
                total += std::pow(d * d + h2, -beta);
        });
    }
    return total;
}

std::vector<double> interference_samples(McConfig const& cfg)
{
    auto const plan = plan_sampling(cfg);
    std::vector<double> out(cfg.trials);
    auto trial = [&](std::uint64_t i) { return trial_interference(cfg, plan, i); };
    if (cfg.execution == Execution::parallel)
        kernels::fill_parallel(out, trial);
    else
        kernels::fill_serial(out, trial);
    return out;
}

//---------------------------------------------------------------------------//
EmpiricalResult make_result(double mean, double variance, std::uint64_t trials,
                            SamplingMode mode)
{
    EmpiricalResult r;
    r.mean = mean;
    r.std_error = trials > 0 ? std::sqrt(variance / static_cast<double>(trials)) : 0;
    r.ci_lo = mean - 1.96 * r.std_error;
    r.ci_hi = mean + 1.96 * r.std_error;
    r.trials = trials;
    r.mode = mode;
    return r;
}

namespace
{
EmpiricalResult reduce(std::span<double const> samples, McConfig const& cfg,
                       kernels::Transform const& g)
{
    auto const acc = cfg.execution == Execution::parallel
                         ? kernels::reduce_parallel(samples, g)
                         : kernels::reduce_serial(samples, g);
    return make_result(acc.mean(), acc.variance(), acc.count(), cfg.mode);
}
}  // namespace

EmpiricalResult summarize(std::span<double const> samples, McConfig const& cfg)
{
    return reduce(samples, cfg, [](double x) { return x; });
}

EmpiricalResult empirical_mean_interference(McConfig const& cfg)
{
    auto const samples = interference_samples(cfg);
    return summarize(samples, cfg);
}

std::vector<EmpiricalResult>
empirical_laplace(std::span<double const> samples, McConfig const& cfg,
                  std::span<double const> s_values)
{
    std::vector<EmpiricalResult> out;
    out.reserve(s_values.size());
    for (double s : s_values)
    {
        if (!(s >= 0))
            throw DomainError("Laplace variable s must be non-negative");
        if (s == 0)
            out.push_back(make_result(1, 0, samples.size(), cfg.mode));
        else
            out.push_back(reduce(samples, cfg, [s](double x) { return std::exp(-s * x); }));
    }
    return out;
}

std::vector<EmpiricalResult>
empirical_laplace(McConfig const& cfg, std::span<double const> s_values)
{
    auto const samples = interference_samples(cfg);
    return empirical_laplace(samples, cfg, s_values);
}

//---------------------------------------------------------------------------//
SinrSummary sinr_samples(McConfig const& cfg,
                         std::span<double const> thresholds,
                         bool allow_infinite)
{
    auto const& sc = cfg.scenario;
    auto const plan = plan_sampling(cfg);
    if (sc.rx.offset_z > plan.gate_radius)
        throw DomainError("tagged balloon outside the receiver FOV radius");
    if (sc.rx.noise_omega == 0 && !allow_infinite)
    {
        bool const can_be_empty
            = !cfg.injected
              || gated_interference(*cfg.injected, sc.channel, sc.rx.fov) == 0;
        if (can_be_empty)
        {
            throw DomainError(
                "zero noise admits infinite SINR; enable infinite-SINR accounting");
        }
    }

    SinrSummary out;
    out.interference = interference_samples(cfg);
    out.trials = out.interference.size();
    double const omega = sc.rx.noise_omega;
    out.denominator = reduce(out.interference, cfg, [omega](double x) { return x + omega; });

    out.gamma.reserve(out.trials);
    std::vector<std::uint64_t> covered(thresholds.size(), 0);
    CompensatedSum finite_sum;
    std::uint64_t finite_count = 0;
    for (double i_value : out.interference)
    {
        SinrValue g = sinr_from_interference(i_value, sc.channel, sc.rx);
        if (g.is_finite())
        {
            finite_sum.add(g.value);
            ++finite_count;
        }
        else
        {
            ++out.infinite_count;
        }
        for (std::size_t k = 0; k < thresholds.size(); ++k)
        {
            if (!g.is_finite() || g.value > thresholds[k])
                ++covered[k];
        }
        out.gamma.push_back(g);
    }
    out.mean_finite_gamma = finite_count > 0
                                ? finite_sum.value() / static_cast<double>(finite_count)
                                : std::numeric_limits<double>::quiet_NaN();
    for (std::size_t k = 0; k < thresholds.size(); ++k)
    {
        out.coverage.push_back(
            {thresholds[k], static_cast<double>(covered[k]) / static_cast<double>(out.trials)});
    }
    return out;
}

//---------------------------------------------------------------------------//
Verdict compare(double analytic, EmpiricalResult const& empirical, double bias_bound)
{
    double const diff = std::fabs(empirical.mean - analytic);
    if (empirical.std_error == 0)
        return {diff <= bias_bound, diff == 0 ? 0 : inf};
    return {diff <= 3 * empirical.std_error + bias_bound, diff / empirical.std_error};
}

}  // namespace libnet
