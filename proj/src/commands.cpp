#include "libnet/commands.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include "libnet/analytic.hpp"
#include "libnet/csv.hpp"
#include "libnet/errors.hpp"
#include "libnet/sampler.hpp"

namespace libnet
{
namespace
{
struct MeanComparison
{
    MeanInterference closed;
    double quadrature{0};
    double rel_diff{0};
    EmpiricalResult empirical;
    AnalyticReference reference;
    Verdict verdict;
};

double relative_difference(double a, double b)
{
    if (a == b)
        return 0;
    return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b));
}

McConfig make_mc(ScenarioConfig const& c, CommandOptions const& opts)
{
    McConfig cfg = c.mc_config();
    cfg.execution = opts.execution;
    cfg.max_expected_points = opts.max_expected_points;
    return cfg;
}

MeanInterference closed_form(ScenarioConfig const& c)
{
    auto const in = c.mean_inputs();
    if (c.dimension == 2)
        return mean_interference_2d(in);
    auto const sides = c.mode == SamplingMode::full_region_filtering ? Sides::two_sided
                                                                      : Sides::one_sided;
    return mean_interference_1d(in, sides);
}

double sides_factor(ScenarioConfig const& c)
{
    return (c.dimension == 1 && c.mode == SamplingMode::full_region_filtering) ? 2 : 1;
}

MeanComparison run_mean_comparison(ScenarioConfig const& c, CommandOptions const& opts,
                                   bool with_quadrature)
{
    MeanComparison out;
    out.closed = closed_form(c);
    if (with_quadrature)
    {
        out.quadrature = sides_factor(c)
                         * mean_interference_quadrature(c.mean_inputs(), c.dimension).value;
        out.rel_diff = relative_difference(out.closed.value, out.quadrature);
    }
    auto const cfg = make_mc(c, opts);
    out.empirical = empirical_mean_interference(cfg);
    out.reference = analytic_reference(cfg);
    out.verdict = compare(out.closed.value, out.empirical, out.reference.tail_bound);
    return out;
}

bool check_trials(ScenarioConfig const& c, std::ostream& report)
{
    if (c.trials < min_statistical_trials)
    {
        report << "error: trials must be at least " << min_statistical_trials
               << " for a statistical run\n";
        return false;
    }
    return true;
}

void warn_empty_support(ScenarioConfig const& c, std::ostream& report)
{
    if (c.has_empty_support())
    {
        report << "warning: z exceeds the FOV radius; the interference support is "
                  "empty and the mean is 0\n";
    }
}
}  // namespace

//---------------------------------------------------------------------------//
int cmd_validate(ScenarioConfig const& c, CommandIo io, CommandOptions const& opts)
{
    if (!check_trials(c, io.report))
        return exit_usage;
    io.report << describe(c);
    warn_empty_support(c, io.report);

    MeanComparison r;
    try
    {
        r = run_mean_comparison(c, opts, true);
    }
    catch (ConvergenceError const& e)
    {
        io.report << "quadrature failed: " << e.what()
                  << " (achieved error " << format_real(e.achieved_error()) << ")\n";
        return exit_math;
    }
    catch (CapacityError const& e)
    {
        io.report << "error: " << e.what() << '\n';
        return exit_usage;
    }

    bool const math_ok = r.rel_diff <= closed_form_rel_tol;
    io.report << '\n'
              << std::left << std::setw(14) << "route" << "value\n"
              << std::setw(14) << "closed form" << format_real(r.closed.value) << '\n'
              << std::setw(14) << "quadrature" << format_real(r.quadrature)
              << "  (rel diff " << format_real(r.rel_diff) << ")\n"
              << std::setw(14) << "monte carlo" << format_real(r.empirical.mean)
              << " +/- " << format_real(r.empirical.std_error) << "  (z "
              << format_real(r.verdict.z_score) << ")\n";
    if (r.reference.tail_bound > 0)
        io.report << "truncation tail bound " << format_real(r.reference.tail_bound) << '\n';

    io.csv << "dimension,mode,lambda,h_m,z_m,theta_f_rad,beta,closed_form,quadrature,"
              "rel_diff,mc_mean,mc_std_error,ci_lo,ci_hi,z_score,tail_bound,trials,"
              "verdict\n";
    io.csv << c.dimension << ',' << to_string(c.mode) << ',' << format_real(c.lambda)
           << ',' << format_real(c.h) << ',' << format_real(c.z) << ','
           << format_real(c.theta_f) << ',' << format_real(c.channel().beta()) << ','
           << format_real(r.closed.value) << ',' << format_real(r.quadrature) << ','
           << format_real(r.rel_diff) << ',' << format_real(r.empirical.mean) << ','
           << format_real(r.empirical.std_error) << ',' << format_real(r.empirical.ci_lo)
           << ',' << format_real(r.empirical.ci_hi) << ','
           << format_real(r.verdict.z_score) << ','
           << format_real(r.reference.tail_bound) << ',' << r.empirical.trials << ','
           << (math_ok && r.verdict.pass ? "pass" : "fail") << '\n';

    if (!math_ok)
    {
        io.report << "FAIL: closed form vs quadrature exceed relative tolerance "
                  << format_real(closed_form_rel_tol) << '\n';
        return exit_math;
    }
    if (!r.verdict.pass)
    {
        io.report << "FAIL: closed form vs Monte Carlo beyond 3 standard errors\n";
        return exit_statistical;
    }
    io.report << "PASS\n";
    return exit_ok;
}

//---------------------------------------------------------------------------//
int cmd_sweep(ScenarioConfig const& c, CommandIo io, CommandOptions const& opts)
{
    if (!c.sweep)
    {
        io.report << "error: sweep command needs sweep_param, sweep_start, "
                     "sweep_stop and sweep_steps\n";
        return exit_usage;
    }
    if (!check_trials(c, io.report))
        return exit_usage;
    io.report << describe(c);

    auto const& sw = *c.sweep;
    io.csv << "parameter,value,analytic,empirical,ci_lo,ci_hi,rel_error,z_score\n";
    std::vector<double> analytic;
    for (int i = 0; i < sw.steps; ++i)
    {
        double const v = sw.value(i);
        ScenarioConfig point = c.with_parameter(sw.param, v);
        MeanComparison r;
        try
        {
            validate(point);
            r = run_mean_comparison(point, opts, false);
        }
        catch (std::exception const& e)
        {
            io.report << "error: sweep point " << i << " (" << to_string(sw.param)
                      << " = " << format_real(v) << ") invalid: " << e.what() << '\n';
            return exit_usage;
        }
        if (r.closed.empty_support)
            io.report << "warning: sweep point " << i << " has empty support\n";
        double rel = 0;
        if (r.closed.value != 0)
            rel = (r.empirical.mean - r.closed.value) / r.closed.value;
        else if (r.empirical.mean != 0)
            rel = std::numeric_limits<double>::infinity();
        io.csv << to_string(sw.param) << ',' << format_real(v) << ','
               << format_real(r.closed.value) << ',' << format_real(r.empirical.mean)
               << ',' << format_real(r.empirical.ci_lo) << ','
               << format_real(r.empirical.ci_hi) << ',' << format_real(rel) << ','
               << format_real(r.verdict.z_score) << '\n';
        analytic.push_back(r.closed.value);
    }

    // Expected direction of the analytic column as the parameter increases.
    int direction = 0;
    if (sw.param == SweepParam::lambda || sw.param == SweepParam::theta_f)
        direction = 1;
    else if (sw.param == SweepParam::z_m)
        direction = -1;
    if (sw.stop < sw.start)
        direction = -direction;
    constexpr double slack = 1e-12;
    for (std::size_t i = 1; direction != 0 && i < analytic.size(); ++i)
    {
        double const step = (analytic[i] - analytic[i - 1]) * direction;
        double const scale = std::max(std::fabs(analytic[i]), std::fabs(analytic[i - 1]));
        if (step < -slack * scale)
        {
            io.report << "FAIL: analytic column not monotone at row " << i << '\n';
            return exit_math;
        }
    }
    io.report << "swept " << sw.steps << " points\n";
    return exit_ok;
}

//---------------------------------------------------------------------------//
int cmd_sinr(ScenarioConfig const& c, CommandIo io, CommandOptions const& opts)
{
    if (!check_trials(c, io.report))
        return exit_usage;
    if (c.has_empty_support())
    {
        io.report << "error: z exceeds the FOV radius; the tagged balloon is not "
                     "visible\n";
        return exit_usage;
    }
    io.report << describe(c);

    auto const cfg = make_mc(c, opts);
    SinrSummary s;
    AnalyticReference ref;
    try
    {
        s = sinr_samples(cfg, opts.thresholds, opts.allow_infinite_sinr);
        ref = analytic_reference(cfg);
    }
    catch (std::exception const& e)
    {
        io.report << "error: " << e.what() << '\n';
        return exit_usage;
    }
    double const expected = c.omega + ref.value;
    Verdict const v = compare(expected, s.denominator, ref.tail_bound);

    if (!s.coverage.empty())
        io.csv << "threshold,coverage\n";
    for (auto const& cov : s.coverage)
        io.csv << format_real(cov.threshold) << ',' << format_real(cov.probability) << '\n';
    io.csv << "# mean_finite_gamma=" << format_real(s.mean_finite_gamma)
           << ",infinite_fraction=" << format_real(s.infinite_fraction())
           << ",trials=" << s.trials
           << ",denominator_mean=" << format_real(s.denominator.mean)
           << ",denominator_std_error=" << format_real(s.denominator.std_error)
           << ",denominator_expected=" << format_real(expected)
           << ",denominator_z=" << format_real(v.z_score) << '\n';

    io.report << "mean finite SINR      " << format_real(s.mean_finite_gamma) << '\n'
              << "infinite SINR share   " << format_real(s.infinite_fraction()) << '\n'
              << "E[I + Omega]          " << format_real(s.denominator.mean) << " +/- "
              << format_real(s.denominator.std_error) << " (closed form "
              << format_real(expected) << ", z " << format_real(v.z_score) << ")\n";
    if (!v.pass)
    {
        io.report << "FAIL: denominator mean inconsistent with Omega + E(I)\n";
        return exit_statistical;
    }
    return exit_ok;
}

//---------------------------------------------------------------------------//
int cmd_sample_dump(ScenarioConfig const& c, CommandIo io, CommandOptions const& opts)
{
    auto const cfg = make_mc(c, opts);
    SamplingPlan plan;
    try
    {
        plan = plan_sampling(cfg);
    }
    catch (std::exception const& e)
    {
        io.report << "error: " << e.what() << '\n';
        return exit_usage;
    }
    PointField field;
    field.dimension = c.dimension;
    field.seed_info = {c.seed, opts.dump_index};
    if (plan.region)
    {
        field = sample_ppp(*plan.region, c.lambda, c.seed, opts.dump_index,
                           opts.max_expected_points);
    }
    write_field_csv(io.csv, field);
    io.report << "realization " << opts.dump_index << ": " << field.points.size()
              << " points\n";
    return exit_ok;
}

}  // namespace libnet
