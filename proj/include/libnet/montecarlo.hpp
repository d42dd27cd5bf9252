#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "channel.hpp"
#include "region.hpp"
#include "sampler.hpp"

namespace libnet
{
//---------------------------------------------------------------------------//
enum class SamplingMode
{
    //! Draw directly on the interference support [z, R] (annulus in 2D)
    support_sampling,
    //! Draw on a symmetric box around the receiver, then exclude |x| < z
    //! and apply the FOV gate
    full_region_filtering,
};

enum class Execution
{
    sequential,  //!< serial reference kernels
    parallel,  //!< OpenMP kernels
};

std::string_view to_string(SamplingMode mode);
std::optional<SamplingMode> parse_sampling_mode(std::string_view s);

//---------------------------------------------------------------------------//
//! Physical scenario seen by one receiver.
struct Scenario
{
    int dimension{1};
    LambertianChannel channel{std::numbers::pi / 3, 1.0};
    Receiver rx{};
    double lambda{0};
};

//! Monte Carlo run description.
struct McConfig
{
    Scenario scenario;
    std::uint64_t trials{1000};
    std::uint64_t seed{1};
    SamplingMode mode{SamplingMode::support_sampling};
    Execution execution{Execution::parallel};
    //! Outer radius used when the FOV is unbounded; 0 selects one
    //! automatically so that the neglected tail is below 1e-6 of the mean
    double truncation_radius{0};
    double max_expected_points{default_max_expected_points};
    //! Test hook: fixed interferer positions used in place of sampling
    std::optional<std::vector<Point>> injected;
};

//---------------------------------------------------------------------------//
//! Sampling geometry resolved from a configuration.
struct SamplingPlan
{
    //! Region to draw from; empty when the visible support is empty
    std::optional<Region> region;
    double gate_radius{0};  //!< h tan(theta_f), possibly +inf
    double exclusion_radius{0};  //!< interferers nearer than z are dropped
    double outer_radius{0};  //!< finite outer edge actually simulated
    bool truncated{false};
};

SamplingPlan plan_sampling(McConfig const& cfg);

//! Closed-form mean interference matching a configuration's sampling mode.
struct AnalyticReference
{
    double value{0};  //!< untruncated closed form
    double tail_bound{0};  //!< mass beyond the truncation radius
    bool empty_support{false};
};

AnalyticReference analytic_reference(McConfig const& cfg);

//---------------------------------------------------------------------------//
//! Sample mean with a normal-theory 95% interval.
struct EmpiricalResult
{
    double mean{0};
    double std_error{0};
    double ci_lo{0};
    double ci_hi{0};
    std::uint64_t trials{0};
    SamplingMode mode{SamplingMode::support_sampling};
};

EmpiricalResult make_result(double mean, double variance, std::uint64_t trials,
                            SamplingMode mode);

//! Per-trial interference I_i = sum of gated path gains.
std::vector<double> interference_samples(McConfig const& cfg);

//! Interference of realization `index` alone.
double trial_interference(McConfig const& cfg, SamplingPlan const& plan,
                          std::uint64_t index);

EmpiricalResult empirical_mean_interference(McConfig const& cfg);

//! Same, from already drawn samples.
EmpiricalResult summarize(std::span<double const> samples, McConfig const& cfg);

//! E[exp(-s I)] for each s; s == 0 gives exactly 1 with zero error.
std::vector<EmpiricalResult>
empirical_laplace(McConfig const& cfg, std::span<double const> s_values);

std::vector<EmpiricalResult>
empirical_laplace(std::span<double const> samples, McConfig const& cfg,
                  std::span<double const> s_values);

//---------------------------------------------------------------------------//
struct Coverage
{
    double threshold{0};
    double probability{0};  //!< fraction of trials with gamma > threshold
};

struct SinrSummary
{
    std::uint64_t trials{0};
    std::uint64_t infinite_count{0};
    double mean_finite_gamma{0};  //!< NaN when every trial is infinite
    EmpiricalResult denominator;  //!< I + Omega
    std::vector<Coverage> coverage;
    std::vector<double> interference;  //!< per-trial I
    std::vector<SinrValue> gamma;  //!< per-trial SINR

    double infinite_fraction() const
    {
        return trials == 0 ? 0 : static_cast<double>(infinite_count) / trials;
    }
};

/*!
 * Per-trial SINR with coverage P(gamma > T) at each threshold.
 *
 * Infinite SINR counts as covered at every threshold. With zero noise a
 * random field can be empty, so such configurations are rejected unless
 * allow_infinite is set.
 */
SinrSummary sinr_samples(McConfig const& cfg,
                         std::span<double const> thresholds,
                         bool allow_infinite = false);

//---------------------------------------------------------------------------//
struct Verdict
{
    bool pass{false};
    double z_score{0};
};

/*!
 * Three-sigma check of an estimate against a closed form.
 *
 * Passes iff |mean - analytic| <= 3 std_error + bias_bound, where
 * bias_bound absorbs known deterministic truncation.
 */
Verdict compare(double analytic, EmpiricalResult const& empirical,
                double bias_bound = 0);

}  // namespace libnet
