#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "analytic.hpp"
#include "channel.hpp"
#include "montecarlo.hpp"

namespace libnet
{
//---------------------------------------------------------------------------//
//! Malformed configuration text (unknown key, missing key, bad literal).
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

enum class SweepParam
{
    lambda,
    z_m,
    h_m,
    theta_h,
    theta_f,
    omega,
};

std::string_view to_string(SweepParam p);
std::optional<SweepParam> parse_sweep_param(std::string_view s);
bool is_angle(SweepParam p);

struct SweepSpec
{
    SweepParam param{SweepParam::lambda};
    double start{0};  //!< radians for angle parameters
    double stop{0};
    int steps{1};

    //! Value of point i (linear spacing, endpoints included)
    double value(int i) const;

    friend bool operator==(SweepSpec const&, SweepSpec const&) = default;
};

//---------------------------------------------------------------------------//
/*!
 * Full experiment description loaded from a key-value file.
 *
 * Angles are held in radians; the file carries explicit "deg"/"rad"
 * suffixes.
 */
struct ScenarioConfig
{
    int dimension{1};
    double h{1};
    double theta_h{std::numbers::pi / 3};
    double theta_f{unbounded_fov};
    double lambda{0};
    double z{0};
    double omega{0};
    std::uint64_t trials{1000};
    std::uint64_t seed{1};
    SamplingMode mode{SamplingMode::support_sampling};
    std::optional<SweepSpec> sweep;

    LambertianChannel channel() const { return {theta_h, h}; }
    double fov_radius() const { return libnet::fov_radius(h, theta_f); }
    bool has_empty_support() const { return z > this->fov_radius(); }
    MeanInterferenceInputs mean_inputs() const;
    Scenario scenario() const;
    McConfig mc_config() const;

    //! Copy with one swept parameter replaced
    ScenarioConfig with_parameter(SweepParam p, double value) const;

    friend bool operator==(ScenarioConfig const&, ScenarioConfig const&) = default;
};

//! Check every invariant; throws DomainError naming the violated rule.
void validate(ScenarioConfig const& c);

ScenarioConfig parse_config(std::istream& is);
ScenarioConfig load_config(std::filesystem::path const& path);

//! Write in the same format parse_config reads (radians, 17 digits).
void write_config(std::ostream& os, ScenarioConfig const& c);

//! Parse "<number>deg" or "<number>rad" into radians.
double parse_angle(std::string_view text);

//! Human-readable echo: angles in both units, derived m and beta.
std::string describe(ScenarioConfig const& c);

}  // namespace libnet
