#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "montecarlo.hpp"
#include "scenario.hpp"

namespace libnet
{
//---------------------------------------------------------------------------//
//! Process exit codes shared by every command.
enum ExitCode : int
{
    exit_ok = 0,
    exit_usage = 2,  //!< bad arguments or configuration
    exit_math = 3,  //!< closed form disagrees with quadrature, or
                    //!< monotonicity violated
    exit_statistical = 4,  //!< Monte Carlo estimate outside 3 sigma
};

//! Minimum trials for any command that makes a statistical claim.
inline constexpr std::uint64_t min_statistical_trials = 100;

//! Relative agreement required between closed form and quadrature.
inline constexpr double closed_form_rel_tol = 1e-8;

struct CommandIo
{
    std::ostream& report;  //!< human-readable output
    std::ostream& csv;  //!< machine-readable output
};

struct CommandOptions
{
    std::vector<double> thresholds;
    bool allow_infinite_sinr{false};
    std::uint64_t dump_index{0};
    Execution execution{Execution::parallel};
    double max_expected_points{default_max_expected_points};
};

int cmd_validate(ScenarioConfig const& c, CommandIo io,
                 CommandOptions const& opts = {});
int cmd_sweep(ScenarioConfig const& c, CommandIo io,
              CommandOptions const& opts = {});
int cmd_sinr(ScenarioConfig const& c, CommandIo io,
             CommandOptions const& opts = {});
int cmd_sample_dump(ScenarioConfig const& c, CommandIo io,
                    CommandOptions const& opts = {});

}  // namespace libnet
