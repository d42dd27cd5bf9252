#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "libnet/commands.hpp"
#include "libnet/errors.hpp"
#include "libnet/scenario.hpp"

namespace
{
struct Args
{
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed_override;
    std::optional<std::uint64_t> trials_override;
    std::string thresholds;
    bool allow_infinite{false};
    bool sequential{false};
    std::uint64_t index{0};
};

std::vector<double> parse_thresholds(std::string const& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        if (item.empty())
            continue;
        std::size_t used = 0;
        double const v = std::stod(item, &used);
        if (used != item.size())
            throw libnet::ConfigError("bad threshold '" + item + "'");
        out.push_back(v);
    }
    return out;
}

void add_common(CLI::App* cmd, Args& args)
{
    cmd->add_option("--config", args.config, "Scenario config file")->required();
    cmd->add_option("--out", args.out, "CSV output path (default: stdout)");
    cmd->add_option("--seed-override", args.seed_override, "Replace the config seed");
    cmd->add_option("--trials-override", args.trials_override,
                    "Replace the config trial count");
    cmd->add_flag("--sequential", args.sequential,
                  "Use the serial reference kernels instead of OpenMP");
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Interference and SINR analysis for Poisson networks of "
                 "optical attocell balloons"};
    app.require_subcommand(1);
    Args args;

    auto* validate = app.add_subcommand(
        "validate", "Compare closed-form, quadrature and Monte Carlo mean interference");
    auto* sweep = app.add_subcommand("sweep", "Sweep one parameter and tabulate E(I)");
    auto* sinr = app.add_subcommand("sinr", "SINR coverage curve P(gamma > T)");
    auto* dump = app.add_subcommand("sample-dump", "Write one raw point realization");
    for (auto* cmd : {validate, sweep, sinr, dump})
        add_common(cmd, args);
    sinr->add_option("--thresholds", args.thresholds, "Comma-separated SINR thresholds");
    sinr->add_flag("--allow-infinite-sinr", args.allow_infinite,
                   "Count zero-interference, zero-noise trials as infinite SINR");
    dump->add_option("--index", args.index, "Realization index to draw");

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::CallForHelp const& e)
    {
        return app.exit(e);
    }
    catch (CLI::ParseError const& e)
    {
        app.exit(e);
        return libnet::exit_usage;
    }

    libnet::ScenarioConfig config;
    libnet::CommandOptions opts;
    try
    {
        config = libnet::load_config(args.config);
        if (args.seed_override)
            config.seed = *args.seed_override;
        if (args.trials_override)
            config.trials = *args.trials_override;
        libnet::validate(config);
        opts.thresholds = parse_thresholds(args.thresholds);
        if (char const* cap = std::getenv("LIBNET_MAX_POINTS"))
        {
            std::size_t used = 0;
            opts.max_expected_points = std::stod(cap, &used);
            if (used != std::string(cap).size() || !(opts.max_expected_points > 0))
                throw libnet::ConfigError("LIBNET_MAX_POINTS must be a positive number");
        }
    }
    catch (std::exception const& e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return libnet::exit_usage;
    }
    opts.allow_infinite_sinr = args.allow_infinite;
    opts.dump_index = args.index;
    opts.execution = args.sequential ? libnet::Execution::sequential
                                     : libnet::Execution::parallel;

    std::ofstream file;
    if (!args.out.empty())
    {
        file.open(args.out);
        if (!file)
        {
            std::cerr << "error: cannot write '" << args.out << "'\n";
            return libnet::exit_usage;
        }
    }
    // Keep stdout clean for CSV when no --out is given.
    std::ostream& csv = args.out.empty() ? std::cout : file;
    std::ostream& report = args.out.empty() ? std::cerr : std::cout;
    libnet::CommandIo io{report, csv};

    if (*validate)
        return libnet::cmd_validate(config, io, opts);
    if (*sweep)
        return libnet::cmd_sweep(config, io, opts);
    if (*sinr)
        return libnet::cmd_sinr(config, io, opts);
    return libnet::cmd_sample_dump(config, io, opts);
}
