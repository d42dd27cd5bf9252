#include "libnet/scenario.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "libnet/csv.hpp"
#include "libnet/errors.hpp"

namespace libnet
{
namespace
{
constexpr std::string_view required_keys[] = {
    "dimension", "h_m", "theta_h", "theta_f", "lambda",
    "z_m", "omega", "trials", "seed",
};
constexpr std::string_view optional_keys[] = {
    "mode", "sweep_param", "sweep_start", "sweep_stop", "sweep_steps",
};

std::string_view trim(std::string_view s)
{
    auto const first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    auto const last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool is_known(std::string_view key)
{
    for (auto k : required_keys)
        if (k == key)
            return true;
    for (auto k : optional_keys)
        if (k == key)
            return true;
    return false;
}

double parse_real(std::string_view key, std::string_view text)
{
    double v = 0;
    auto const* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end || text.empty())
    {
        throw ConfigError("key '" + std::string(key) + "': expected a number, got '"
                          + std::string(text) + "'");
    }
    return v;
}

std::uint64_t parse_uint(std::string_view key, std::string_view text)
{
    std::uint64_t v = 0;
    auto const* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end || text.empty())
    {
        throw ConfigError("key '" + std::string(key)
                          + "': expected a non-negative integer, got '"
                          + std::string(text) + "'");
    }
    return v;
}

double parse_angle_key(std::string_view key, std::string_view text)
{
    try
    {
        return parse_angle(text);
    }
    catch (ConfigError const& e)
    {
        throw ConfigError("key '" + std::string(key) + "': " + e.what());
    }
}

std::string angle_text(double radians)
{
    return format_real(radians) + "rad";
}

double to_degrees(double radians)
{
    return radians * 180 / std::numbers::pi;
}
}  // namespace

//---------------------------------------------------------------------------//
std::string_view to_string(SweepParam p)
{
    switch (p)
    {
        case SweepParam::lambda: return "lambda";
        case SweepParam::z_m: return "z_m";
        case SweepParam::h_m: return "h_m";
        case SweepParam::theta_h: return "theta_h";
        case SweepParam::theta_f: return "theta_f";
        case SweepParam::omega: return "omega";
    }
    return "?";
}

std::optional<SweepParam> parse_sweep_param(std::string_view s)
{
    for (auto p : {SweepParam::lambda, SweepParam::z_m, SweepParam::h_m,
                   SweepParam::theta_h, SweepParam::theta_f, SweepParam::omega})
    {
        if (to_string(p) == s)
            return p;
    }
    return std::nullopt;
}

bool is_angle(SweepParam p)
{
    return p == SweepParam::theta_h || p == SweepParam::theta_f;
}

double SweepSpec::value(int i) const
{
    if (steps <= 1)
        return start;
    if (i == steps - 1)
        return stop;
    return start + (stop - start) * static_cast<double>(i) / (steps - 1);
}

double parse_angle(std::string_view text)
{
    text = trim(text);
    double scale = 0;
    if (text.ends_with("deg"))
        scale = std::numbers::pi;
    else if (text.ends_with("rad"))
        scale = 1;
    else
        throw ConfigError("angle needs a 'deg' or 'rad' suffix");
    auto const number = trim(text.substr(0, text.size() - 3));
    double const v = parse_real("angle", number);
    // deg / 180 first so 90deg maps exactly onto pi/2
    return scale == 1 ? v : (v / 180) * scale;
}

//---------------------------------------------------------------------------//
MeanInterferenceInputs ScenarioConfig::mean_inputs() const
{
    return {lambda, h, z, theta_f, this->channel().beta()};
}

Scenario ScenarioConfig::scenario() const
{
    return {dimension, this->channel(), Receiver{theta_f, z, omega}, lambda};
}

McConfig ScenarioConfig::mc_config() const
{
    McConfig cfg;
    cfg.scenario = this->scenario();
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.mode = mode;
    return cfg;
}

ScenarioConfig ScenarioConfig::with_parameter(SweepParam p, double value) const
{
    ScenarioConfig c = *this;
    switch (p)
    {
        case SweepParam::lambda: c.lambda = value; break;
        case SweepParam::z_m: c.z = value; break;
        case SweepParam::h_m: c.h = value; break;
        case SweepParam::theta_h: c.theta_h = value; break;
        case SweepParam::theta_f: c.theta_f = value; break;
        case SweepParam::omega: c.omega = value; break;
    }
    return c;
}

void validate(ScenarioConfig const& c)
{
    if (c.dimension != 1 && c.dimension != 2)
        throw DomainError("dimension must be 1 or 2");
    if (!(c.h > 0) || !std::isfinite(c.h))
        throw DomainError("h_m must be positive and finite");
    if (!(c.theta_h > 0 && c.theta_h < std::numbers::pi / 2))
        throw DomainError("theta_h out of range: must lie in (0, 90) deg");
    if (!(c.theta_f > 0 && c.theta_f <= unbounded_fov))
        throw DomainError("fov out of range: theta_f must lie in (0, 90] deg");
    if (!(c.lambda >= 0) || !std::isfinite(c.lambda))
        throw DomainError("lambda must be finite and non-negative");
    if (!(c.z >= 0) || !std::isfinite(c.z))
        throw DomainError("z_m must be finite and non-negative");
    if (!(c.omega >= 0) || !std::isfinite(c.omega))
        throw DomainError("omega must be finite and non-negative");
    if (c.trials < 1)
        throw DomainError("trials must be at least 1");
    if (c.sweep && c.sweep->steps < 1)
        throw DomainError("sweep_steps must be at least 1");
    // constructing the channel re-checks the Lambertian order
    (void)c.channel();
}

ScenarioConfig parse_config(std::istream& is)
{
    std::map<std::string, std::string, std::less<>> values;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line))
    {
        ++line_no;
        std::string_view view = line;
        if (auto hash = view.find('#'); hash != std::string_view::npos)
            view = view.substr(0, hash);
        view = trim(view);
        if (view.empty())
            continue;
        auto const eq = view.find('=');
        if (eq == std::string_view::npos)
        {
            throw ConfigError("line " + std::to_string(line_no)
                              + ": expected 'key = value'");
        }
        auto const key = trim(view.substr(0, eq));
        auto const value = trim(view.substr(eq + 1));
        if (!is_known(key))
        {
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '"
                              + std::string(key) + "'");
        }
        if (!values.emplace(std::string(key), std::string(value)).second)
        {
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '"
                              + std::string(key) + "'");
        }
    }
    for (auto k : required_keys)
    {
        if (!values.contains(k))
            throw ConfigError("missing required key '" + std::string(k) + "'");
    }

    auto get = [&](std::string_view k) -> std::string_view {
        return values.find(k)->second;
    };

    ScenarioConfig c;
    auto const dim = parse_uint("dimension", get("dimension"));
    if (dim != 1 && dim != 2)
        throw ConfigError("key 'dimension': must be 1 or 2");
    c.dimension = static_cast<int>(dim);
    c.h = parse_real("h_m", get("h_m"));
    c.theta_h = parse_angle_key("theta_h", get("theta_h"));
    c.theta_f = parse_angle_key("theta_f", get("theta_f"));
    c.lambda = parse_real("lambda", get("lambda"));
    c.z = parse_real("z_m", get("z_m"));
    c.omega = parse_real("omega", get("omega"));
    c.trials = parse_uint("trials", get("trials"));
    c.seed = parse_uint("seed", get("seed"));
    if (values.contains("mode"))
    {
        auto mode = parse_sampling_mode(get("mode"));
        if (!mode)
        {
            throw ConfigError("key 'mode': expected support_sampling or "
                              "full_region_filtering");
        }
        c.mode = *mode;
    }

    int sweep_keys = 0;
    for (auto k : {"sweep_param", "sweep_start", "sweep_stop", "sweep_steps"})
        sweep_keys += values.contains(k) ? 1 : 0;
    if (sweep_keys != 0 && sweep_keys != 4)
    {
        throw ConfigError("sweep needs all of sweep_param, sweep_start, "
                          "sweep_stop, sweep_steps");
    }
    if (sweep_keys == 4)
    {
        SweepSpec sw;
        auto param = parse_sweep_param(get("sweep_param"));
        if (!param)
        {
            throw ConfigError("key 'sweep_param': unknown parameter '"
                              + std::string(get("sweep_param")) + "'");
        }
        sw.param = *param;
        if (is_angle(sw.param))
        {
            sw.start = parse_angle_key("sweep_start", get("sweep_start"));
            sw.stop = parse_angle_key("sweep_stop", get("sweep_stop"));
        }
        else
        {
            sw.start = parse_real("sweep_start", get("sweep_start"));
            sw.stop = parse_real("sweep_stop", get("sweep_stop"));
        }
        auto const steps = parse_uint("sweep_steps", get("sweep_steps"));
        if (steps < 1 || steps > 1'000'000)
            throw ConfigError("key 'sweep_steps': must lie in [1, 1e6]");
        sw.steps = static_cast<int>(steps);
        c.sweep = sw;
    }

    validate(c);
    return c;
}

ScenarioConfig load_config(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path.string() + "'");
    return parse_config(in);
}

void write_config(std::ostream& os, ScenarioConfig const& c)
{
    os << "dimension = " << c.dimension << '\n'
       << "h_m = " << format_real(c.h) << '\n'
       << "theta_h = " << angle_text(c.theta_h) << '\n'
       << "theta_f = " << angle_text(c.theta_f) << '\n'
       << "lambda = " << format_real(c.lambda) << '\n'
       << "z_m = " << format_real(c.z) << '\n'
       << "omega = " << format_real(c.omega) << '\n'
       << "trials = " << c.trials << '\n'
       << "seed = " << c.seed << '\n'
       << "mode = " << to_string(c.mode) << '\n';
    if (c.sweep)
    {
        auto const& sw = *c.sweep;
        auto text = [&](double v) {
            return is_angle(sw.param) ? angle_text(v) : format_real(v);
        };
        os << "sweep_param = " << to_string(sw.param) << '\n'
           << "sweep_start = " << text(sw.start) << '\n'
           << "sweep_stop = " << text(sw.stop) << '\n'
           << "sweep_steps = " << sw.steps << '\n';
    }
}

std::string describe(ScenarioConfig const& c)
{
    auto const ch = c.channel();
    auto angle = [](double rad) {
        return format_real(rad) + " rad (" + format_real(to_degrees(rad)) + " deg)";
    };
    std::ostringstream os;
    os << "dimension  " << c.dimension << '\n'
       << "h          " << format_real(c.h) << " m\n"
       << "theta_h    " << angle(c.theta_h) << '\n'
       << "theta_f    " << angle(c.theta_f)
       << (c.theta_f == unbounded_fov ? "  [unbounded FOV]" : "") << '\n'
       << "lambda     " << format_real(c.lambda) << '\n'
       << "z          " << format_real(c.z) << " m\n"
       << "omega      " << format_real(c.omega) << '\n'
       << "trials     " << c.trials << '\n'
       << "seed       " << c.seed << '\n'
       << "mode       " << to_string(c.mode) << '\n'
       << "m          " << format_real(ch.order()) << '\n'
       << "beta       " << format_real(ch.beta()) << '\n'
       << "fov radius " << format_real(c.fov_radius()) << " m\n";
    if (c.sweep)
    {
        auto const& sw = *c.sweep;
        auto text = [&](double v) {
            return is_angle(sw.param) ? angle(v) : format_real(v);
        };
        os << "sweep      " << to_string(sw.param) << " from " << text(sw.start)
           << " to " << text(sw.stop) << " in " << sw.steps << " steps\n";
    }
    return os.str();
}

}  // namespace libnet
