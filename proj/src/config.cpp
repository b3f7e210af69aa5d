#include "tlsm/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace tlsm {

namespace {

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& v, int line) {
    double out{};
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
        fail(line, "expected a number, got '" + v + "'");
    return out;
}

std::uint64_t parse_u64(const std::string& v, int line) {
    std::uint64_t out{};
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
        fail(line, "expected a nonnegative integer, got '" + v + "'");
    return out;
}

// Shortest representation that parses back to the same double.
std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

EventSpec parse_event(const std::string& v, int line) {
    std::array<double, 4> vals{};
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        const std::size_t comma = v.find(',', pos);
        const bool last = i == 3;
        if (last != (comma == std::string::npos))
            fail(line, "event needs 4 comma-separated values");
        vals[i] = parse_double(trim(v.substr(pos, comma - pos)), line);
        pos = comma + 1;
    }
    return EventSpec{vals[0], vals[1], vals[2], vals[3]};
}

} // namespace

RunConfig parse_run_config(const std::string& text) {
    RunConfig cfg;
    bool events_cleared = false;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) fail(line_no, "expected 'key = value'");

        if (key == "solver.a") cfg.solver.a = parse_double(value, line_no);
        else if (key == "solver.b") cfg.solver.b = parse_double(value, line_no);
        else if (key == "solver.c") cfg.solver.c = parse_double(value, line_no);
        else if (key == "solver.tau") cfg.solver.tau = parse_double(value, line_no);
        else if (key == "solver.lambda1") cfg.solver.lambda1 = parse_double(value, line_no);
        else if (key == "solver.lambda2") cfg.solver.lambda2 = parse_double(value, line_no);
        else if (key == "solver.max_iters")
            cfg.solver.max_iters = static_cast<int>(parse_u64(value, line_no));
        else if (key == "solver.epsilon") cfg.solver.epsilon = parse_double(value, line_no);
        else if (key == "solver.rel_tol") cfg.solver.rel_tol = parse_double(value, line_no);
        else if (key == "solver.mode") {
            try {
                cfg.solver.mode = parse_mode(value);
            } catch (const std::invalid_argument& e) {
                fail(line_no, e.what());
            }
        } else if (key == "noise.footprint_amplitude")
            cfg.noise.footprint_amplitude = parse_double(value, line_no);
        else if (key == "noise.gaussian_sigma")
            cfg.noise.gaussian_sigma = parse_double(value, line_no);
        else if (key == "noise.seed") cfg.noise.seed = parse_u64(value, line_no);
        else if (key == "noise.footprint_period")
            cfg.noise.footprint_period = parse_u64(value, line_no);
        else if (key == "noise.footprint_decay")
            cfg.noise.footprint_decay = parse_double(value, line_no);
        else if (key == "data.n1") cfg.data.n1 = parse_u64(value, line_no);
        else if (key == "data.n2") cfg.data.n2 = parse_u64(value, line_no);
        else if (key == "data.n3") cfg.data.n3 = parse_u64(value, line_no);
        else if (key == "data.dt") cfg.data.dt = parse_double(value, line_no);
        else if (key == "data.peak_freq") cfg.data.peak_freq = parse_double(value, line_no);
        else if (key == "data.event") {
            if (!events_cleared) {
                cfg.data.events.clear();
                events_cleared = true;
            }
            cfg.data.events.push_back(parse_event(value, line_no));
        } else
            fail(line_no, "unknown key '" + key + "'");
    }

    try {
        cfg.solver.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (cfg.noise.footprint_amplitude < 0.0 || cfg.noise.footprint_amplitude > 1.0)
        throw ConfigError("config: noise.footprint_amplitude must be in [0, 1]");
    if (cfg.noise.gaussian_sigma < 0.0)
        throw ConfigError("config: noise.gaussian_sigma must be nonnegative");
    if (cfg.noise.footprint_period == 0 || !(cfg.noise.footprint_decay > 0.0))
        throw ConfigError("config: invalid footprint pattern parameters");
    if (cfg.data.n1 == 0 || cfg.data.n2 == 0 || cfg.data.n3 == 0)
        throw ConfigError("config: data dims must be positive");
    if (!(cfg.data.dt > 0.0) || !(cfg.data.peak_freq > 0.0))
        throw ConfigError("config: data.dt and data.peak_freq must be positive");
    if (cfg.data.events.empty())
        throw ConfigError("config: at least one data.event required");
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_run_config(text);
}

std::string render_run_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "# solver\n";
    out << "solver.a = " << fmt(cfg.solver.a) << "\n";
    out << "solver.b = " << fmt(cfg.solver.b) << "\n";
    out << "solver.c = " << fmt(cfg.solver.c) << "\n";
    out << "solver.tau = " << fmt(cfg.solver.tau) << "\n";
    out << "solver.lambda1 = " << fmt(cfg.solver.lambda1) << "\n";
    out << "solver.lambda2 = " << fmt(cfg.solver.lambda2) << "\n";
    out << "solver.max_iters = " << cfg.solver.max_iters << "\n";
    out << "solver.epsilon = " << fmt(cfg.solver.epsilon) << "\n";
    out << "solver.mode = " << to_string(cfg.solver.mode) << "\n";
    out << "solver.rel_tol = " << fmt(cfg.solver.rel_tol) << "\n";
    out << "# noise\n";
    out << "noise.footprint_amplitude = " << fmt(cfg.noise.footprint_amplitude) << "\n";
    out << "noise.gaussian_sigma = " << fmt(cfg.noise.gaussian_sigma) << "\n";
    out << "noise.seed = " << cfg.noise.seed << "\n";
    out << "noise.footprint_period = " << cfg.noise.footprint_period << "\n";
    out << "noise.footprint_decay = " << fmt(cfg.noise.footprint_decay) << "\n";
    out << "# data\n";
    out << "data.n1 = " << cfg.data.n1 << "\n";
    out << "data.n2 = " << cfg.data.n2 << "\n";
    out << "data.n3 = " << cfg.data.n3 << "\n";
    out << "data.dt = " << fmt(cfg.data.dt) << "\n";
    out << "data.peak_freq = " << fmt(cfg.data.peak_freq) << "\n";
    for (const EventSpec& ev : cfg.data.events)
        out << "data.event = " << fmt(ev.intercept_time) << "," << fmt(ev.dip_inline) << ","
            << fmt(ev.dip_crossline) << "," << fmt(ev.amplitude) << "\n";
    return out.str();
}

} // namespace tlsm
