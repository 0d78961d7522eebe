#include "tumor/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "tumor/errors.hpp"

namespace tumor {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& v, const std::string& where) {
    try {
        std::size_t pos = 0;
        double d = std::stod(v, &pos);
        if (trim(v.substr(pos)).empty()) return d;
    } catch (const std::exception&) {
    }
    throw ConfigError("parse-error: bad number '" + v + "' for " + where);
}

long parse_int(const std::string& v, const std::string& where) {
    try {
        std::size_t pos = 0;
        long d = std::stol(v, &pos);
        if (trim(v.substr(pos)).empty()) return d;
    } catch (const std::exception&) {
    }
    throw ConfigError("parse-error: bad integer '" + v + "' for " + where);
}

} // namespace

MotionSpec parse_motion_spec(const std::string& text) {
    MotionSpec m;
    const std::string t = trim(text);
    if (t == "static") {
        m.kind = "static";
        return m;
    }
    const auto open = t.find('(');
    if (open == std::string::npos || t.back() != ')')
        throw ConfigError("parse-error: bad motion preset '" + t +
                          "' (expected static, rotation(rate), expansion(rate, r_support))");
    const std::string name = trim(t.substr(0, open));
    std::string args = t.substr(open + 1, t.size() - open - 2);
    std::vector<double> vals;
    std::stringstream ss(args);
    std::string item;
    while (std::getline(ss, item, ','))
        vals.push_back(parse_double(item, "motion preset argument"));
    if (name == "rotation" && vals.size() == 1) {
        m.kind = "rotation";
        m.rate = vals[0];
    } else if (name == "expansion" && (vals.size() == 1 || vals.size() == 2)) {
        m.kind = "expansion";
        m.rate = vals[0];
        if (vals.size() == 2) m.r_support = vals[1];
    } else {
        throw ConfigError("parse-error: bad motion preset '" + t + "'");
    }
    return m;
}

std::string format_motion_spec(const MotionSpec& m) {
    if (m.kind == "static") return "static";
    if (m.kind == "rotation") return "rotation(" + fmt(m.rate) + ")";
    return "expansion(" + fmt(m.rate) + ", " + fmt(m.r_support) + ")";
}

void RunConfig::finalize() {
    if (initial.interface_radius <= 0.0) initial.interface_radius = 0.4 * grid.R;
    if (initial.species_radius <= 0.0) initial.species_radius = 0.35 * grid.R;
    if (motion.kind != "static" && motion.r_support <= 0.0) motion.r_support = 0.9 * grid.R;
    penalty.w = width_cells * spacing();
}

void RunConfig::validate() const {
    if (grid.d != 2 && grid.d != 3) throw ConfigError("validation-error: d must be 2 or 3");
    if (grid.N < 8) throw ConfigError("validation-error: N >= 8 required");
    if (!(grid.R > 0)) throw ConfigError("validation-error: R > 0 required");
    phys.validate();
    rates.validate();
    if (!(penalty.m > 1.5)) throw ConfigError("validation-error: m > 3/2 required");
    if (!(penalty.beta >= 2.0)) throw ConfigError("validation-error: beta >= 2 required");
    penalty.validate();
    if (!(width_cells >= 1.5))
        throw ConfigError("validation-error: width_cells >= 1.5 required");

    if (motion.kind != "static" && motion.kind != "rotation" && motion.kind != "expansion")
        throw ConfigError("validation-error: unknown motion preset '" + motion.kind + "'");
    if (motion.kind != "static" && motion.r_support > grid.R + 1e-12)
        throw ConfigError("validation-error: motion support must satisfy r_support <= R");

    if (initial.preset == "tumor") {
        if (!(initial.interface_radius > 0 && initial.interface_radius < grid.R))
            throw ConfigError("validation-error: tumor interface must lie inside |x| < R");
        if (!(initial.species_radius > 0 &&
              initial.species_radius <= initial.interface_radius))
            throw ConfigError(
                "validation-error: species support must lie inside the initial tumor");
        if (initial.amp_P < 0 || initial.amp_Q < 0 || initial.amp_D < 0 || initial.amp_C < 0)
            throw ConfigError("validation-error: initial amplitudes must be nonnegative");
        if (initial.amp_P + initial.amp_Q + initial.amp_D <= 0)
            throw ConfigError("validation-error: species must not be identically zero");
        if (initial.amp_C > 1.0)
            throw ConfigError("validation-error: C_0 <= C_bar required (amp_C <= 1)");
    } else if (initial.preset == "rest") {
        if (!(initial.rest_density > 0))
            throw ConfigError("validation-error: rest preset needs rest_density > 0");
        if (rates.K_B != 0 || rates.K_Q != 0 || rates.K_P != 0 || rates.K_A != 0 ||
            rates.K_D != 0 || rates.K_R != 0)
            throw ConfigError("validation-error: rest preset requires all rates zero");
        if (motion.kind != "static")
            throw ConfigError("validation-error: rest preset requires static motion");
    } else if (initial.preset != "zero") {
        throw ConfigError("validation-error: unknown initial preset '" + initial.preset + "'");
    }

    if (!(run.t_end > 0)) throw ConfigError("validation-error: t_end > 0 required");
    if (!(run.cfl > 0 && run.cfl <= 1)) throw ConfigError("validation-error: cfl in (0,1]");
    if (!(run.dt_max > 0)) throw ConfigError("validation-error: dt_max > 0 required");
    if (run.output_interval < 0)
        throw ConfigError("validation-error: output_interval >= 0 required");
    if (output.snapshot_format != "grid-csv" && output.snapshot_format != "vtk-legacy")
        throw ConfigError("validation-error: snapshot_format must be grid-csv or vtk-legacy");
}

RunConfig parse_config(const std::string& text, const std::string& source_name) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;

    auto fail = [&](const std::string& msg) -> void {
        throw ConfigError("parse-error at " + source_name + ":" + std::to_string(lineno) +
                          ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail("unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "grid" && section != "physics" && section != "rates" &&
                section != "penalty" && section != "motion" && section != "initial" &&
                section != "run" && section != "output")
                fail("unknown section '" + section + "'");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) fail("empty key");
        if (val.empty()) fail("empty value for key '" + key + "'");
        const std::string where = "[" + section + "] " + key;

        try {
            if (section == "grid") {
                if (key == "R") cfg.grid.R = parse_double(val, where);
                else if (key == "N") cfg.grid.N = static_cast<int>(parse_int(val, where));
                else if (key == "d") cfg.grid.d = static_cast<int>(parse_int(val, where));
                else fail("unknown key '" + key + "' in [grid]");
            } else if (section == "physics") {
                if (key == "mu") cfg.phys.mu = parse_double(val, where);
                else if (key == "nu") cfg.phys.nu = parse_double(val, where);
                else if (key == "K") cfg.phys.K_perm = parse_double(val, where);
                else fail("unknown key '" + key + "' in [physics]");
            } else if (section == "rates") {
                if (key == "K_B") cfg.rates.K_B = parse_double(val, where);
                else if (key == "K_Q") cfg.rates.K_Q = parse_double(val, where);
                else if (key == "K_P") cfg.rates.K_P = parse_double(val, where);
                else if (key == "K_A") cfg.rates.K_A = parse_double(val, where);
                else if (key == "K_D") cfg.rates.K_D = parse_double(val, where);
                else if (key == "K_R") cfg.rates.K_R = parse_double(val, where);
                else if (key == "C_bar") cfg.rates.C_bar = parse_double(val, where);
                else fail("unknown key '" + key + "' in [rates]");
            } else if (section == "penalty") {
                if (key == "epsilon") cfg.penalty.epsilon = parse_double(val, where);
                else if (key == "omega") cfg.penalty.omega = parse_double(val, where);
                else if (key == "delta") cfg.penalty.delta = parse_double(val, where);
                else if (key == "beta") cfg.penalty.beta = parse_double(val, where);
                else if (key == "m") cfg.penalty.m = parse_double(val, where);
                else if (key == "width_cells") cfg.width_cells = parse_double(val, where);
                else if (key == "rho_floor") cfg.penalty.rho_floor = parse_double(val, where);
                else if (key == "rho_vac") cfg.penalty.rho_vac = parse_double(val, where);
                else fail("unknown key '" + key + "' in [penalty]");
            } else if (section == "motion") {
                if (key == "preset") cfg.motion = parse_motion_spec(val);
                else fail("unknown key '" + key + "' in [motion]");
            } else if (section == "initial") {
                if (key == "preset") cfg.initial.preset = val;
                else if (key == "interface_radius")
                    cfg.initial.interface_radius = parse_double(val, where);
                else if (key == "species_radius")
                    cfg.initial.species_radius = parse_double(val, where);
                else if (key == "amp_P") cfg.initial.amp_P = parse_double(val, where);
                else if (key == "amp_Q") cfg.initial.amp_Q = parse_double(val, where);
                else if (key == "amp_D") cfg.initial.amp_D = parse_double(val, where);
                else if (key == "amp_C") cfg.initial.amp_C = parse_double(val, where);
                else if (key == "rest_density")
                    cfg.initial.rest_density = parse_double(val, where);
                else fail("unknown key '" + key + "' in [initial]");
            } else if (section == "run") {
                if (key == "t_end") cfg.run.t_end = parse_double(val, where);
                else if (key == "cfl") cfg.run.cfl = parse_double(val, where);
                else if (key == "dt_max") cfg.run.dt_max = parse_double(val, where);
                else if (key == "output_interval")
                    cfg.run.output_interval = parse_double(val, where);
                else if (key == "seed")
                    cfg.run.seed = static_cast<unsigned long>(parse_int(val, where));
                else fail("unknown key '" + key + "' in [run]");
            } else if (section == "output") {
                if (key == "dir") cfg.output.dir = val;
                else if (key == "prefix") cfg.output.prefix = val;
                else if (key == "snapshot_format") cfg.output.snapshot_format = val;
                else fail("unknown key '" + key + "' in [output]");
            } else {
                fail("key '" + key + "' outside any section");
            }
        } catch (const ConfigError& e) {
            // Re-anchor value-format errors to the offending line.
            std::string msg = e.what();
            if (msg.rfind("parse-error at", 0) == 0) throw;
            fail(msg);
        }
    }

    cfg.finalize();
    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

std::string dump_config(const RunConfig& cfg) {
    std::ostringstream o;
    o << "[grid]\n"
      << "R = " << fmt(cfg.grid.R) << "\n"
      << "N = " << cfg.grid.N << "\n"
      << "d = " << cfg.grid.d << "\n"
      << "[physics]\n"
      << "mu = " << fmt(cfg.phys.mu) << "\n"
      << "nu = " << fmt(cfg.phys.nu) << "\n"
      << "K = " << fmt(cfg.phys.K_perm) << "\n"
      << "[rates]\n"
      << "K_B = " << fmt(cfg.rates.K_B) << "\n"
      << "K_Q = " << fmt(cfg.rates.K_Q) << "\n"
      << "K_P = " << fmt(cfg.rates.K_P) << "\n"
      << "K_A = " << fmt(cfg.rates.K_A) << "\n"
      << "K_D = " << fmt(cfg.rates.K_D) << "\n"
      << "K_R = " << fmt(cfg.rates.K_R) << "\n"
      << "C_bar = " << fmt(cfg.rates.C_bar) << "\n"
      << "[penalty]\n"
      << "epsilon = " << fmt(cfg.penalty.epsilon) << "\n"
      << "omega = " << fmt(cfg.penalty.omega) << "\n"
      << "delta = " << fmt(cfg.penalty.delta) << "\n"
      << "beta = " << fmt(cfg.penalty.beta) << "\n"
      << "m = " << fmt(cfg.penalty.m) << "\n"
      << "width_cells = " << fmt(cfg.width_cells) << "\n"
      << "rho_floor = " << fmt(cfg.penalty.rho_floor) << "\n"
      << "rho_vac = " << fmt(cfg.penalty.rho_vac) << "\n"
      << "[motion]\n"
      << "preset = " << format_motion_spec(cfg.motion) << "\n"
      << "[initial]\n"
      << "preset = " << cfg.initial.preset << "\n"
      << "interface_radius = " << fmt(cfg.initial.interface_radius) << "\n"
      << "species_radius = " << fmt(cfg.initial.species_radius) << "\n"
      << "amp_P = " << fmt(cfg.initial.amp_P) << "\n"
      << "amp_Q = " << fmt(cfg.initial.amp_Q) << "\n"
      << "amp_D = " << fmt(cfg.initial.amp_D) << "\n"
      << "amp_C = " << fmt(cfg.initial.amp_C) << "\n"
      << "rest_density = " << fmt(cfg.initial.rest_density) << "\n"
      << "[run]\n"
      << "t_end = " << fmt(cfg.run.t_end) << "\n"
      << "cfl = " << fmt(cfg.run.cfl) << "\n"
      << "dt_max = " << fmt(cfg.run.dt_max) << "\n"
      << "output_interval = " << fmt(cfg.run.output_interval) << "\n"
      << "seed = " << cfg.run.seed << "\n"
      << "[output]\n"
      << "dir = " << cfg.output.dir << "\n"
      << "prefix = " << cfg.output.prefix << "\n"
      << "snapshot_format = " << cfg.output.snapshot_format << "\n";
    return o.str();
}

} // namespace tumor
