#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "tumor/config.hpp"
#include "tumor/errors.hpp"
#include "tumor/io.hpp"

using namespace tumor;
namespace fs = std::filesystem;

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path temp_dir() {
    const fs::path p = fs::temp_directory_path() / "tumor_io_test";
    fs::create_directories(p);
    return p;
}
} // namespace

TEST_CASE("empty config yields finalized defaults") {
    const RunConfig cfg = parse_config("", "<test>");
    CHECK(cfg.grid.N == 64);
    CHECK(cfg.grid.d == 2);
    CHECK(cfg.grid.R == 1.0);
    CHECK(cfg.initial.interface_radius == doctest::Approx(0.4));
    CHECK(cfg.initial.species_radius == doctest::Approx(0.35));
    CHECK(cfg.penalty.w == doctest::Approx(2.0 * cfg.spacing()));
}

TEST_CASE("validation rejects bad parameter combinations with named rules") {
    CHECK_THROWS_WITH_AS(parse_config("[penalty]\nm = 1.2\n", "<test>"),
                         doctest::Contains("m > 3/2 required"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[grid]\nd = 4\n", "<test>"),
                         doctest::Contains("d must be 2 or 3"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[penalty]\nbeta = 1.0\n", "<test>"),
                         doctest::Contains("beta >= 2"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[initial]\namp_C = 1.5\n", "<test>"),
                         doctest::Contains("amp_C <= 1"), ConfigError);
}

TEST_CASE("unknown sections and keys are parse errors naming the offender") {
    CHECK_THROWS_WITH_AS(parse_config("[nosuch]\nx = 1\n", "<test>"),
                         doctest::Contains("unknown section 'nosuch'"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[grid]\nbogus = 1\n", "<test>"),
                         doctest::Contains("unknown key 'bogus'"), ConfigError);
    // The line number of the offending line is part of the message.
    CHECK_THROWS_WITH_AS(parse_config("[grid]\n\nN = oops\n", "<test>"),
                         doctest::Contains("<test>:3"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("x = 1\n", "<test>"),
                         doctest::Contains("outside any section"), ConfigError);
}

TEST_CASE("dump/parse round trip is byte-stable") {
    RunConfig cfg = parse_config("[grid]\nN = 32\n[penalty]\nepsilon = 0.003\n"
                                 "[motion]\npreset = rotation(0.7)\n",
                                 "<test>");
    const std::string d1 = dump_config(cfg);
    const RunConfig cfg2 = parse_config(d1, "<dump>");
    const std::string d2 = dump_config(cfg2);
    CHECK(d1 == d2);
    CHECK(cfg2.grid.N == 32);
    CHECK(cfg2.penalty.epsilon == 0.003);
    CHECK(cfg2.motion.kind == "rotation");
    CHECK(cfg2.motion.rate == 0.7);
}

TEST_CASE("motion spec parse and format") {
    const MotionSpec st = parse_motion_spec("static");
    CHECK(st.kind == "static");
    CHECK(format_motion_spec(st) == "static");

    const MotionSpec rot = parse_motion_spec("rotation(0.5)");
    CHECK(rot.kind == "rotation");
    CHECK(rot.rate == 0.5);

    const MotionSpec ex = parse_motion_spec("expansion(0.1, 0.9)");
    CHECK(ex.kind == "expansion");
    CHECK(ex.rate == 0.1);
    CHECK(ex.r_support == 0.9);
    CHECK(parse_motion_spec(format_motion_spec(ex)).r_support == 0.9);

    CHECK_THROWS_AS(parse_motion_spec("spin(1.0)"), ConfigError);
    CHECK_THROWS_AS(parse_motion_spec("rotation(1.0, 2.0)"), ConfigError);
    CHECK_THROWS_AS(parse_motion_spec("rotation"), ConfigError);
}

TEST_CASE("diagnostics CSV serialization") {
    CHECK(diagnostics_csv({}) == std::string(kDiagnosticsHeader) + "\n");

    DiagnosticsRecord r;
    r.t = 0.5;
    r.mass_P = 1.0 / 3.0;
    const std::string csv = diagnostics_csv({r});
    CHECK(csv.find("0.5,") != std::string::npos);
    CHECK(csv.find("0.33333333333333331") != std::string::npos);
    // header + one row, trailing newline
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}

TEST_CASE("grid-csv snapshot round trip is bit-exact") {
    const Grid g = make_grid(0.7, 8, 3);
    State s(g);
    s.t = 0.375;
    for (std::size_t c = 0; c < g.cells; ++c) {
        const auto x = g.cell_center(c);
        s.P[c] = 0.1 + 0.01 * static_cast<double>(c);
        s.Q[c] = x[0] * x[1];
        s.D[c] = 1.0 / (1.0 + static_cast<double>(c));
        s.C[c] = x[2];
        for (int a = 0; a < g.dim; ++a) {
            s.vel.at(a, c) = std::sin(static_cast<double>(a) + x[0]);
            s.mom.at(a, c) = s.P[c] * s.vel.at(a, c);
        }
    }
    s.phi = LevelSetField(s.Q);

    const fs::path path = temp_dir() / "snap.csv";
    write_field_snapshot(s, path.string(), "grid-csv");
    const State r = read_field_snapshot(path.string());
    CHECK(r.t == s.t);
    CHECK(r.P.grid == g);
    CHECK(r.P.values == s.P.values);
    CHECK(r.Q.values == s.Q.values);
    CHECK(r.D.values == s.D.values);
    CHECK(r.C.values == s.C.values);
    CHECK(r.vel.values == s.vel.values);
    CHECK(r.mom.values == s.mom.values);
    CHECK(r.phi.phi.values == s.phi.phi.values);
    fs::remove(path);
}

TEST_CASE("vtk snapshot has the legacy header and is not empty") {
    const Grid g = make_grid(1.0, 8, 2);
    State s(g);
    const fs::path path = temp_dir() / "snap.vtk";
    write_field_snapshot(s, path.string(), "vtk-legacy");
    const std::string text = slurp(path.string());
    CHECK(text.rfind("# vtk DataFile Version", 0) == 0);
    CHECK(text.find("STRUCTURED_POINTS") != std::string::npos);
    fs::remove(path);
}

TEST_CASE("atomic write creates parent directories and replaces content") {
    const fs::path dir = temp_dir() / "nested" / "deeper";
    const fs::path path = dir / "file.txt";
    atomic_write(path.string(), "first\n");
    CHECK(slurp(path.string()) == "first\n");
    atomic_write(path.string(), "second\n");
    CHECK(slurp(path.string()) == "second\n");
    fs::remove_all(temp_dir() / "nested");
}

TEST_CASE("missing files raise IoError") {
    CHECK_THROWS_AS(load_config("/nonexistent/config.cfg"), IoError);
    CHECK_THROWS_AS(read_field_snapshot("/nonexistent/snap.csv"), IoError);
}
