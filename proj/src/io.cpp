#include "tumor/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tumor/errors.hpp"

namespace tumor {

const char* const kDiagnosticsHeader =
    "t,mass_P,mass_Q,mass_D,mass_C,energy_total,c_max,"
    "leakage_P,leakage_Q,leakage_D,leakage_C,slip_norm_sq,nutrient_budget,"
    "mass_budget_P,mass_budget_Q,mass_budget_D";

namespace {
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_number(const std::string& tok, const std::string& path) {
    try {
        std::size_t pos = 0;
        double v = std::stod(tok, &pos);
        if (pos == tok.size()) return v;
    } catch (const std::exception&) {
    }
    throw IoError("malformed number '" + tok + "' in " + path);
}

std::string header_value(std::istream& in, const std::string& key, const std::string& path) {
    std::string line;
    if (!std::getline(in, line)) throw IoError("truncated snapshot header in " + path);
    const auto eq = line.find('=');
    if (eq == std::string::npos || line.substr(0, eq).find(key) == std::string::npos)
        throw IoError("expected '" + key + " = ...' in snapshot header of " + path);
    std::string v = line.substr(eq + 1);
    const auto b = v.find_first_not_of(" \t");
    return b == std::string::npos ? "" : v.substr(b);
}
} // namespace

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(target.parent_path(), ec);
    }
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("io-error: cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("io-error: failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("io-error: cannot rename into place: " + path);
    }
}

std::string diagnostics_csv(const std::vector<DiagnosticsRecord>& records) {
    std::ostringstream o;
    o << kDiagnosticsHeader << "\n";
    for (const auto& r : records) {
        o << fmt(r.t) << ',' << fmt(r.mass_P) << ',' << fmt(r.mass_Q) << ',' << fmt(r.mass_D)
          << ',' << fmt(r.mass_C) << ',' << fmt(r.energy_total) << ',' << fmt(r.c_max) << ','
          << fmt(r.leakage_P) << ',' << fmt(r.leakage_Q) << ',' << fmt(r.leakage_D) << ','
          << fmt(r.leakage_C) << ',' << fmt(r.slip_norm_sq) << ',' << fmt(r.nutrient_budget)
          << ',' << fmt(r.mass_budget_P) << ',' << fmt(r.mass_budget_Q) << ','
          << fmt(r.mass_budget_D) << "\n";
    }
    return o.str();
}

void write_diagnostics(const std::vector<DiagnosticsRecord>& records, const std::string& path) {
    atomic_write(path, diagnostics_csv(records));
}

std::string field_snapshot_grid_csv(const State& s) {
    const Grid& g = s.P.grid;
    std::ostringstream o;
    o << "# tumor-sim field snapshot\n";
    o << "format = grid-csv\n";
    o << "dim = " << g.dim << "\n";
    o << "N = " << g.n << "\n";
    o << "R = " << fmt(0.5 * g.half_width) << "\n";
    o << "time = " << fmt(s.t) << "\n";
    o << "fields = P,Q,D,C";
    for (int a = 0; a < g.dim; ++a) o << ",v_" << a;
    for (int a = 0; a < g.dim; ++a) o << ",m_" << a;
    o << ",phi\n";
    for (std::size_t c = 0; c < g.cells; ++c) {
        o << fmt(s.P[c]) << ',' << fmt(s.Q[c]) << ',' << fmt(s.D[c]) << ',' << fmt(s.C[c]);
        for (int a = 0; a < g.dim; ++a) o << ',' << fmt(s.vel.at(a, c));
        for (int a = 0; a < g.dim; ++a) o << ',' << fmt(s.mom.at(a, c));
        o << ',' << fmt(s.phi.phi[c]) << "\n";
    }
    return o.str();
}

namespace {
std::string field_snapshot_vtk(const State& s) {
    const Grid& g = s.P.grid;
    const int nz = g.dim == 3 ? g.n : 1;
    std::ostringstream o;
    o << "# vtk DataFile Version 3.0\n";
    o << "tumor-sim snapshot t=" << fmt(s.t) << "\n";
    o << "ASCII\n";
    o << "DATASET STRUCTURED_POINTS\n";
    o << "DIMENSIONS " << g.n << ' ' << g.n << ' ' << nz << "\n";
    o << "ORIGIN " << fmt(g.center(0)) << ' ' << fmt(g.center(0)) << ' '
      << (g.dim == 3 ? fmt(g.center(0)) : "0") << "\n";
    o << "SPACING " << fmt(g.h) << ' ' << fmt(g.h) << ' ' << fmt(g.h) << "\n";
    o << "POINT_DATA " << g.cells << "\n";
    auto scalar = [&](const char* name, const ScalarField& f) {
        o << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
        for (std::size_t c = 0; c < g.cells; ++c) o << fmt(f[c]) << "\n";
    };
    scalar("P", s.P);
    scalar("Q", s.Q);
    scalar("D", s.D);
    scalar("C", s.C);
    scalar("phi", s.phi.phi);
    o << "VECTORS velocity double\n";
    for (std::size_t c = 0; c < g.cells; ++c) {
        o << fmt(s.vel.at(0, c)) << ' ' << fmt(s.vel.at(1, c)) << ' '
          << (g.dim == 3 ? fmt(s.vel.at(2, c)) : "0") << "\n";
    }
    return o.str();
}
} // namespace

void write_field_snapshot(const State& s, const std::string& path, const std::string& format) {
    if (format == "grid-csv")
        atomic_write(path, field_snapshot_grid_csv(s));
    else if (format == "vtk-legacy")
        atomic_write(path, field_snapshot_vtk(s));
    else
        throw IoError("unknown snapshot format: " + format);
}

State read_field_snapshot(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open snapshot: " + path);
    std::string line;
    std::getline(in, line); // comment banner
    if (header_value(in, "format", path) != "grid-csv")
        throw IoError("only grid-csv snapshots can be reloaded: " + path);
    const int dim = static_cast<int>(parse_number(header_value(in, "dim", path), path));
    const int n = static_cast<int>(parse_number(header_value(in, "N", path), path));
    const double R = parse_number(header_value(in, "R", path), path);
    const double t = parse_number(header_value(in, "time", path), path);
    header_value(in, "fields", path); // names are fixed by the format

    State s(make_grid(R, n, dim));
    s.t = t;
    const std::size_t ncols = 4 + 2 * static_cast<std::size_t>(dim) + 1;
    for (std::size_t c = 0; c < s.P.grid.cells; ++c) {
        if (!std::getline(in, line)) throw IoError("truncated snapshot data in " + path);
        std::stringstream ss(line);
        std::string tok;
        std::vector<double> row;
        while (std::getline(ss, tok, ',')) row.push_back(parse_number(tok, path));
        if (row.size() != ncols) throw IoError("bad row width in " + path);
        std::size_t k = 0;
        s.P[c] = row[k++];
        s.Q[c] = row[k++];
        s.D[c] = row[k++];
        s.C[c] = row[k++];
        for (int a = 0; a < dim; ++a) s.vel.at(a, c) = row[k++];
        for (int a = 0; a < dim; ++a) s.mom.at(a, c) = row[k++];
        s.phi.phi[c] = row[k++];
    }
    return s;
}

} // namespace tumor
