#include "porocrack/config.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "porocrack/errors.hpp"

namespace porocrack {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, int line) {
    try {
        size_t pos;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return d;
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line) + ": bad number '" + v + "'");
    }
}

int parse_int(const std::string& v, int line) {
    try {
        size_t pos;
        const int i = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return i;
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line) + ": bad integer '" + v + "'");
    }
}

bool parse_bool(const std::string& v, int line) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ConfigError("line " + std::to_string(line) + ": bad bool '" + v + "'");
}

std::vector<double> parse_list(const std::string& v, int line) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_double(item, line));
    }
    return out;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void RunConfig::validate() const {
    geometry.validate();
    material(0.0).validate();
    solver.validate();
    for (int d = 0; d < 3; ++d)
        if (n_coarse[static_cast<size_t>(d)] < 2)
            throw ConfigError("mesh.nx/ny/nz must be >= 2");
    if (!(grading >= 1.0)) throw ConfigError("mesh.grading must be >= 1");
    if (tip_levels < 0) throw ConfigError("mesh.tip_levels must be >= 0");
    if (betas.empty()) throw ConfigError("sweep.betas must be nonempty");
    for (double b : betas) {
        MaterialParams p = material(b);
        p.validate();
    }
    if (sample_count < 2) throw ConfigError("sample.count must be >= 2");
    if (!(sample_r_max > 0.0)) throw ConfigError("sample.r_max must be positive");
    if (sample_r_max > geometry.ligament())
        throw ConfigError("sample.r_max exceeds the ligament "
                          + std::to_string(geometry.ligament()));
    if (!(fit_r_lo > 0.0 && fit_r_hi > fit_r_lo))
        throw ConfigError("sample.fit_r_lo/fit_r_hi must satisfy 0 < lo < hi");
    if (out_dir.empty()) throw ConfigError("output.dir must be nonempty");
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig c;
    using Setter = std::function<void(const std::string&, int)>;
    const std::map<std::string, Setter> keys = {
        {"geometry.side", [&](const std::string& v, int l) { c.geometry.side_length = parse_double(v, l); }},
        {"geometry.thickness", [&](const std::string& v, int l) { c.geometry.thickness = parse_double(v, l); }},
        {"geometry.notch_angle", [&](const std::string& v, int l) { c.geometry.notch_angle_deg = parse_double(v, l); }},
        {"geometry.notch_depth", [&](const std::string& v, int l) { c.geometry.notch_depth = parse_double(v, l); }},
        {"geometry.notch_edge", [&](const std::string& v, int) { c.geometry.notch_edge = notch_edge_from_name(v); }},
        {"material.E", [&](const std::string& v, int l) { c.E = parse_double(v, l); }},
        {"material.nu", [&](const std::string& v, int l) { c.nu = parse_double(v, l); }},
        {"material.rho0", [&](const std::string& v, int l) { c.rho0 = parse_double(v, l); }},
        {"sweep.betas", [&](const std::string& v, int l) { c.betas = parse_list(v, l); }},
        {"load.uy_low", [&](const std::string& v, int l) { c.uy_low = parse_double(v, l); }},
        {"load.uy_high", [&](const std::string& v, int l) { c.uy_high = parse_double(v, l); }},
        {"solver.tol_rel", [&](const std::string& v, int l) { c.solver.tol_rel = parse_double(v, l); }},
        {"solver.max_picard", [&](const std::string& v, int l) { c.solver.max_picard = parse_int(v, l); }},
        {"solver.linear", [&](const std::string& v, int) { c.solver.linear_solver = linear_solver_from_name(v); }},
        {"solver.cg_tol", [&](const std::string& v, int l) { c.solver.cg_tol = parse_double(v, l); }},
        {"solver.cg_max_iter", [&](const std::string& v, int l) { c.solver.cg_max_iter = parse_int(v, l); }},
        {"solver.damping", [&](const std::string& v, int l) { c.solver.damping = parse_double(v, l); }},
        {"solver.small_grad_warn", [&](const std::string& v, int l) { c.solver.small_grad_warn = parse_double(v, l); }},
        {"mesh.nx", [&](const std::string& v, int l) { c.n_coarse[0] = parse_int(v, l); }},
        {"mesh.ny", [&](const std::string& v, int l) { c.n_coarse[1] = parse_int(v, l); }},
        {"mesh.nz", [&](const std::string& v, int l) { c.n_coarse[2] = parse_int(v, l); }},
        {"mesh.grading", [&](const std::string& v, int l) { c.grading = parse_double(v, l); }},
        {"mesh.tip_levels", [&](const std::string& v, int l) { c.tip_levels = parse_int(v, l); }},
        {"sample.count", [&](const std::string& v, int l) { c.sample_count = parse_int(v, l); }},
        {"sample.r_max", [&](const std::string& v, int l) { c.sample_r_max = parse_double(v, l); }},
        {"sample.fit_r_lo", [&](const std::string& v, int l) { c.fit_r_lo = parse_double(v, l); }},
        {"sample.fit_r_hi", [&](const std::string& v, int l) { c.fit_r_hi = parse_double(v, l); }},
        {"output.dir", [&](const std::string& v, int) { c.out_dir = v; }},
        {"output.vtk", [&](const std::string& v, int l) { c.write_vtk = parse_bool(v, l); }},
    };

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'section.key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        auto it = keys.find(key);
        if (it == keys.end())
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        it->second(value, lineno);
    }
    c.validate();
    return c;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string dump_config(const RunConfig& c) {
    std::ostringstream o;
    o << "geometry.side = " << fmt(c.geometry.side_length) << "\n";
    o << "geometry.thickness = " << fmt(c.geometry.thickness) << "\n";
    o << "geometry.notch_angle = " << fmt(c.geometry.notch_angle_deg) << "\n";
    o << "geometry.notch_depth = " << fmt(c.geometry.notch_depth) << "\n";
    o << "geometry.notch_edge = " << notch_edge_name(c.geometry.notch_edge) << "\n";
    o << "material.E = " << fmt(c.E) << "\n";
    o << "material.nu = " << fmt(c.nu) << "\n";
    if (c.rho0) o << "material.rho0 = " << fmt(*c.rho0) << "\n";
    o << "sweep.betas = ";
    for (size_t i = 0; i < c.betas.size(); ++i) o << (i ? "," : "") << fmt(c.betas[i]);
    o << "\n";
    o << "load.uy_low = " << fmt(c.uy_low) << "\n";
    o << "load.uy_high = " << fmt(c.uy_high) << "\n";
    o << "solver.tol_rel = " << fmt(c.solver.tol_rel) << "\n";
    o << "solver.max_picard = " << c.solver.max_picard << "\n";
    o << "solver.linear = " << linear_solver_name(c.solver.linear_solver) << "\n";
    o << "solver.cg_tol = " << fmt(c.solver.cg_tol) << "\n";
    o << "solver.cg_max_iter = " << c.solver.cg_max_iter << "\n";
    o << "solver.damping = " << fmt(c.solver.damping) << "\n";
    o << "solver.small_grad_warn = " << fmt(c.solver.small_grad_warn) << "\n";
    o << "mesh.nx = " << c.n_coarse[0] << "\n";
    o << "mesh.ny = " << c.n_coarse[1] << "\n";
    o << "mesh.nz = " << c.n_coarse[2] << "\n";
    o << "mesh.grading = " << fmt(c.grading) << "\n";
    o << "mesh.tip_levels = " << c.tip_levels << "\n";
    o << "sample.count = " << c.sample_count << "\n";
    o << "sample.r_max = " << fmt(c.sample_r_max) << "\n";
    o << "sample.fit_r_lo = " << fmt(c.fit_r_lo) << "\n";
    o << "sample.fit_r_hi = " << fmt(c.fit_r_hi) << "\n";
    o << "output.dir = " << c.out_dir << "\n";
    o << "output.vtk = " << (c.write_vtk ? "true" : "false") << "\n";
    return o.str();
}

}  // namespace porocrack
