#ifndef POROCRACK_CONFIG_HPP
#define POROCRACK_CONFIG_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "porocrack/geometry.hpp"
#include "porocrack/material.hpp"
#include "porocrack/picard.hpp"

namespace porocrack {

// Full run description. The defaults reproduce the reference experiment:
// 100 x 100 x 10 mm plate, 2 degree notch to the center, E = 1e4 Pa,
// nu = 0.3, +/-1 mm tension, beta swept over {-30 ... 30}.
struct RunConfig {
    NotchedPlateGeometry geometry;

    double E = 1.0e4;
    double nu = 0.3;
    std::optional<double> rho0;

    std::vector<double> betas{-30, -20, -10, 0, 10, 20, 30};

    double uy_low = -1.0;
    double uy_high = 1.0;

    SolverConfig solver;

    std::array<int, 3> n_coarse{12, 12, 4};
    double grading = 2.0;
    int tip_levels = 3;

    int sample_count = 201;
    double sample_r_max = 30.0;
    double fit_r_lo = 0.5;
    double fit_r_hi = 5.0;

    std::string out_dir = "out";
    bool write_vtk = false;

    MaterialParams material(double beta) const {
        MaterialParams p;
        p.E = E;
        p.nu = nu;
        p.beta = beta;
        p.rho0 = rho0;
        return p;
    }

    void validate() const;  // throws ConfigError naming the offending key
};

// Line-oriented `section.key = value` text; '#' starts a comment; unknown
// keys are rejected with their line number.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// Canonical dump; parse_config_text(dump_config(c)) reproduces c exactly.
std::string dump_config(const RunConfig& config);

}  // namespace porocrack

#endif
