#ifndef POROCRACK_LINE_SAMPLE_HPP
#define POROCRACK_LINE_SAMPLE_HPP

#include <string>
#include <utility>
#include <vector>

#include "porocrack/recover.hpp"

namespace porocrack {

// Samples along the ray ahead of the crack tip; r = 0 is the tip-edge
// midpoint at mid-thickness.
struct LineSample {
    struct Row {
        double r;              // mm
        double eps22;
        double T22;            // Pa
        double sif_integrand;  // sqrt(2 pi r) T22, Pa mm^1/2
        double energy;         // W = eps : T, Pa
    };
    std::vector<Row> rows;
};

// Interpolates the nodal-averaged fields at the given points through the
// containing element's trilinear basis. Throws MeshError (with the offending
// r) when a point cannot be located.
LineSample sample_midline(const RecoveredFields& fields, const Mesh& mesh,
                          const std::vector<std::pair<double, Vec3>>& points);

struct SifEstimate {
    double K = 0.0;      // intercept at r = 0, Pa mm^1/2
    double slope = 0.0;  // fit slope, Pa mm^-1/2
    double rms = 0.0;    // RMS deviation of the fit
    int n_used = 0;
};

// Least-squares linear fit of sqrt(2 pi r) T22 against r over the window;
// K_I is the r = 0 intercept. Throws ConfigError with fewer than 3 samples
// in the window.
SifEstimate estimate_sif(const LineSample& line, double r_lo, double r_hi);

// header: r_mm,eps22,T22_Pa,sif_integrand,W_Pa ; 12 significant digits
void export_csv(const LineSample& line, const std::string& path);

}  // namespace porocrack

#endif
