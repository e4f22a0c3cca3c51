#include "porocrack/line_sample.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "porocrack/errors.hpp"
#include "porocrack/reference_hex.hpp"

namespace porocrack {

namespace {
constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
}

LineSample sample_midline(const RecoveredFields& fields, const Mesh& mesh,
                          const std::vector<std::pair<double, Vec3>>& points) {
    LineSample line;
    line.rows.reserve(points.size());
    for (const auto& [r, p] : points) {
        Vec3 xi;
        const int e = locate_point(mesh, p, xi);
        if (e < 0)
            throw MeshError("sample_midline: point at r = " + std::to_string(r)
                            + " lies outside the mesh");
        double N[8];
        reference_hex::shape_values(xi, N);
        double eps22 = 0.0, T22 = 0.0, W = 0.0;
        for (int a = 0; a < 8; ++a) {
            const int n = mesh.elements[static_cast<size_t>(e)][static_cast<size_t>(a)];
            eps22 += N[a] * fields.strain_node[static_cast<size_t>(n)][1];
            T22 += N[a] * fields.stress_node[static_cast<size_t>(n)][1];
            W += N[a] * fields.energy_node[static_cast<size_t>(n)];
        }
        line.rows.push_back({r, eps22, T22, std::sqrt(kTwoPi * r) * T22, W});
    }
    return line;
}

SifEstimate estimate_sif(const LineSample& line, double r_lo, double r_hi) {
    if (!(r_lo > 0.0) || !(r_hi > r_lo))
        throw ConfigError("estimate_sif: window must satisfy 0 < r_lo < r_hi");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int n = 0;
    for (const auto& row : line.rows) {
        if (row.r < r_lo || row.r > r_hi) continue;
        sx += row.r;
        sy += row.sif_integrand;
        sxx += row.r * row.r;
        sxy += row.r * row.sif_integrand;
        ++n;
    }
    if (n < 3)
        throw ConfigError("estimate_sif: only " + std::to_string(n)
                          + " samples in the fit window, need at least 3");
    const double det = n * sxx - sx * sx;
    SifEstimate est;
    est.slope = (n * sxy - sx * sy) / det;
    est.K = (sy - est.slope * sx) / n;
    est.n_used = n;
    double ss = 0.0;
    for (const auto& row : line.rows) {
        if (row.r < r_lo || row.r > r_hi) continue;
        const double d = row.sif_integrand - (est.K + est.slope * row.r);
        ss += d * d;
    }
    est.rms = std::sqrt(ss / n);
    return est;
}

void export_csv(const LineSample& line, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "r_mm,eps22,T22_Pa,sif_integrand,W_Pa\n";
    char buf[256];
    for (const auto& row : line.rows) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g\n", row.r, row.eps22,
                      row.T22, row.sif_integrand, row.energy);
        out << buf;
    }
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace porocrack
