#include "porocrack/geometry.hpp"

#include <cmath>
#include <string>

#include "porocrack/errors.hpp"

namespace porocrack {

static constexpr double kPi = 3.14159265358979323846;

NotchEdge notch_edge_from_name(const std::string& name) {
    if (name == "x_min") return NotchEdge::X_MIN;
    if (name == "x_max") return NotchEdge::X_MAX;
    throw ConfigError("geometry.notch_edge must be x_min or x_max, got '" + name + "'");
}

const char* notch_edge_name(NotchEdge e) {
    return e == NotchEdge::X_MIN ? "x_min" : "x_max";
}

void NotchedPlateGeometry::validate() const {
    if (!(side_length > 0.0))
        throw ConfigError("geometry.side must be positive");
    if (!(thickness > 0.0))
        throw ConfigError("geometry.thickness must be positive");
    if (!(notch_angle_deg > 0.0 && notch_angle_deg < 180.0))
        throw ConfigError("geometry.notch_angle must lie in (0, 180) degrees, got "
                          + std::to_string(notch_angle_deg));
    if (!(notch_depth > 0.0 && notch_depth <= 0.5 * side_length))
        throw ConfigError("geometry.notch_depth must lie in (0, side/2], got "
                          + std::to_string(notch_depth));
}

double NotchedPlateGeometry::flank_offset(double dist_to_tip) const {
    const double half_angle = 0.5 * notch_angle_deg * kPi / 180.0;
    return std::tan(half_angle) * dist_to_tip;
}

std::vector<std::pair<double, Vec3>> midline_points(const NotchedPlateGeometry& geom,
                                                    int n_samples, double r_max) {
    geom.validate();
    if (n_samples < 2)
        throw ConfigError("midline_points: n_samples must be >= 2");
    if (!(r_max > 0.0))
        throw ConfigError("midline_points: r_max must be positive");
    if (r_max > geom.ligament() + 1e-12 * geom.side_length)
        throw ConfigError("midline_points: r_max = " + std::to_string(r_max)
                          + " exceeds the ligament " + std::to_string(geom.ligament()));

    const Vec3 tip = geom.tip_point();
    const double dir = geom.ligament_dir();
    std::vector<std::pair<double, Vec3>> pts;
    pts.reserve(static_cast<size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const double r = r_max * static_cast<double>(i) / static_cast<double>(n_samples - 1);
        pts.emplace_back(r, Vec3{tip.x + dir * r, tip.y, tip.z});
    }
    return pts;
}

}  // namespace porocrack
