#ifndef POROCRACK_GEOMETRY_HPP
#define POROCRACK_GEOMETRY_HPP

#include <string>
#include <utility>
#include <vector>

#include "porocrack/types.hpp"

namespace porocrack {

// Edge the notch opens on. Only the two edges perpendicular to the loaded
// sides make sense for the tension experiment; a mouth on a loaded side
// would cut the Dirichlet boundary.
enum class NotchEdge { X_MIN, X_MAX };

NotchEdge notch_edge_from_name(const std::string& name);  // "x_min" | "x_max"
const char* notch_edge_name(NotchEdge e);

// Square plate with a v-notch along the bisector plane y = side_length/2,
// opening on notch_edge and reaching notch_depth into the plate; the tip is
// a sharp edge through the thickness. Lengths in mm, angle in degrees.
struct NotchedPlateGeometry {
    double side_length = 100.0;
    double thickness = 10.0;
    double notch_angle_deg = 2.0;
    double notch_depth = 50.0;
    NotchEdge notch_edge = NotchEdge::X_MIN;

    void validate() const;  // throws ConfigError

    double bisector_y() const { return 0.5 * side_length; }
    double mid_z() const { return 0.5 * thickness; }
    double ligament() const { return side_length - notch_depth; }
    double tip_x() const {
        return notch_edge == NotchEdge::X_MIN ? notch_depth : side_length - notch_depth;
    }
    // +1 when the ligament extends toward +x, -1 otherwise
    double ligament_dir() const { return notch_edge == NotchEdge::X_MIN ? 1.0 : -1.0; }
    // crack-tip edge midpoint, the r = 0 sampling point
    Vec3 tip_point() const { return {tip_x(), bisector_y(), mid_z()}; }
    // half-opening of the notch at in-plane distance d behind the tip
    double flank_offset(double dist_to_tip) const;
};

// Sampling stations along the ray from the tip-edge midpoint into the
// ligament (+x). Depends only on the geometry, not on any mesh.
// Throws ConfigError on bad n_samples / r_max.
std::vector<std::pair<double, Vec3>> midline_points(const NotchedPlateGeometry& geom,
                                                    int n_samples, double r_max);

}  // namespace porocrack

#endif
