#ifndef POROCRACK_REFERENCE_HEX_HPP
#define POROCRACK_REFERENCE_HEX_HPP

#include <array>

#include "porocrack/types.hpp"

namespace porocrack {

// Trilinear 8-node hex on [-1,1]^3 with 2x2x2 Gauss quadrature.
namespace reference_hex {

// node coordinates; same ordering as Mesh::elements
constexpr double xi_n[8] = {-1, 1, 1, -1, -1, 1, 1, -1};
constexpr double eta_n[8] = {-1, -1, 1, 1, -1, -1, 1, 1};
constexpr double zeta_n[8] = {-1, -1, -1, -1, 1, 1, 1, 1};

constexpr int n_qp = 8;

// 2x2x2 Gauss points (+-1/sqrt(3), weight 1); index bits (i,j,k) -> q = 4k+2j+i
std::array<Vec3, n_qp> gauss_points();

void shape_values(const Vec3& xi, double N[8]);
// gradients with respect to the reference coordinates
void shape_gradients(const Vec3& xi, Vec3 dN[8]);

// Geometry factors of the isoparametric map at reference point xi:
// fills physical-space gradients dN_dx and returns det(J).
double map_gradients(const std::array<Vec3, 8>& xs, const Vec3& xi, Vec3 dN_dx[8]);

// Jacobian matrix J_ij = d x_i / d xi_j at reference point xi
Mat3 jacobian(const std::array<Vec3, 8>& xs, const Vec3& xi);

// trilinear interpolation of nodal values
Vec3 interpolate(const std::array<Vec3, 8>& values, const Vec3& xi);

// Newton inversion of the isoparametric map; returns false when the point
// is outside the element (|xi| > 1 + tol after convergence) or the Newton
// iteration fails.
bool locate_in_element(const std::array<Vec3, 8>& xs, const Vec3& p, Vec3& xi_out,
                       double tol = 1e-8);

}  // namespace reference_hex

}  // namespace porocrack

#endif
