#include "porocrack/reference_hex.hpp"

#include <cmath>

namespace porocrack {
namespace reference_hex {

std::array<Vec3, n_qp> gauss_points() {
    const double g = 1.0 / std::sqrt(3.0);
    std::array<Vec3, n_qp> pts;
    for (int k = 0; k < 2; ++k)
        for (int j = 0; j < 2; ++j)
            for (int i = 0; i < 2; ++i)
                pts[4 * k + 2 * j + i] = {i ? g : -g, j ? g : -g, k ? g : -g};
    return pts;
}

void shape_values(const Vec3& xi, double N[8]) {
    for (int a = 0; a < 8; ++a)
        N[a] = 0.125 * (1.0 + xi_n[a] * xi.x) * (1.0 + eta_n[a] * xi.y)
             * (1.0 + zeta_n[a] * xi.z);
}

void shape_gradients(const Vec3& xi, Vec3 dN[8]) {
    for (int a = 0; a < 8; ++a) {
        const double fx = 1.0 + xi_n[a] * xi.x;
        const double fy = 1.0 + eta_n[a] * xi.y;
        const double fz = 1.0 + zeta_n[a] * xi.z;
        dN[a] = {0.125 * xi_n[a] * fy * fz,
                 0.125 * eta_n[a] * fx * fz,
                 0.125 * zeta_n[a] * fx * fy};
    }
}

Mat3 jacobian(const std::array<Vec3, 8>& xs, const Vec3& xi) {
    Vec3 dN[8];
    shape_gradients(xi, dN);
    Mat3 J;
    for (int a = 0; a < 8; ++a)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) J(i, j) += xs[a][i] * dN[a][j];
    return J;
}

double map_gradients(const std::array<Vec3, 8>& xs, const Vec3& xi, Vec3 dN_dx[8]) {
    Vec3 dN[8];
    shape_gradients(xi, dN);
    Mat3 J;
    for (int a = 0; a < 8; ++a)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) J(i, j) += xs[a][i] * dN[a][j];
    const double detJ = J.det();
    const Mat3 Jinv = J.inverse();  // dxi/dx
    for (int a = 0; a < 8; ++a) {
        // dN/dx_i = dN/dxi_j * dxi_j/dx_i
        dN_dx[a] = {dN[a].x * Jinv(0, 0) + dN[a].y * Jinv(1, 0) + dN[a].z * Jinv(2, 0),
                    dN[a].x * Jinv(0, 1) + dN[a].y * Jinv(1, 1) + dN[a].z * Jinv(2, 1),
                    dN[a].x * Jinv(0, 2) + dN[a].y * Jinv(1, 2) + dN[a].z * Jinv(2, 2)};
    }
    return detJ;
}

Vec3 interpolate(const std::array<Vec3, 8>& values, const Vec3& xi) {
    double N[8];
    shape_values(xi, N);
    Vec3 r;
    for (int a = 0; a < 8; ++a) r += values[a] * N[a];
    return r;
}

bool locate_in_element(const std::array<Vec3, 8>& xs, const Vec3& p, Vec3& xi_out,
                       double tol) {
    Vec3 xi{0, 0, 0};
    for (int it = 0; it < 30; ++it) {
        const Vec3 x = interpolate(xs, xi);
        const Vec3 res = x - p;
        if (res.norm() < 1e-12 * (1.0 + p.norm())) break;
        const Mat3 J = jacobian(xs, xi);
        if (std::abs(J.det()) < 1e-300) return false;
        const Vec3 dxi = J.inverse().apply(res);
        xi = xi - dxi;
        if (xi.norm() > 10.0) return false;  // diverging: far outside
    }
    if (std::abs(xi.x) > 1.0 + tol || std::abs(xi.y) > 1.0 + tol || std::abs(xi.z) > 1.0 + tol)
        return false;
    xi_out = xi;
    return true;
}

}  // namespace reference_hex
}  // namespace porocrack
