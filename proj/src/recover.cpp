#include "porocrack/recover.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "porocrack/errors.hpp"
#include "porocrack/reference_hex.hpp"

namespace porocrack {

RecoveredFields recover_fields(const Mesh& mesh, const DisplacementField& u,
                               const MaterialParams& params) {
    static const auto qps = reference_hex::gauss_points();
    const int ne = mesh.element_count();
    const int nn = mesh.node_count();

    RecoveredFields f;
    f.strain_qp.resize(static_cast<size_t>(ne));
    f.stress_qp.resize(static_cast<size_t>(ne));
    f.energy_qp.resize(static_cast<size_t>(ne));
    f.den_qp.resize(static_cast<size_t>(ne));
    std::vector<std::array<double, 8>> wq(static_cast<size_t>(ne));  // qp volumes

    std::vector<int> bad_element(static_cast<size_t>(ne), -1);

#pragma omp parallel for schedule(static)
    for (int e = 0; e < ne; ++e) {
        const auto xs = mesh.element_coords(e);
        for (int q = 0; q < reference_hex::n_qp; ++q) {
            Vec3 g[8];
            const double detJ = reference_hex::map_gradients(xs, qps[static_cast<size_t>(q)], g);
            Mat3 grad;
            for (int a = 0; a < 8; ++a) {
                const int n = mesh.elements[static_cast<size_t>(e)][static_cast<size_t>(a)];
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        grad(i, j) += u[static_cast<size_t>(3 * n + i)] * g[a][j];
            }
            const SymTensor3 eps = strain_from_displacement_gradient(grad);
            const double den = 1.0 + params.beta * eps.trace();
            f.den_qp[static_cast<size_t>(e)][static_cast<size_t>(q)] = den;
            if (!(den > 0.0)) {
                if (bad_element[static_cast<size_t>(e)] < 0) bad_element[static_cast<size_t>(e)] = q;
                continue;
            }
            const SymTensor3 T = stress_from_strain(params, eps);
            f.strain_qp[static_cast<size_t>(e)][static_cast<size_t>(q)] = eps;
            f.stress_qp[static_cast<size_t>(e)][static_cast<size_t>(q)] = T;
            f.energy_qp[static_cast<size_t>(e)][static_cast<size_t>(q)] = strain_energy_density(eps, T);
            wq[static_cast<size_t>(e)][static_cast<size_t>(q)] = detJ;
        }
    }
    for (int e = 0; e < ne; ++e)
        if (bad_element[static_cast<size_t>(e)] >= 0) {
            const int q = bad_element[static_cast<size_t>(e)];
            throw StrainLimitError("recover_fields: 1 + beta tr(eps) = "
                                   + std::to_string(f.den_qp[static_cast<size_t>(e)][static_cast<size_t>(q)])
                                   + " at element " + std::to_string(e) + ", qp "
                                   + std::to_string(q), e, q,
                                   f.den_qp[static_cast<size_t>(e)][static_cast<size_t>(q)]);
        }

    // volume-weighted nodal averages over the quadrature values of the
    // elements touching each node, ascending element order
    f.strain_node.assign(static_cast<size_t>(nn), SymTensor3::zero());
    f.stress_node.assign(static_cast<size_t>(nn), SymTensor3::zero());
    f.energy_node.assign(static_cast<size_t>(nn), 0.0);
    f.den_node.assign(static_cast<size_t>(nn), 0.0);
    const auto adj = build_node_element_adjacency(mesh);

#pragma omp parallel for schedule(static)
    for (int n = 0; n < nn; ++n) {
        double wsum = 0.0;
        SymTensor3 se, ss;
        double sw = 0.0, sd = 0.0;
        for (int k = adj.offsets[static_cast<size_t>(n)]; k < adj.offsets[static_cast<size_t>(n) + 1]; ++k) {
            const int e = adj.elements[static_cast<size_t>(k)];
            for (int q = 0; q < reference_hex::n_qp; ++q) {
                const double w = wq[static_cast<size_t>(e)][static_cast<size_t>(q)];
                se += f.strain_qp[static_cast<size_t>(e)][static_cast<size_t>(q)] * w;
                ss += f.stress_qp[static_cast<size_t>(e)][static_cast<size_t>(q)] * w;
                sw += f.energy_qp[static_cast<size_t>(e)][static_cast<size_t>(q)] * w;
                sd += f.den_qp[static_cast<size_t>(e)][static_cast<size_t>(q)] * w;
                wsum += w;
            }
        }
        f.strain_node[static_cast<size_t>(n)] = se * (1.0 / wsum);
        f.stress_node[static_cast<size_t>(n)] = ss * (1.0 / wsum);
        f.energy_node[static_cast<size_t>(n)] = sw / wsum;
        f.den_node[static_cast<size_t>(n)] = sd / wsum;
    }
    return f;
}

int locate_point(const Mesh& mesh, const Vec3& p, Vec3& xi) {
    const double pad = 1e-9;
    for (int e = 0; e < mesh.element_count(); ++e) {
        const auto xs = mesh.element_coords(e);
        Vec3 lo = xs[0], hi = xs[0];
        for (int a = 1; a < 8; ++a)
            for (int c = 0; c < 3; ++c) {
                lo[c] = std::min(lo[c], xs[static_cast<size_t>(a)][c]);
                hi[c] = std::max(hi[c], xs[static_cast<size_t>(a)][c]);
            }
        const double d = pad * (1.0 + (hi - lo).norm());
        if (p.x < lo.x - d || p.x > hi.x + d || p.y < lo.y - d || p.y > hi.y + d
            || p.z < lo.z - d || p.z > hi.z + d)
            continue;
        if (reference_hex::locate_in_element(xs, p, xi)) return e;
    }
    return -1;
}

}  // namespace porocrack
