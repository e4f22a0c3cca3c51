#include "porocrack/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <string>

#include "porocrack/errors.hpp"
#include "porocrack/reference_hex.hpp"

namespace porocrack {

const char* facet_tag_name(FacetTag t) {
    switch (t) {
        case FacetTag::LOADED_LOW_Y: return "LOADED_LOW_Y";
        case FacetTag::LOADED_HIGH_Y: return "LOADED_HIGH_Y";
        case FacetTag::CRACK_FLANK: return "CRACK_FLANK";
        case FacetTag::FREE: return "FREE";
    }
    return "?";
}

// faces: 0 -z, 1 +z, 2 -y, 3 +x, 4 +y, 5 -x (outward orientation)
const int hex_face_nodes[6][4] = {
    {0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4},
    {1, 2, 6, 5}, {2, 3, 7, 6}, {0, 4, 7, 3},
};

namespace {

// 1-D breakpoints on [0, L]: n uniform cells, the tip station forced in,
// then `levels` rounds each splitting the tip-adjacent cells at width/ratio.
std::vector<double> graded_axis(double L, int n, double tip, double ratio, int levels) {
    std::vector<double> b(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) b[static_cast<size_t>(i)] = L * i / n;

    const double snap = 1e-9 * L;
    auto has_tip = [&] {
        return std::any_of(b.begin(), b.end(), [&](double v) { return std::abs(v - tip) < snap; });
    };
    if (tip > snap && tip < L - snap && !has_tip()) {
        b.push_back(tip);
        std::sort(b.begin(), b.end());
    }

    if (ratio > 1.0) {
        for (int lvl = 0; lvl < levels; ++lvl) {
            auto it = std::lower_bound(b.begin(), b.end(), tip - snap);
            const size_t ti = static_cast<size_t>(it - b.begin());
            std::vector<double> add;
            if (ti > 0) add.push_back(tip - (tip - b[ti - 1]) / ratio);
            if (ti + 1 < b.size()) add.push_back(tip + (b[ti + 1] - tip) / ratio);
            b.insert(b.end(), add.begin(), add.end());
            std::sort(b.begin(), b.end());
        }
    }
    return b;
}

size_t axis_index(const std::vector<double>& b, double v, double snap) {
    auto it = std::lower_bound(b.begin(), b.end(), v - snap);
    return static_cast<size_t>(it - b.begin());
}

}  // namespace

Mesh generate_notched_plate(const NotchedPlateGeometry& geom,
                            const std::array<int, 3>& n_coarse,
                            double grading_ratio, int tip_refine_levels) {
    geom.validate();
    for (int d = 0; d < 3; ++d)
        if (n_coarse[d] < 2)
            throw ConfigError("mesh: n_coarse must be >= 2 per axis");
    if (!(grading_ratio >= 1.0))
        throw ConfigError("mesh: grading_ratio must be >= 1");
    if (tip_refine_levels < 0)
        throw ConfigError("mesh: tip_refine_levels must be >= 0");

    const double L = geom.side_length;
    const double yc = geom.bisector_y();
    const double snap = 1e-9 * L;

    const std::vector<double> xb =
        graded_axis(L, n_coarse[0], geom.tip_x(), grading_ratio, tip_refine_levels);
    const std::vector<double> yb =
        graded_axis(L, n_coarse[1], yc, grading_ratio, tip_refine_levels);
    std::vector<double> zb(static_cast<size_t>(n_coarse[2]) + 1);
    for (int k = 0; k <= n_coarse[2]; ++k)
        zb[static_cast<size_t>(k)] = geom.thickness * k / n_coarse[2];

    const int nx = static_cast<int>(xb.size()) - 1;
    const int ny = static_cast<int>(yb.size()) - 1;
    const int nz = static_cast<int>(zb.size()) - 1;
    const int nxp = nx + 1, nyp = ny + 1, nzp = nz + 1;

    const int ic = static_cast<int>(axis_index(xb, geom.tip_x(), snap));  // tip x-station
    const int jc = static_cast<int>(axis_index(yb, yc, snap));            // bisector station
    const bool from_min = geom.notch_edge == NotchEdge::X_MIN;
    // node columns strictly behind the tip, toward the notch mouth
    auto in_crack = [&](int i) { return from_min ? i < ic : i > ic; };
    auto crack_col = [&](int i) { return from_min ? i : i - ic - 1; };
    const int n_crack_cols = from_min ? ic : nx - ic;

    Mesh mesh;
    mesh.nodes.resize(static_cast<size_t>(nxp) * nyp * nzp);
    auto base_id = [&](int i, int j, int k) { return (k * nyp + j) * nxp + i; };
    for (int k = 0; k < nzp; ++k)
        for (int j = 0; j < nyp; ++j)
            for (int i = 0; i < nxp; ++i)
                mesh.nodes[static_cast<size_t>(base_id(i, j, k))] =
                    {xb[static_cast<size_t>(i)], yb[static_cast<size_t>(j)],
                     zb[static_cast<size_t>(k)]};

    // Split the crack plane: bisector nodes behind the tip get an
    // upper-flank copy; elements above the bisector reference the copy. The
    // tip column i = ic stays shared, making the tip a sharp edge through
    // the thickness.
    const int n_base = static_cast<int>(mesh.nodes.size());
    auto upper_id = [&](int i, int k) { return n_base + k * n_crack_cols + crack_col(i); };
    mesh.nodes.resize(static_cast<size_t>(n_base)
                      + static_cast<size_t>(n_crack_cols) * nzp);
    for (int k = 0; k < nzp; ++k)
        for (int i = 0; i < nxp; ++i) {
            if (!in_crack(i)) continue;
            const double x = xb[static_cast<size_t>(i)];
            const double off = geom.flank_offset(std::abs(x - geom.tip_x()));
            mesh.nodes[static_cast<size_t>(upper_id(i, k))] = {x, yc + off, zb[static_cast<size_t>(k)]};
            mesh.nodes[static_cast<size_t>(base_id(i, jc, k))].y = yc - off;
        }

    // The opening is absorbed by the node layers within a band around the
    // bisector: a linear falloff compresses every layer gap by the same
    // factor 1 - off/band, which stays positive however fine the grading is
    // as long as the band exceeds the mouth opening. The loaded sides are
    // outside the band and keep their exact planes.
    const double band = 0.5 * yc;
    for (int k = 0; k < nzp; ++k)
        for (int j = 0; j < nyp; ++j) {
            if (j == jc) continue;  // flank sheets already placed
            const double y = yb[static_cast<size_t>(j)];
            const double dist = std::abs(y - yc);
            if (dist >= band) continue;
            for (int i = 0; i < nxp; ++i) {
                if (!in_crack(i)) continue;
                const double x = xb[static_cast<size_t>(i)];
                const double off = geom.flank_offset(std::abs(x - geom.tip_x()));
                const double shift = off * (1.0 - dist / band);
                mesh.nodes[static_cast<size_t>(base_id(i, j, k))].y +=
                    (y > yc) ? shift : -shift;
            }
        }

    // corner offsets in VTK hex order
    static const int cd[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                                 {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
    mesh.elements.reserve(static_cast<size_t>(nx) * ny * nz);
    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                std::array<int, 8> e;
                for (int a = 0; a < 8; ++a) {
                    const int gi = i + cd[a][0], gj = j + cd[a][1], gk = k + cd[a][2];
                    if (gj == jc && in_crack(gi) && j >= jc)
                        e[static_cast<size_t>(a)] = upper_id(gi, gk);
                    else
                        e[static_cast<size_t>(a)] = base_id(gi, gj, gk);
                }
                mesh.elements.push_back(e);
            }

    auto cell_id = [&](int i, int j, int k) { return (k * ny + j) * nx + i; };
    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const int e = cell_id(i, j, k);
                if (j == 0) mesh.boundary_facets.push_back({e, 2, FacetTag::LOADED_LOW_Y});
                if (j == ny - 1) mesh.boundary_facets.push_back({e, 4, FacetTag::LOADED_HIGH_Y});
                if (i == 0) mesh.boundary_facets.push_back({e, 5, FacetTag::FREE});
                if (i == nx - 1) mesh.boundary_facets.push_back({e, 3, FacetTag::FREE});
                if (k == 0) mesh.boundary_facets.push_back({e, 0, FacetTag::FREE});
                if (k == nz - 1) mesh.boundary_facets.push_back({e, 1, FacetTag::FREE});
                const bool crack_cell = from_min ? i < ic : i >= ic;
                if (crack_cell && j == jc - 1)
                    mesh.boundary_facets.push_back({e, 4, FacetTag::CRACK_FLANK});
                if (crack_cell && j == jc)
                    mesh.boundary_facets.push_back({e, 2, FacetTag::CRACK_FLANK});
            }

    const auto qps = reference_hex::gauss_points();
    for (int e = 0; e < mesh.element_count(); ++e) {
        const auto xs = mesh.element_coords(e);
        for (const auto& xi : qps) {
            if (!(reference_hex::jacobian(xs, xi).det() > 0.0))
                throw MeshError("mesh generation produced a nonpositive Jacobian in element "
                                + std::to_string(e) + " (notch too wide for the resolution?)",
                                e);
        }
    }
    return mesh;
}

double scaled_jacobian(const std::array<Vec3, 8>& xs) {
    double sj = std::numeric_limits<double>::max();
    for (int a = 0; a < 8; ++a) {
        const Vec3 corner{reference_hex::xi_n[a], reference_hex::eta_n[a],
                          reference_hex::zeta_n[a]};
        const Mat3 J = reference_hex::jacobian(xs, corner);
        double norms = 1.0;
        for (int c = 0; c < 3; ++c) {
            const Vec3 col{J(0, c), J(1, c), J(2, c)};
            norms *= col.norm();
        }
        if (norms <= 0.0) return 0.0;  // collapsed edge
        sj = std::min(sj, J.det() / norms);
    }
    return sj;
}

double min_jacobian_at_gauss_points(const Mesh& mesh) {
    const auto qps = reference_hex::gauss_points();
    double mn = std::numeric_limits<double>::max();
    for (int e = 0; e < mesh.element_count(); ++e) {
        const auto xs = mesh.element_coords(e);
        for (const auto& xi : qps) mn = std::min(mn, reference_hex::jacobian(xs, xi).det());
    }
    return mn;
}

MeshQualityReport mesh_quality(const Mesh& mesh) {
    if (mesh.elements.empty()) throw MeshError("mesh_quality: empty mesh");
    MeshQualityReport r;
    r.element_count = mesh.element_count();
    r.node_count = mesh.node_count();
    r.dof_count = mesh.dof_count();
    r.min_scaled_jacobian = std::numeric_limits<double>::max();
    double sum = 0.0;
    for (int e = 0; e < mesh.element_count(); ++e) {
        const double sj = scaled_jacobian(mesh.element_coords(e));
        r.min_scaled_jacobian = std::min(r.min_scaled_jacobian, sj);
        sum += sj;
    }
    r.mean_scaled_jacobian = sum / mesh.element_count();
    return r;
}

int find_nearest_node(const Mesh& mesh, const Vec3& p) {
    int best = -1;
    double bd = std::numeric_limits<double>::max();
    for (int n = 0; n < mesh.node_count(); ++n) {
        const double d = (mesh.nodes[static_cast<size_t>(n)] - p).norm();
        if (d < bd) {
            bd = d;
            best = n;
        }
    }
    return best;
}

NodeElementAdjacency build_node_element_adjacency(const Mesh& mesh) {
    NodeElementAdjacency adj;
    adj.offsets.assign(static_cast<size_t>(mesh.node_count()) + 1, 0);
    for (const auto& e : mesh.elements)
        for (int n : e) ++adj.offsets[static_cast<size_t>(n) + 1];
    std::partial_sum(adj.offsets.begin(), adj.offsets.end(), adj.offsets.begin());
    adj.elements.resize(static_cast<size_t>(adj.offsets.back()));
    std::vector<int> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
    // element loop ascending => each per-node list comes out ascending
    for (int e = 0; e < mesh.element_count(); ++e)
        for (int n : mesh.elements[static_cast<size_t>(e)])
            adj.elements[static_cast<size_t>(cursor[static_cast<size_t>(n)]++)] = e;
    return adj;
}

void export_mesh_vtk(const Mesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "# vtk DataFile Version 3.0\n";
    out << "porocrack mesh\n";
    out << "ASCII\n";
    out << "DATASET UNSTRUCTURED_GRID\n";
    out << "POINTS " << mesh.node_count() << " double\n";
    char buf[128];
    for (const auto& p : mesh.nodes) {
        std::snprintf(buf, sizeof buf, "%.9g %.9g %.9g\n", p.x, p.y, p.z);
        out << buf;
    }
    const size_t ne = mesh.elements.size();
    const size_t nf = mesh.boundary_facets.size();
    out << "CELLS " << ne + nf << " " << 9 * ne + 5 * nf << "\n";
    for (const auto& e : mesh.elements) {
        out << "8";
        for (int n : e) out << " " << n;
        out << "\n";
    }
    for (const auto& f : mesh.boundary_facets) {
        const auto& e = mesh.elements[static_cast<size_t>(f.element)];
        out << "4";
        for (int c = 0; c < 4; ++c)
            out << " " << e[static_cast<size_t>(hex_face_nodes[f.local_face][c])];
        out << "\n";
    }
    out << "CELL_TYPES " << ne + nf << "\n";
    for (size_t i = 0; i < ne; ++i) out << "12\n";
    for (size_t i = 0; i < nf; ++i) out << "9\n";
    out << "CELL_DATA " << ne + nf << "\n";
    out << "SCALARS boundary_tag int 1\nLOOKUP_TABLE default\n";
    for (size_t i = 0; i < ne; ++i) out << "-1\n";
    for (const auto& f : mesh.boundary_facets) out << static_cast<int>(f.tag) << "\n";
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace porocrack
