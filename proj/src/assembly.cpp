#include "porocrack/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <omp.h>

#include "porocrack/errors.hpp"
#include "porocrack/reference_hex.hpp"

namespace porocrack {

void LoadSpec::validate() const {
    for (const auto& [tag, spec] : dirichlet) {
        (void)spec;
        if (traction.count(tag))
            throw ConfigError(std::string("facet tag ") + facet_tag_name(tag)
                              + " carries both traction and Dirichlet data");
    }
}

LoadSpec plate_tension_loads(const Mesh& mesh, const NotchedPlateGeometry& geom,
                             double uy_low, double uy_high) {
    LoadSpec loads;
    loads.dirichlet[FacetTag::LOADED_LOW_Y] =
        DirichletSpec{{false, true, false}, [uy_low](const Vec3&) { return Vec3{0, uy_low, 0}; }};
    loads.dirichlet[FacetTag::LOADED_HIGH_Y] =
        DirichletSpec{{false, true, false}, [uy_high](const Vec3&) { return Vec3{0, uy_high, 0}; }};

    // Remaining rigid modes after the u_y constraints: x/z translation and
    // rotation about y. u_x is pinned on the back edge at both surfaces
    // (kills translation and the rotation), u_z along the back mid-plane
    // line. In the mirror-symmetric solution all five pinned values are
    // zero, so the pins carry no parasitic load.
    const double L = geom.side_length, yc = geom.bisector_y(), zc = geom.mid_z();
    const double back_x = geom.notch_edge == NotchEdge::X_MIN ? L : 0.0;
    const int px0 = find_nearest_node(mesh, {back_x, yc, 0.0});
    const int px1 = find_nearest_node(mesh, {back_x, yc, geom.thickness});
    loads.pins.push_back({px0, 0, 0.0});
    loads.pins.push_back({px1, 0, 0.0});
    for (double y : {0.0, yc, L}) {
        const int pz = find_nearest_node(mesh, {back_x, y, zc});
        loads.pins.push_back({pz, 2, 0.0});
    }
    return loads;
}

ElementMatrix element_stiffness(const std::array<Vec3, 8>& xs, const MaterialParams& params,
                                const std::array<double, 8>& coeff) {
    const double mu = params.mu0();
    const double lam = params.lambda0();
    static const auto qps = reference_hex::gauss_points();

    ElementMatrix K{};
    for (int q = 0; q < reference_hex::n_qp; ++q) {
        if (!(coeff[static_cast<size_t>(q)] > 0.0))
            throw StrainLimitError("element_stiffness: nonpositive coefficient at qp "
                                   + std::to_string(q), -1, q, coeff[static_cast<size_t>(q)]);
        Vec3 g[8];
        const double detJ = reference_hex::map_gradients(xs, qps[static_cast<size_t>(q)], g);
        const double w = detJ * coeff[static_cast<size_t>(q)];  // Gauss weight is 1
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                const double gg = g[a].dot(g[b]);
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) {
                        // grouped so the (a,i) <-> (b,j) transpose runs the
                        // same float ops and the matrix is symmetric bitwise
                        const double v = mu * ((i == j ? gg : 0.0) + g[a][j] * g[b][i])
                                       + lam * (g[a][i] * g[b][j]);
                        K[static_cast<size_t>(24 * (3 * a + i) + 3 * b + j)] += w * v;
                    }
            }
    }
    return K;
}

namespace {

// dof-level sparsity from the node-to-node element graph
CsrMatrix build_pattern(const Mesh& mesh) {
    const int nn = mesh.node_count();
    std::vector<std::vector<int>> nbrs(static_cast<size_t>(nn));
    for (const auto& e : mesh.elements)
        for (int a : e)
            for (int b : e) nbrs[static_cast<size_t>(a)].push_back(b);
    CsrMatrix A;
    A.n = 3 * nn;
    A.row_ptr.assign(static_cast<size_t>(A.n) + 1, 0);
    for (int n = 0; n < nn; ++n) {
        auto& v = nbrs[static_cast<size_t>(n)];
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        for (int c = 0; c < 3; ++c)
            A.row_ptr[static_cast<size_t>(3 * n + c) + 1] = static_cast<int>(3 * v.size());
    }
    for (int r = 0; r < A.n; ++r) A.row_ptr[static_cast<size_t>(r) + 1] += A.row_ptr[static_cast<size_t>(r)];
    A.col.resize(static_cast<size_t>(A.row_ptr.back()));
    A.val.assign(A.col.size(), 0.0);
    for (int n = 0; n < nn; ++n)
        for (int c = 0; c < 3; ++c) {
            int k = A.row_ptr[static_cast<size_t>(3 * n + c)];
            for (int m : nbrs[static_cast<size_t>(n)])
                for (int d = 0; d < 3; ++d) A.col[static_cast<size_t>(k++)] = 3 * m + d;
        }
    return A;
}

std::array<double, 8> frozen_coefficients(const Mesh& mesh, const MaterialParams& params,
                                          const DisplacementField& u_prev, int e,
                                          const std::array<Vec3, 8>& xs,
                                          double& min_den, int& min_qp) {
    static const auto qps = reference_hex::gauss_points();
    std::array<double, 8> coeff;
    min_den = std::numeric_limits<double>::max();
    min_qp = -1;
    for (int q = 0; q < reference_hex::n_qp; ++q) {
        double div = 0.0;
        if (!u_prev.empty()) {
            Vec3 g[8];
            reference_hex::map_gradients(xs, qps[static_cast<size_t>(q)], g);
            for (int a = 0; a < 8; ++a) {
                const int n = mesh.elements[static_cast<size_t>(e)][static_cast<size_t>(a)];
                div += g[a].x * u_prev[static_cast<size_t>(3 * n)]
                     + g[a].y * u_prev[static_cast<size_t>(3 * n + 1)]
                     + g[a].z * u_prev[static_cast<size_t>(3 * n + 2)];
            }
        }
        const double den = 1.0 + params.beta * div;
        if (den < min_den) {
            min_den = den;
            min_qp = q;
        }
        coeff[static_cast<size_t>(q)] = 1.0 / den;
    }
    return coeff;
}

// Body-force and traction integrals; both vanish in the tension experiment
// but are carried for completeness.
void assemble_rhs(const Mesh& mesh, const LoadSpec& loads, std::vector<double>& b) {
    static const auto qps = reference_hex::gauss_points();
    const Vec3 bf = loads.body_force;
    if (bf.x != 0.0 || bf.y != 0.0 || bf.z != 0.0) {
        for (int e = 0; e < mesh.element_count(); ++e) {
            const auto xs = mesh.element_coords(e);
            for (const auto& xi : qps) {
                double N[8];
                reference_hex::shape_values(xi, N);
                const double detJ = reference_hex::jacobian(xs, xi).det();
                for (int a = 0; a < 8; ++a) {
                    const int n = mesh.elements[static_cast<size_t>(e)][static_cast<size_t>(a)];
                    for (int c = 0; c < 3; ++c)
                        b[static_cast<size_t>(3 * n + c)] += detJ * N[a] * bf[c];
                }
            }
        }
    }
    const double g1 = 1.0 / std::sqrt(3.0);
    for (const auto& f : mesh.boundary_facets) {
        auto it = loads.traction.find(f.tag);
        if (it == loads.traction.end()) continue;
        const Vec3& g = it->second;
        if (g.x == 0.0 && g.y == 0.0 && g.z == 0.0) continue;
        const auto& elem = mesh.elements[static_cast<size_t>(f.element)];
        Vec3 corner[4];
        int gid[4];
        for (int c = 0; c < 4; ++c) {
            gid[c] = elem[static_cast<size_t>(hex_face_nodes[f.local_face][c])];
            corner[c] = mesh.nodes[static_cast<size_t>(gid[c])];
        }
        for (double s : {-g1, g1})
            for (double t : {-g1, g1}) {
                const double N4[4] = {0.25 * (1 - s) * (1 - t), 0.25 * (1 + s) * (1 - t),
                                      0.25 * (1 + s) * (1 + t), 0.25 * (1 - s) * (1 + t)};
                const Vec3 dxds = (corner[1] - corner[0]) * (0.25 * (1 - t))
                                + (corner[2] - corner[3]) * (0.25 * (1 + t));
                const Vec3 dxdt = (corner[3] - corner[0]) * (0.25 * (1 - s))
                                + (corner[2] - corner[1]) * (0.25 * (1 + s));
                const double dA = dxds.cross(dxdt).norm();
                for (int c = 0; c < 4; ++c)
                    for (int k = 0; k < 3; ++k)
                        b[static_cast<size_t>(3 * gid[c] + k)] += dA * N4[c] * g[k];
            }
    }
}

void reduce_stats(const std::vector<double>& den, const std::vector<int>& qp, int e_lo,
                  int count, AssemblyStats& st) {
    for (int i = 0; i < count; ++i) {
        if (den[static_cast<size_t>(i)] < st.min_den) {
            st.min_den = den[static_cast<size_t>(i)];
            st.min_den_element = e_lo + i;
            st.min_den_qp = qp[static_cast<size_t>(i)];
        }
    }
}

}  // namespace

SparseSystem assemble(const Mesh& mesh, const MaterialParams& params,
                      const DisplacementField& u_prev, const LoadSpec& loads,
                      AssemblyStats* stats) {
    // the two paths are bitwise identical; skip the scatter bookkeeping
    // when there is nothing to parallelize
    if (omp_get_max_threads() == 1)
        return assemble_serial(mesh, params, u_prev, loads, stats);
    loads.validate();
    SparseSystem sys;
    sys.A = build_pattern(mesh);
    sys.b.assign(static_cast<size_t>(sys.A.n), 0.0);
    sys.constrained.assign(static_cast<size_t>(sys.A.n), 0);
    sys.constrained_value.assign(static_cast<size_t>(sys.A.n), 0.0);

    const auto adj = build_node_element_adjacency(mesh);
    const int ne = mesh.element_count();
    const int nn = mesh.node_count();
    constexpr int kBlock = 8192;

    AssemblyStats st;
    st.min_den = std::numeric_limits<double>::max();

    std::vector<ElementMatrix> Ke(static_cast<size_t>(std::min(kBlock, ne)));
    std::vector<double> blk_den(Ke.size());
    std::vector<int> blk_qp(Ke.size());

    for (int e_lo = 0; e_lo < ne; e_lo += kBlock) {
        const int e_hi = std::min(e_lo + kBlock, ne);
        const int nb = e_hi - e_lo;

#pragma omp parallel for schedule(static)
        for (int e = e_lo; e < e_hi; ++e) {
            const auto xs = mesh.element_coords(e);
            double dmin;
            int qmin;
            const auto coeff = frozen_coefficients(mesh, params, u_prev, e, xs, dmin, qmin);
            blk_den[static_cast<size_t>(e - e_lo)] = dmin;
            blk_qp[static_cast<size_t>(e - e_lo)] = qmin;
            if (dmin > 0.0)
                Ke[static_cast<size_t>(e - e_lo)] = element_stiffness(xs, params, coeff);
        }

        reduce_stats(blk_den, blk_qp, e_lo, nb, st);
        if (!(st.min_den > 0.0))
            throw StrainLimitError("assemble: 1 + beta div(u) = " + std::to_string(st.min_den)
                                   + " at element " + std::to_string(st.min_den_element)
                                   + ", qp " + std::to_string(st.min_den_qp),
                                   st.min_den_element, st.min_den_qp, st.min_den);

        // Row-owner scatter: every dof row is written by exactly one thread,
        // adding adjacent elements in ascending order.
#pragma omp parallel for schedule(static)
        for (int n = 0; n < nn; ++n) {
            for (int k = adj.offsets[static_cast<size_t>(n)]; k < adj.offsets[static_cast<size_t>(n) + 1]; ++k) {
                const int e = adj.elements[static_cast<size_t>(k)];
                if (e < e_lo) continue;
                if (e >= e_hi) break;
                const auto& conn = mesh.elements[static_cast<size_t>(e)];
                const auto& M = Ke[static_cast<size_t>(e - e_lo)];
                for (int a = 0; a < 8; ++a) {
                    if (conn[static_cast<size_t>(a)] != n) continue;
                    for (int b = 0; b < 8; ++b) {
                        const int m = conn[static_cast<size_t>(b)];
                        for (int i = 0; i < 3; ++i) {
                            const int pos = sys.A.find(3 * n + i, 3 * m);
                            for (int j = 0; j < 3; ++j)
                                sys.A.val[static_cast<size_t>(pos + j)] +=
                                    M[static_cast<size_t>(24 * (3 * a + i) + 3 * b + j)];
                        }
                    }
                }
            }
        }
    }

    assemble_rhs(mesh, loads, sys.b);
    if (stats) *stats = st;
    return sys;
}

SparseSystem assemble_serial(const Mesh& mesh, const MaterialParams& params,
                             const DisplacementField& u_prev, const LoadSpec& loads,
                             AssemblyStats* stats) {
    loads.validate();
    SparseSystem sys;
    sys.A = build_pattern(mesh);
    sys.b.assign(static_cast<size_t>(sys.A.n), 0.0);
    sys.constrained.assign(static_cast<size_t>(sys.A.n), 0);
    sys.constrained_value.assign(static_cast<size_t>(sys.A.n), 0.0);

    AssemblyStats st;
    st.min_den = std::numeric_limits<double>::max();
    for (int e = 0; e < mesh.element_count(); ++e) {
        const auto xs = mesh.element_coords(e);
        double dmin;
        int qmin;
        const auto coeff = frozen_coefficients(mesh, params, u_prev, e, xs, dmin, qmin);
        if (dmin < st.min_den) {
            st.min_den = dmin;
            st.min_den_element = e;
            st.min_den_qp = qmin;
        }
        if (!(dmin > 0.0))
            throw StrainLimitError("assemble: 1 + beta div(u) = " + std::to_string(dmin)
                                   + " at element " + std::to_string(e) + ", qp "
                                   + std::to_string(qmin), e, qmin, dmin);
        const auto M = element_stiffness(xs, params, coeff);
        const auto& conn = mesh.elements[static_cast<size_t>(e)];
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b)
                for (int i = 0; i < 3; ++i) {
                    const int pos = sys.A.find(3 * conn[static_cast<size_t>(a)] + i,
                                               3 * conn[static_cast<size_t>(b)]);
                    for (int j = 0; j < 3; ++j)
                        sys.A.val[static_cast<size_t>(pos + j)] +=
                            M[static_cast<size_t>(24 * (3 * a + i) + 3 * b + j)];
                }
    }
    assemble_rhs(mesh, loads, sys.b);
    if (stats) *stats = st;
    return sys;
}

void apply_dirichlet(SparseSystem& sys, const LoadSpec& loads, const Mesh& mesh) {
    loads.validate();
    for (const auto& f : mesh.boundary_facets) {
        auto it = loads.dirichlet.find(f.tag);
        if (it == loads.dirichlet.end()) continue;
        const DirichletSpec& spec = it->second;
        const auto& elem = mesh.elements[static_cast<size_t>(f.element)];
        for (int c = 0; c < 4; ++c) {
            const int n = elem[static_cast<size_t>(hex_face_nodes[f.local_face][c])];
            const Vec3 v = spec.value(mesh.nodes[static_cast<size_t>(n)]);
            for (int comp = 0; comp < 3; ++comp)
                if (spec.mask[static_cast<size_t>(comp)]) {
                    sys.constrained[static_cast<size_t>(3 * n + comp)] = 1;
                    sys.constrained_value[static_cast<size_t>(3 * n + comp)] = v[comp];
                }
        }
    }
    for (const auto& pin : loads.pins) {
        sys.constrained[static_cast<size_t>(3 * pin.node + pin.comp)] = 1;
        sys.constrained_value[static_cast<size_t>(3 * pin.node + pin.comp)] = pin.value;
    }

    bool any = false;
    for (auto c : sys.constrained) any = any || c;
    if (!any) throw ConfigError("apply_dirichlet: empty Dirichlet set, structure is floating");

#pragma omp parallel for schedule(static)
    for (int r = 0; r < sys.A.n; ++r) {
        if (sys.constrained[static_cast<size_t>(r)]) {
            for (int k = sys.A.row_ptr[static_cast<size_t>(r)];
                 k < sys.A.row_ptr[static_cast<size_t>(r) + 1]; ++k)
                sys.A.val[static_cast<size_t>(k)] = (sys.A.col[static_cast<size_t>(k)] == r) ? 1.0 : 0.0;
            sys.b[static_cast<size_t>(r)] = sys.constrained_value[static_cast<size_t>(r)];
        } else {
            for (int k = sys.A.row_ptr[static_cast<size_t>(r)];
                 k < sys.A.row_ptr[static_cast<size_t>(r) + 1]; ++k) {
                const int c = sys.A.col[static_cast<size_t>(k)];
                if (sys.constrained[static_cast<size_t>(c)]) {
                    sys.b[static_cast<size_t>(r)] -=
                        sys.A.val[static_cast<size_t>(k)] * sys.constrained_value[static_cast<size_t>(c)];
                    sys.A.val[static_cast<size_t>(k)] = 0.0;
                }
            }
        }
    }
    sys.dirichlet_applied = true;
}

GradientStats displacement_gradient_stats(const Mesh& mesh, const MaterialParams& params,
                                          const DisplacementField& u) {
    static const auto qps = reference_hex::gauss_points();
    GradientStats st;
    st.min_den = std::numeric_limits<double>::max();
    for (int e = 0; e < mesh.element_count(); ++e) {
        const auto xs = mesh.element_coords(e);
        for (int q = 0; q < reference_hex::n_qp; ++q) {
            Vec3 g[8];
            reference_hex::map_gradients(xs, qps[static_cast<size_t>(q)], g);
            Mat3 grad;
            for (int a = 0; a < 8; ++a) {
                const int n = mesh.elements[static_cast<size_t>(e)][static_cast<size_t>(a)];
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        grad(i, j) += u[static_cast<size_t>(3 * n + i)] * g[a][j];
            }
            st.max_grad_norm = std::max(st.max_grad_norm, grad.frobenius_norm());
            const double den = 1.0 + params.beta * grad.trace();
            if (den < st.min_den) {
                st.min_den = den;
                st.min_den_element = e;
                st.min_den_qp = q;
            }
        }
    }
    return st;
}

}  // namespace porocrack
