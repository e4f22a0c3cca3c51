#ifndef POROCRACK_ASSEMBLY_HPP
#define POROCRACK_ASSEMBLY_HPP

#include <array>
#include <functional>
#include <map>
#include <vector>

#include "porocrack/material.hpp"
#include "porocrack/mesh.hpp"
#include "porocrack/sparse.hpp"

namespace porocrack {

// nodal displacements, flat [3*node + component], mm
using DisplacementField = std::vector<double>;

struct DirichletSpec {
    std::array<bool, 3> mask{false, false, false};
    std::function<Vec3(const Vec3&)> value;  // evaluated at the node position
};

// Boundary data per facet tag. A tag may carry a traction or a Dirichlet
// spec, not both; untouched tags are traction-free.
struct LoadSpec {
    Vec3 body_force{0, 0, 0};
    std::map<FacetTag, Vec3> traction;
    std::map<FacetTag, DirichletSpec> dirichlet;

    struct Pin {
        int node;
        int comp;
        double value;
    };
    std::vector<Pin> pins;

    void validate() const;  // throws ConfigError on a doubly-treated tag
};

// The tension experiment: u_y prescribed on the two loaded sides, everything
// else traction-free, rigid-body motion pinned at back-face nodes chosen so
// the pins vanish in the symmetric solution.
LoadSpec plate_tension_loads(const Mesh& mesh, const NotchedPlateGeometry& geom,
                             double uy_low, double uy_high);

// row-major 24x24
using ElementMatrix = std::array<double, 576>;

// Stiffness of one hex for the frozen-coefficient bilinear form. coeff holds
// the per-Gauss-point multiplier 1/(1 + beta div(u^n)); all entries must be
// positive (StrainLimitError otherwise, qp reported).
ElementMatrix element_stiffness(const std::array<Vec3, 8>& xs, const MaterialParams& params,
                                const std::array<double, 8>& coeff);

struct AssemblyStats {
    double min_den = 0.0;  // min over qps of 1 + beta div(u_prev)
    int min_den_element = -1;
    int min_den_qp = -1;
};

// Global system for one Picard step, frozen at u_prev (pass a zero or empty
// field for the beta=0 initial problem). Element matrices are computed in
// parallel and scattered row-by-row in ascending element order, so the
// result is bitwise independent of the thread count.
// Throws StrainLimitError (with element and qp) when 1 + beta div(u_prev)
// is nonpositive anywhere.
SparseSystem assemble(const Mesh& mesh, const MaterialParams& params,
                      const DisplacementField& u_prev, const LoadSpec& loads,
                      AssemblyStats* stats = nullptr);

// plain serial scatter loop, kept as the reference for the parallel path
SparseSystem assemble_serial(const Mesh& mesh, const MaterialParams& params,
                             const DisplacementField& u_prev, const LoadSpec& loads,
                             AssemblyStats* stats = nullptr);

// Symmetric elimination: constrained rows/columns are zeroed, the diagonal
// set to 1, and known values moved to the right-hand side. Throws
// ConfigError when the Dirichlet set is empty (floating structure).
void apply_dirichlet(SparseSystem& system, const LoadSpec& loads, const Mesh& mesh);

struct GradientStats {
    double max_grad_norm = 0.0;  // max Frobenius norm of grad(u) over qps
    double min_den = 0.0;        // min of 1 + beta div(u)
    int min_den_element = -1;
    int min_den_qp = -1;
};
GradientStats displacement_gradient_stats(const Mesh& mesh, const MaterialParams& params,
                                          const DisplacementField& u);

}  // namespace porocrack

#endif
