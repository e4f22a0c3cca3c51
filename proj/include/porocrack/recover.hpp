#ifndef POROCRACK_RECOVER_HPP
#define POROCRACK_RECOVER_HPP

#include <array>
#include <vector>

#include "porocrack/assembly.hpp"
#include "porocrack/material.hpp"
#include "porocrack/mesh.hpp"

namespace porocrack {

// Strain, stress, strain energy density and the volume factor 1 + beta tr(eps)
// at the quadrature points of the converged solution, plus volume-weighted
// nodal averages used for sampling and export.
struct RecoveredFields {
    std::vector<std::array<SymTensor3, 8>> strain_qp;
    std::vector<std::array<SymTensor3, 8>> stress_qp;
    std::vector<std::array<double, 8>> energy_qp;
    std::vector<std::array<double, 8>> den_qp;

    std::vector<SymTensor3> strain_node;
    std::vector<SymTensor3> stress_node;
    std::vector<double> energy_node;
    std::vector<double> den_node;
};

// Throws StrainLimitError (with location) when 1 + beta tr(eps) <= 0 at a
// quadrature point.
RecoveredFields recover_fields(const Mesh& mesh, const DisplacementField& u,
                               const MaterialParams& params);

// Containing element of p (ascending element order breaks face ties);
// -1 when p is outside the mesh. xi receives the reference coordinates.
int locate_point(const Mesh& mesh, const Vec3& p, Vec3& xi);

}  // namespace porocrack

#endif
