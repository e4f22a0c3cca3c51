#ifndef POROCRACK_VTK_EXPORT_HPP
#define POROCRACK_VTK_EXPORT_HPP

#include <string>

#include "porocrack/recover.hpp"

namespace porocrack {

// Legacy ASCII VTK with the displacement as POINT_DATA vectors and the
// nodal stress/strain components, strain energy density and volume factor
// as scalars.
void export_vtk(const Mesh& mesh, const RecoveredFields& fields, const DisplacementField& u,
                const std::string& path);

}  // namespace porocrack

#endif
