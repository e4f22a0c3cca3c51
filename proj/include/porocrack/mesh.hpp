#ifndef POROCRACK_MESH_HPP
#define POROCRACK_MESH_HPP

#include <array>
#include <string>
#include <vector>

#include "porocrack/geometry.hpp"
#include "porocrack/types.hpp"

namespace porocrack {

enum class FacetTag : int {
    LOADED_LOW_Y = 0,   // plate side y = 0
    LOADED_HIGH_Y = 1,  // plate side y = side_length
    CRACK_FLANK = 2,    // both notch flanks (traction-free)
    FREE = 3,           // every other exterior facet
};

const char* facet_tag_name(FacetTag t);

struct BoundaryFacet {
    int element;     // owning element index
    int local_face;  // 0..5, see hex_face_nodes
    FacetTag tag;
};

// 8-node hexahedra, VTK node ordering: bottom quad (counterclockwise seen
// from -z), then top quad.
struct Mesh {
    std::vector<Vec3> nodes;
    std::vector<std::array<int, 8>> elements;
    std::vector<BoundaryFacet> boundary_facets;

    int node_count() const { return static_cast<int>(nodes.size()); }
    int element_count() const { return static_cast<int>(elements.size()); }
    int dof_count() const { return 3 * node_count(); }

    std::array<Vec3, 8> element_coords(int e) const {
        std::array<Vec3, 8> xs;
        for (int a = 0; a < 8; ++a) xs[a] = nodes[elements[e][a]];
        return xs;
    }
};

// local corner indices of the 6 hex faces, ordered so the bilinear surface
// normal points outward
extern const int hex_face_nodes[6][4];

struct MeshQualityReport {
    double min_scaled_jacobian = 0.0;
    double mean_scaled_jacobian = 0.0;
    int element_count = 0;
    int node_count = 0;
    int dof_count = 0;
};

// Structured graded hex mesh of the v-notched plate. n_coarse gives the cell
// count per axis before refinement; each tip_refine_level carves a band of
// width (previous band)/grading_ratio against the tip station on both axes.
// The notch is opened by duplicating the crack-plane node sheets behind the
// tip and displacing the copies by +/- flank_offset about the bisector.
// Throws ConfigError on bad inputs, MeshError when the construction yields a
// nonpositive Jacobian (reports the offending element).
Mesh generate_notched_plate(const NotchedPlateGeometry& geom,
                            const std::array<int, 3>& n_coarse,
                            double grading_ratio, int tip_refine_levels);

MeshQualityReport mesh_quality(const Mesh& mesh);

// min over elements and 2x2x2 Gauss points of det(J); > 0 for a valid mesh
double min_jacobian_at_gauss_points(const Mesh& mesh);

// scaled Jacobian of one element: min over the 8 corners of
// det(e1,e2,e3)/(|e1||e2||e3|) with e_i the attached edges
double scaled_jacobian(const std::array<Vec3, 8>& xs);

int find_nearest_node(const Mesh& mesh, const Vec3& p);

// node -> adjacent elements, each list ascending; CSR layout
struct NodeElementAdjacency {
    std::vector<int> offsets;   // size node_count + 1
    std::vector<int> elements;  // concatenated ascending lists
};
NodeElementAdjacency build_node_element_adjacency(const Mesh& mesh);

// Legacy ASCII VTK of the mesh: hex cells plus one quad per boundary facet,
// CELL_DATA "boundary_tag" (-1 on the solid cells).
void export_mesh_vtk(const Mesh& mesh, const std::string& path);

}  // namespace porocrack

#endif
