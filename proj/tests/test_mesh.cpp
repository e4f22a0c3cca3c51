#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "porocrack/errors.hpp"
#include "porocrack/mesh.hpp"
#include "porocrack/reference_hex.hpp"

using namespace porocrack;

namespace {

Mesh unit_cube() {
    Mesh m;
    m.nodes = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
               {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
    m.elements = {{0, 1, 2, 3, 4, 5, 6, 7}};
    return m;
}

// sorted global node ids of face f of element e
std::array<int, 4> face_key(const Mesh& m, int e, int f) {
    std::array<int, 4> k;
    for (int c = 0; c < 4; ++c)
        k[static_cast<size_t>(c)] =
            m.elements[static_cast<size_t>(e)][static_cast<size_t>(hex_face_nodes[f][c])];
    std::sort(k.begin(), k.end());
    return k;
}

}  // namespace

TEST_CASE("geometry validation") {
    NotchedPlateGeometry g;
    CHECK_NOTHROW(g.validate());
    g.notch_angle_deg = 0.0;
    CHECK_THROWS_AS(g.validate(), ConfigError);  // flanks coincide
    g.notch_angle_deg = 2.0;
    g.notch_depth = 60.0;
    CHECK_THROWS_AS(g.validate(), ConfigError);  // tip past the center
    g.notch_depth = 50.0;
    g.side_length = -1.0;
    CHECK_THROWS_AS(g.validate(), ConfigError);
}

TEST_CASE("midline points") {
    NotchedPlateGeometry g;
    SUBCASE("two samples give the endpoints at mid-thickness") {
        const auto pts = midline_points(g, 2, 10.0);
        REQUIRE(pts.size() == 2);
        CHECK(pts[0].first == 0.0);
        CHECK(pts[1].first == 10.0);
        CHECK(pts[0].second.z == doctest::Approx(5.0));
        CHECK(pts[1].second.z == doctest::Approx(5.0));
    }
    SUBCASE("first point is the tip-edge midpoint") {
        const auto pts = midline_points(g, 17, 25.0);
        CHECK(pts[0].second.x == doctest::Approx(50.0));
        CHECK(pts[0].second.y == doctest::Approx(50.0));
        CHECK(pts[0].second.z == doctest::Approx(5.0));
        for (size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].first > pts[i - 1].first);
    }
    SUBCASE("r_max beyond the ligament is rejected") {
        CHECK_THROWS_AS(midline_points(g, 5, 60.0), ConfigError);
        CHECK_NOTHROW(midline_points(g, 5, 50.0));
    }
    SUBCASE("resolution-independent: depends on geometry only") {
        const auto a = midline_points(g, 5, 20.0);
        const auto b = midline_points(g, 9, 20.0);
        CHECK(a[2].first == doctest::Approx(b[4].first));
        CHECK(a[2].second.x == doctest::Approx(b[4].second.x));
    }
}

TEST_CASE("generated plate mesh") {
    NotchedPlateGeometry g;
    const Mesh mesh = generate_notched_plate(g, {8, 8, 2}, 2.0, 3);

    SUBCASE("all Gauss-point Jacobians positive") {
        CHECK(min_jacobian_at_gauss_points(mesh) > 0.0);
        CHECK(mesh_quality(mesh).min_scaled_jacobian > 0.0);
    }

    SUBCASE("uniform mesh has the constructed counts") {
        const Mesh u = generate_notched_plate(g, {8, 8, 2}, 1.0, 0);
        CHECK(u.element_count() == 8 * 8 * 2);  // splitting removes no cells
        // lattice nodes plus the duplicated flank sheet (4 columns x 3 layers)
        CHECK(u.node_count() == 9 * 9 * 3 + 4 * 3);
    }

    SUBCASE("boundary facets partition the exterior") {
        std::map<std::array<int, 4>, int> count;
        for (int e = 0; e < mesh.element_count(); ++e)
            for (int f = 0; f < 6; ++f) ++count[face_key(mesh, e, f)];
        std::set<std::array<int, 4>> exterior;
        for (const auto& [k, c] : count)
            if (c == 1) exterior.insert(k);
        std::set<std::array<int, 4>> tagged;
        for (const auto& bf : mesh.boundary_facets) {
            const auto k = face_key(mesh, bf.element, bf.local_face);
            CHECK(!tagged.count(k));  // exactly one tag per facet
            tagged.insert(k);
        }
        CHECK(tagged == exterior);
    }

    SUBCASE("loaded sides cover y = 0 and y = side") {
        int low = 0, high = 0;
        for (const auto& bf : mesh.boundary_facets) {
            if (bf.tag != FacetTag::LOADED_LOW_Y && bf.tag != FacetTag::LOADED_HIGH_Y) continue;
            const double want_y = bf.tag == FacetTag::LOADED_LOW_Y ? 0.0 : 100.0;
            for (int c = 0; c < 4; ++c) {
                const int n = mesh.elements[static_cast<size_t>(bf.element)]
                                           [static_cast<size_t>(hex_face_nodes[bf.local_face][c])];
                CHECK(mesh.nodes[static_cast<size_t>(n)].y == doctest::Approx(want_y));
            }
            (bf.tag == FacetTag::LOADED_LOW_Y ? low : high)++;
        }
        CHECK(low == high);
        CHECK(low > 0);
    }

    SUBCASE("flank facets come in pairs with distinct elements") {
        std::vector<const BoundaryFacet*> flank;
        for (const auto& bf : mesh.boundary_facets)
            if (bf.tag == FacetTag::CRACK_FLANK) flank.push_back(&bf);
        CHECK(!flank.empty());
        CHECK(flank.size() % 2 == 0);
        // pair by facet centroid (x, z); the two members differ in element and y-side
        std::map<std::pair<long, long>, std::vector<const BoundaryFacet*>> pairs;
        for (const auto* bf : flank) {
            Vec3 c{0, 0, 0};
            for (int k = 0; k < 4; ++k) {
                const int n = mesh.elements[static_cast<size_t>(bf->element)]
                                           [static_cast<size_t>(hex_face_nodes[bf->local_face][k])];
                c += mesh.nodes[static_cast<size_t>(n)] * 0.25;
            }
            pairs[{std::lround(c.x * 1e6), std::lround(c.z * 1e6)}].push_back(bf);
        }
        for (const auto& [key, fs] : pairs) {
            REQUIRE(fs.size() == 2);
            CHECK(fs[0]->element != fs[1]->element);
        }
    }

    SUBCASE("node set is mirror symmetric about the bisector plane") {
        for (const auto& p : mesh.nodes) {
            const Vec3 mirrored{p.x, 100.0 - p.y, p.z};
            const int m = find_nearest_node(mesh, mirrored);
            CHECK((mesh.nodes[static_cast<size_t>(m)] - mirrored).norm() < 1e-9 * 100.0);
        }
    }

    SUBCASE("flank sheets open by the notch angle") {
        // mouth nodes sit at y = 50 -/+ tan(1 deg) * 50
        const double off = std::tan(1.0 * M_PI / 180.0) * 50.0;
        int found = 0;
        for (const auto& p : mesh.nodes) {
            if (std::abs(p.x) > 1e-9 || std::abs(p.z) > 1e-9) continue;
            if (std::abs(p.y - (50.0 - off)) < 1e-9 || std::abs(p.y - (50.0 + off)) < 1e-9)
                ++found;
        }
        CHECK(found == 2);
    }

    SUBCASE("grading refines toward the tip") {
        // smallest tip-adjacent in-plane cell <= coarse/2^3
        double min_dx = 1e300;
        for (int e = 0; e < mesh.element_count(); ++e) {
            const auto xs = mesh.element_coords(e);
            bool at_tip = false;
            for (const auto& x : xs)
                if (std::abs(x.x - 50.0) < 1e-9 && std::abs(x.y - 50.0) < 1e-9) at_tip = true;
            if (at_tip) min_dx = std::min(min_dx, std::abs(xs[1].x - xs[0].x));
        }
        CHECK(min_dx <= (100.0 / 8) / 8.0 + 1e-12);
    }
}

TEST_CASE("notch opening on the far edge mirrors the construction") {
    NotchedPlateGeometry g;
    g.notch_depth = 40.0;
    g.notch_edge = NotchEdge::X_MAX;
    CHECK(g.tip_point().x == doctest::Approx(60.0));

    const auto pts = midline_points(g, 5, 20.0);
    CHECK(pts[0].second.x == doctest::Approx(60.0));
    CHECK(pts.back().second.x == doctest::Approx(40.0));  // toward the back at x = 0

    const Mesh far = generate_notched_plate(g, {10, 8, 2}, 2.0, 2);
    CHECK(min_jacobian_at_gauss_points(far) > 0.0);

    NotchedPlateGeometry gm = g;
    gm.notch_edge = NotchEdge::X_MIN;
    const Mesh near = generate_notched_plate(gm, {10, 8, 2}, 2.0, 2);
    REQUIRE(far.node_count() == near.node_count());
    REQUIRE(far.element_count() == near.element_count());
    // node sets mirror under x -> side - x
    for (const auto& p : far.nodes) {
        const Vec3 mirrored{100.0 - p.x, p.y, p.z};
        const int m = find_nearest_node(near, mirrored);
        CHECK((near.nodes[static_cast<size_t>(m)] - mirrored).norm() < 1e-9 * 100.0);
    }
    int flank_far = 0, flank_near = 0;
    for (const auto& bf : far.boundary_facets) flank_far += bf.tag == FacetTag::CRACK_FLANK;
    for (const auto& bf : near.boundary_facets) flank_near += bf.tag == FacetTag::CRACK_FLANK;
    CHECK(flank_far == flank_near);
}

TEST_CASE("mesh generation errors") {
    NotchedPlateGeometry g;
    CHECK_THROWS_AS(generate_notched_plate(g, {1, 8, 2}, 2.0, 0), ConfigError);
    CHECK_THROWS_AS(generate_notched_plate(g, {8, 8, 2}, 0.5, 0), ConfigError);
    g.notch_angle_deg = 0.0;
    CHECK_THROWS_AS(generate_notched_plate(g, {8, 8, 2}, 2.0, 0), ConfigError);

    SUBCASE("wide notch on a fine lattice collapses flank elements") {
        NotchedPlateGeometry wide;
        wide.notch_angle_deg = 120.0;
        CHECK_THROWS_AS(generate_notched_plate(wide, {16, 16, 2}, 1.0, 0), MeshError);
    }
}

TEST_CASE("mesh quality metric") {
    SUBCASE("unit cube is ideal") {
        const auto q = mesh_quality(unit_cube());
        CHECK(q.min_scaled_jacobian == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(q.element_count == 1);
        CHECK(q.node_count == 8);
        CHECK(q.dof_count == 24);
    }
    SUBCASE("inverted element is flagged") {
        Mesh m = unit_cube();
        m.nodes[6] = {0.1, 0.1, -2.0};  // fold a corner through the element
        CHECK(mesh_quality(m).min_scaled_jacobian <= 0.0);
    }
    SUBCASE("empty mesh rejected") {
        Mesh m;
        CHECK_THROWS_AS(mesh_quality(m), MeshError);
    }
}

TEST_CASE("mesh VTK export") {
    NotchedPlateGeometry g;
    const Mesh mesh = generate_notched_plate(g, {4, 4, 2}, 1.0, 0);
    const std::string path = "test_mesh_out.vtk";
    export_mesh_vtk(mesh, path);

    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    CHECK(line == "# vtk DataFile Version 3.0");
    int points = -1;
    size_t cells = 0;
    while (std::getline(in, line)) {
        if (line.rfind("POINTS", 0) == 0) std::sscanf(line.c_str(), "POINTS %d", &points);
        if (line.rfind("CELLS", 0) == 0) std::sscanf(line.c_str(), "CELLS %zu", &cells);
    }
    CHECK(points == mesh.node_count());
    CHECK(cells == mesh.elements.size() + mesh.boundary_facets.size());
    std::remove(path.c_str());
}
