#include <doctest.h>

#include <string>

#include "porocrack/config.hpp"
#include "porocrack/errors.hpp"

using namespace porocrack;

TEST_CASE("empty config gives the reference-experiment defaults") {
    const RunConfig c = parse_config_text("");
    CHECK(c.geometry.side_length == 100.0);
    CHECK(c.geometry.thickness == 10.0);
    CHECK(c.geometry.notch_angle_deg == 2.0);
    CHECK(c.geometry.notch_depth == 50.0);
    CHECK(c.E == 1e4);
    CHECK(c.nu == 0.3);
    CHECK(c.uy_low == -1.0);
    CHECK(c.uy_high == 1.0);
    CHECK(c.solver.tol_rel == 0.001);
    CHECK(c.solver.max_picard == 1000);
    REQUIRE(c.betas.size() == 7);
    CHECK(c.betas.front() == -30.0);
    CHECK(c.betas.back() == 30.0);
    CHECK_FALSE(c.rho0.has_value());
}

TEST_CASE("key parsing") {
    SUBCASE("values, comments and blanks") {
        const RunConfig c = parse_config_text(
            "# comment line\n"
            "\n"
            "material.E = 2e4   # trailing comment\n"
            "  mesh.nx   =  6\n"
            "sweep.betas = 1, 2.5 ,3\n"
            "output.vtk = true\n"
            "solver.linear = direct\n");
        CHECK(c.E == 2e4);
        CHECK(c.n_coarse[0] == 6);
        REQUIRE(c.betas.size() == 3);
        CHECK(c.betas[1] == 2.5);
        CHECK(c.write_vtk);
        CHECK(c.solver.linear_solver == LinearSolverKind::DIRECT);
    }
    SUBCASE("unknown keys are rejected with the line number") {
        try {
            parse_config_text("material.E = 1e4\nmaterial.bogus = 3\n");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
            CHECK(std::string(e.what()).find("material.bogus") != std::string::npos);
        }
    }
    SUBCASE("malformed lines carry their line number") {
        try {
            parse_config_text("\nthis is not a key value pair\n");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    SUBCASE("bad numbers are rejected") {
        CHECK_THROWS_AS(parse_config_text("material.E = fast\n"), ConfigError);
        CHECK_THROWS_AS(parse_config_text("mesh.nx = 3.5\n"), ConfigError);
        CHECK_THROWS_AS(parse_config_text("output.vtk = maybe\n"), ConfigError);
    }
}

TEST_CASE("domain validation names the key") {
    try {
        parse_config_text("material.nu = 0.6\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("material.nu") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config_text("material.E = -5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("geometry.notch_angle = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("geometry.notch_edge = y_min\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("sweep.betas = \n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("solver.damping = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("sample.r_max = 80\n"), ConfigError);
}

TEST_CASE("dump and reparse round-trips") {
    SUBCASE("defaults") {
        const RunConfig c0 = parse_config_text("");
        const std::string d0 = dump_config(c0);
        const RunConfig c1 = parse_config_text(d0);
        CHECK(dump_config(c1) == d0);
    }
    SUBCASE("fully explicit non-default file") {
        const std::string text =
            "geometry.side = 80\n"
            "geometry.thickness = 12\n"
            "geometry.notch_angle = 3.5\n"
            "geometry.notch_depth = 40\n"
            "geometry.notch_edge = x_max\n"
            "material.E = 2.5e4\n"
            "material.nu = 0.27\n"
            "material.rho0 = 900\n"
            "sweep.betas = -5,0,5\n"
            "load.uy_low = -0.5\n"
            "load.uy_high = 0.75\n"
            "solver.tol_rel = 0.0005\n"
            "solver.max_picard = 250\n"
            "solver.linear = direct\n"
            "solver.cg_tol = 1e-11\n"
            "solver.cg_max_iter = 1234\n"
            "solver.damping = 0.9\n"
            "solver.small_grad_warn = 0.2\n"
            "mesh.nx = 10\n"
            "mesh.ny = 8\n"
            "mesh.nz = 3\n"
            "mesh.grading = 1.5\n"
            "mesh.tip_levels = 2\n"
            "sample.count = 101\n"
            "sample.r_max = 25\n"
            "sample.fit_r_lo = 0.4\n"
            "sample.fit_r_hi = 4\n"
            "output.dir = results\n"
            "output.vtk = true\n";
        const RunConfig c = parse_config_text(text);
        CHECK(c.rho0 == 900.0);
        CHECK(c.solver.cg_max_iter == 1234);
        CHECK(c.out_dir == "results");
        const RunConfig c2 = parse_config_text(dump_config(c));
        CHECK(dump_config(c2) == dump_config(c));
        CHECK(c2.betas == c.betas);
        CHECK(c2.grading == c.grading);
    }
}
