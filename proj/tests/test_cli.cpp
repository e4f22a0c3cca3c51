// Exit-code contract of the porocrack binary, exercised through the shell.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(POROCRACK_BIN) + " " + args + " > cli_stdout.txt 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string stdout_text() {
    std::ifstream in("cli_stdout.txt");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

const char* kTinyMesh =
    "mesh.nx = 6\nmesh.ny = 6\nmesh.nz = 2\nmesh.tip_levels = 1\n"
    "sample.count = 41\nsample.r_max = 20\n";

}  // namespace

TEST_CASE("mesh subcommand succeeds and writes the VTK") {
    write_file("cli_tiny.cfg", kTinyMesh);
    CHECK(run("mesh --config cli_tiny.cfg --out cli_out --quiet") == 0);
    CHECK(fs::exists("cli_out/mesh.vtk"));
    fs::remove_all("cli_out");
}

TEST_CASE("solve --beta 0 exits 0") {
    write_file("cli_tiny.cfg", kTinyMesh);
    CHECK(run("solve --beta 0 --config cli_tiny.cfg --out cli_out --quiet") == 0);
    CHECK(fs::exists("cli_out/line_beta_0.csv"));
    fs::remove_all("cli_out");
}

TEST_CASE("malformed config exits 2") {
    write_file("cli_bad.cfg", "material.nu = 0.8\n");
    CHECK(run("solve --beta 0 --config cli_bad.cfg --quiet") == 2);
    write_file("cli_bad.cfg", "not.a.key = 1\n");
    CHECK(run("mesh --config cli_bad.cfg --quiet") == 2);
    CHECK(run("--bogus-flag") == 2);
}

TEST_CASE("non-convergence exits 3") {
    write_file("cli_nc.cfg", std::string(kTinyMesh) + "solver.max_picard = 1\n");
    CHECK(run("solve --beta 30 --config cli_nc.cfg --out cli_out --quiet") == 3);
    fs::remove_all("cli_out");
}

TEST_CASE("strain-limit violation exits 4") {
    // beta = -30 on a tip-refined mesh leaves the model's validity regime
    write_file("cli_sl.cfg",
               "mesh.nx = 8\nmesh.ny = 8\nmesh.nz = 2\nmesh.tip_levels = 3\n");
    CHECK(run("solve --beta -30 --config cli_sl.cfg --out cli_out --quiet") == 4);
    fs::remove_all("cli_out");
}

TEST_CASE("dump-config round-trips through the parser") {
    CHECK(run("--dump-config") == 0);
    const std::string dumped = stdout_text();
    CHECK(dumped.find("geometry.side = 100") != std::string::npos);
    write_file("cli_dumped.cfg", dumped);
    CHECK(run("--dump-config --config cli_dumped.cfg") == 0);
    CHECK(stdout_text() == dumped);
}

TEST_CASE("sweep writes summary.csv") {
    write_file("cli_sw.cfg", std::string(kTinyMesh) + "sweep.betas = -5,0,5\n");
    CHECK(run("sweep --config cli_sw.cfg --out cli_out --quiet") == 0);
    CHECK(fs::exists("cli_out/summary.csv"));
    fs::remove_all("cli_out");
}
