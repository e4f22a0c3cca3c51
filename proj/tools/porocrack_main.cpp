// porocrack: crack-tip fields in a v-notched plate with density-dependent
// moduli. Subcommands: mesh (generate + quality + VTK), solve (single beta),
// sweep (the full beta experiment).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "porocrack/config.hpp"
#include "porocrack/errors.hpp"
#include "porocrack/parallel.hpp"
#include "porocrack/recover.hpp"
#include "porocrack/sweep.hpp"
#include "porocrack/vtk_export.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNonConverged = 3;
constexpr int kExitStrainLimit = 4;

int status_exit_code(porocrack::PicardStatus s) {
    switch (s) {
        case porocrack::PicardStatus::CONVERGED: return kExitOk;
        case porocrack::PicardStatus::NON_CONVERGED: return kExitNonConverged;
        case porocrack::PicardStatus::STRAIN_LIMIT: return kExitStrainLimit;
    }
    return 1;
}

void print_quality(const porocrack::MeshQualityReport& q, std::ostream& out) {
    out << "elements:             " << q.element_count << "\n"
        << "nodes:                " << q.node_count << "\n"
        << "dofs:                 " << q.dof_count << "\n"
        << "scaled Jacobian min:  " << q.min_scaled_jacobian << "\n"
        << "scaled Jacobian mean: " << q.mean_scaled_jacobian << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    using namespace porocrack;
    init_threads_from_env();

    CLI::App app{"crack-tip fields for a v-notched porous elastic plate"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string config_path;
    std::string out_dir;
    std::string solver_name;
    bool quiet = false;
    bool dump = false;
    app.add_option("--config", config_path, "run configuration file");
    app.add_option("--out", out_dir, "output directory (overrides output.dir)");
    app.add_option("--solver", solver_name, "linear solver: cg or direct")
        ->check(CLI::IsMember({"cg", "direct"}));
    app.add_flag("--quiet", quiet, "suppress progress output");
    app.add_flag("--dump-config", dump, "print the fully defaulted configuration and exit");

    auto* cmd_mesh = app.add_subcommand("mesh", "generate the mesh, report quality, write VTK");
    auto* cmd_solve = app.add_subcommand("solve", "solve a single beta value");
    auto* cmd_sweep = app.add_subcommand("sweep", "run the full beta sweep");
    double beta_arg = 0.0;
    auto* beta_opt = cmd_solve->add_option("--beta", beta_arg, "density-coupling parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        RunConfig config =
            config_path.empty() ? RunConfig{} : parse_config_file(config_path);
        if (!out_dir.empty()) config.out_dir = out_dir;
        if (!solver_name.empty())
            config.solver.linear_solver = linear_solver_from_name(solver_name);
        config.validate();

        if (dump) {
            std::cout << dump_config(config);
            return kExitOk;
        }

        std::ostream* log = quiet ? nullptr : &std::cerr;
        namespace fs = std::filesystem;

        if (cmd_mesh->parsed()) {
            const Mesh mesh = generate_notched_plate(config.geometry, config.n_coarse,
                                                     config.grading, config.tip_levels);
            const auto q = mesh_quality(mesh);
            print_quality(q, std::cout);
            fs::create_directories(config.out_dir);
            const std::string path = (fs::path(config.out_dir) / "mesh.vtk").string();
            export_mesh_vtk(mesh, path);
            std::cout << "mesh written to " << path << "\n";
            return kExitOk;
        }

        if (cmd_solve->parsed()) {
            const double beta = beta_opt->count() ? beta_arg : config.betas.front();
            const Mesh mesh = generate_notched_plate(config.geometry, config.n_coarse,
                                                     config.grading, config.tip_levels);
            fs::create_directories(config.out_dir);
            LineSample line;
            PicardResult res;
            const SweepRow row = run_case(config, mesh, beta, log, &line, &res);
            if (!line.rows.empty())
                export_csv(line, (fs::path(config.out_dir) / line_csv_name(beta)).string());
            if (config.write_vtk && res.status != PicardStatus::STRAIN_LIMIT) {
                const RecoveredFields fields = recover_fields(mesh, res.u, config.material(beta));
                char buf[64];
                std::snprintf(buf, sizeof buf, "fields_beta_%g.vtk", beta);
                export_vtk(mesh, fields, res.u, (fs::path(config.out_dir) / buf).string());
            }
            std::printf("beta %g: %s in %d iterations, tip T22 = %g Pa, K_I = %g Pa mm^1/2\n",
                        beta, row.converged ? "converged" : "FAILED", row.picard_iterations,
                        row.tip_T22, row.K_I);
            return status_exit_code(res.status);
        }

        // default subcommand: sweep
        const SweepSummary summary = run_sweep(config, log);
        std::printf("%8s %10s %6s %12s %12s %12s\n", "beta", "converged", "iters", "tip_T22",
                    "K_I", "tip_W");
        int exit_code = kExitOk;
        for (const auto& r : summary.rows) {
            std::printf("%8g %10s %6d %12.5g %12.5g %12.5g\n", r.beta,
                        r.converged ? "yes" : "NO", r.picard_iterations, r.tip_T22, r.K_I,
                        r.tip_W);
            if (exit_code == kExitOk && !r.converged) exit_code = status_exit_code(r.status);
        }
        std::printf("outputs in %s\n", config.out_dir.c_str());
        (void)cmd_sweep;
        return exit_code;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const StrainLimitError& e) {
        std::cerr << "strain-limit violation: " << e.what() << "\n";
        return kExitStrainLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
