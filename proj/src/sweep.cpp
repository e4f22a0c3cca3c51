#include "porocrack/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>

#include "porocrack/errors.hpp"
#include "porocrack/recover.hpp"
#include "porocrack/vtk_export.hpp"

namespace porocrack {

std::string line_csv_name(double beta) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "line_beta_%g.csv", beta);
    return buf;
}

SweepRow run_case(const RunConfig& config, const Mesh& mesh, double beta,
                  std::ostream* log, LineSample* line_out, PicardResult* result_out) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    SweepRow row;
    row.beta = beta;
    row.tip_eps22 = row.tip_T22 = row.K_I = row.tip_W = nan;

    const MaterialParams params = config.material(beta);
    const LoadSpec loads = plate_tension_loads(mesh, config.geometry, config.uy_low,
                                               config.uy_high);
    SolverConfig solver = config.solver;
    solver.log = log;

    if (log) *log << "== beta = " << beta << "\n";
    PicardResult res = picard_solve(mesh, params, loads, solver);
    row.converged = res.status == PicardStatus::CONVERGED;
    row.status = res.status;
    row.picard_iterations = res.report.picard_iterations;
    row.max_grad_norm = res.report.max_grad_norm;

    if (res.status != PicardStatus::STRAIN_LIMIT) {
        // quantities from the final iterate, converged or not
        try {
            const RecoveredFields fields = recover_fields(mesh, res.u, params);
            const auto points =
                midline_points(config.geometry, config.sample_count, config.sample_r_max);
            const LineSample line = sample_midline(fields, mesh, points);
            row.tip_eps22 = line.rows.front().eps22;
            row.tip_T22 = line.rows.front().T22;
            row.tip_W = line.rows.front().energy;
            row.K_I = estimate_sif(line, config.fit_r_lo, config.fit_r_hi).K;
            if (line_out) *line_out = line;
        } catch (const StrainLimitError& err) {
            if (log) *log << "postprocess skipped: " << err.what() << "\n";
        }
    } else if (log) {
        *log << "solve failed: strain limit at element " << res.limit_element << ", qp "
             << res.limit_qp << "\n";
    }
    if (result_out) *result_out = std::move(res);
    return row;
}

SweepSummary run_sweep(const RunConfig& config, std::ostream* log) {
    config.validate();
    const Mesh mesh = generate_notched_plate(config.geometry, config.n_coarse, config.grading,
                                             config.tip_levels);
    SweepSummary summary;
    summary.quality = mesh_quality(mesh);
    if (log)
        *log << "mesh: " << summary.quality.element_count << " elements, "
             << summary.quality.node_count << " nodes, " << summary.quality.dof_count
             << " dofs, scaled Jacobian min " << summary.quality.min_scaled_jacobian
             << " mean " << summary.quality.mean_scaled_jacobian << "\n";

    namespace fs = std::filesystem;
    fs::create_directories(config.out_dir);

    for (double beta : config.betas) {
        LineSample line;
        PicardResult res;
        SweepRow row = run_case(config, mesh, beta, log, &line, &res);
        if (!line.rows.empty())
            export_csv(line, (fs::path(config.out_dir) / line_csv_name(beta)).string());
        if (config.write_vtk && res.status != PicardStatus::STRAIN_LIMIT) {
            try {
                const RecoveredFields fields = recover_fields(mesh, res.u, config.material(beta));
                char buf[64];
                std::snprintf(buf, sizeof buf, "fields_beta_%g.vtk", beta);
                export_vtk(mesh, fields, res.u, (fs::path(config.out_dir) / buf).string());
            } catch (const StrainLimitError&) {
            }
        }
        summary.rows.push_back(row);
    }
    write_summary_csv(summary, (fs::path(config.out_dir) / "summary.csv").string());
    return summary;
}

void write_summary_csv(const SweepSummary& summary, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "beta,converged,picard_iterations,tip_eps22,tip_T22_Pa,K_I_Pa_mm_half,tip_W_Pa,"
           "max_grad_norm\n";
    char buf[256];
    for (const auto& r : summary.rows) {
        std::snprintf(buf, sizeof buf, "%.12g,%d,%d,%.12g,%.12g,%.12g,%.12g,%.12g\n", r.beta,
                      r.converged ? 1 : 0, r.picard_iterations, r.tip_eps22, r.tip_T22, r.K_I,
                      r.tip_W, r.max_grad_norm);
        out << buf;
    }
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace porocrack
