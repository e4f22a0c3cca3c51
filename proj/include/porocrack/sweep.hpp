#ifndef POROCRACK_SWEEP_HPP
#define POROCRACK_SWEEP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "porocrack/config.hpp"
#include "porocrack/line_sample.hpp"
#include "porocrack/picard.hpp"

namespace porocrack {

struct SweepRow {
    double beta = 0.0;
    bool converged = false;
    int picard_iterations = 0;
    double tip_eps22 = 0.0;
    double tip_T22 = 0.0;
    double K_I = 0.0;
    double tip_W = 0.0;
    double max_grad_norm = 0.0;
    PicardStatus status = PicardStatus::CONVERGED;
};

struct SweepSummary {
    std::vector<SweepRow> rows;  // one per requested beta, input order
    MeshQualityReport quality;
};

// One solve + postprocess pass at a fixed beta on a prebuilt mesh. Fills
// line_out when sampling succeeds. Solver failures are reported through the
// row, not thrown.
SweepRow run_case(const RunConfig& config, const Mesh& mesh, double beta,
                  std::ostream* log, LineSample* line_out = nullptr,
                  PicardResult* result_out = nullptr);

// The full experiment: one mesh, one solve per beta, per-line CSVs plus
// summary.csv under config.out_dir. A failing beta yields a flagged row and
// NaN quantities; a mesh failure aborts.
SweepSummary run_sweep(const RunConfig& config, std::ostream* log = nullptr);

void write_summary_csv(const SweepSummary& summary, const std::string& path);

// "line_beta_<value>.csv"
std::string line_csv_name(double beta);

}  // namespace porocrack

#endif
