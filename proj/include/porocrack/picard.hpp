#ifndef POROCRACK_PICARD_HPP
#define POROCRACK_PICARD_HPP

#include <iosfwd>
#include <vector>

#include "porocrack/assembly.hpp"
#include "porocrack/linear_solver.hpp"

namespace porocrack {

struct SolverConfig {
    double tol_rel = 0.001;       // Picard stopping tolerance on the increment
    int max_picard = 1000;
    LinearSolverKind linear_solver = LinearSolverKind::CG;
    double cg_tol = 1e-10;
    int cg_max_iter = 0;          // 0: auto
    double damping = 1.0;         // update u <- w u_new + (1-w) u_old, w in (0, 1]
    double small_grad_warn = 0.1; // warn when max ||grad u|| exceeds this
    std::ostream* log = nullptr;  // per-iteration diagnostics, may be null

    void validate() const;  // throws ConfigError

    LinearSolverOptions linear_options() const {
        return {linear_solver, cg_tol, cg_max_iter};
    }
};

struct SolveReport {
    int picard_iterations = 0;
    std::vector<double> residual_history;
    bool converged = false;
    double max_grad_norm = 0.0;  // of the final iterate
    double min_coeff = 0.0;      // min of 1 + beta div(u) over qps, final iterate
    bool small_grad_warning = false;
};

enum class PicardStatus { CONVERGED, NON_CONVERGED, STRAIN_LIMIT };

struct PicardResult {
    PicardStatus status = PicardStatus::CONVERGED;
    DisplacementField u;   // converged field, or the last valid iterate
    SolveReport report;
    // strain-limit location when status == STRAIN_LIMIT
    int limit_element = -1;
    int limit_qp = -1;
    double limit_coeff = 0.0;
};

// relative displacement increment, ||u_new - u_old||_2 / max(||u_new||_2, floor)
double residual(const DisplacementField& u_new, const DisplacementField& u_old);

// Outer fixed-point loop: the initial guess solves the beta = 0 problem,
// then each iteration re-assembles with the coefficient frozen at the
// previous iterate and solves the linear SPD system. For beta = 0 the first
// iteration reproduces the initial guess and the loop stops with residual 0.
PicardResult picard_solve(const Mesh& mesh, const MaterialParams& params,
                          const LoadSpec& loads, const SolverConfig& config);

}  // namespace porocrack

#endif
