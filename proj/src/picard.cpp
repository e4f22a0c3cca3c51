#include "porocrack/picard.hpp"

#include <cmath>
#include <ostream>

#include "porocrack/errors.hpp"
#include "porocrack/kernels.hpp"

namespace porocrack {

void SolverConfig::validate() const {
    if (!(tol_rel > 0.0)) throw ConfigError("solver.tol_rel must be positive");
    if (max_picard < 1) throw ConfigError("solver.max_picard must be >= 1");
    if (!(cg_tol > 0.0)) throw ConfigError("solver.cg_tol must be positive");
    if (!(damping > 0.0 && damping <= 1.0))
        throw ConfigError("solver.damping must lie in (0, 1]");
    if (!(small_grad_warn > 0.0)) throw ConfigError("solver.small_grad_warn must be positive");
}

double residual(const DisplacementField& u_new, const DisplacementField& u_old) {
    double diff2 = 0.0;
    for (size_t i = 0; i < u_new.size(); ++i) {
        const double d = u_new[i] - u_old[i];
        diff2 += d * d;
    }
    const double norm = kernels::norm2(u_new.data(), u_new.size());
    return std::sqrt(diff2) / std::max(norm, 1e-300);
}

PicardResult picard_solve(const Mesh& mesh, const MaterialParams& params,
                          const LoadSpec& loads, const SolverConfig& config) {
    params.validate();
    config.validate();
    const auto opts = config.linear_options();

    PicardResult out;

    // initial guess: the beta = 0 problem (zero frozen field gives div = 0)
    const DisplacementField zero(static_cast<size_t>(mesh.dof_count()), 0.0);
    {
        SparseSystem sys = assemble(mesh, params, zero, loads);
        apply_dirichlet(sys, loads, mesh);
        out.u = solve_linear(sys, opts);
    }

    for (int n = 0; n < config.max_picard; ++n) {
        SparseSystem sys;
        AssemblyStats stats;
        try {
            sys = assemble(mesh, params, out.u, loads, &stats);
        } catch (const StrainLimitError& err) {
            out.status = PicardStatus::STRAIN_LIMIT;
            out.limit_element = err.element_id;
            out.limit_qp = err.qp;
            out.limit_coeff = err.coeff;
            out.report.picard_iterations = n;
            out.report.converged = false;
            const auto gs = displacement_gradient_stats(mesh, params, out.u);
            out.report.max_grad_norm = gs.max_grad_norm;
            out.report.min_coeff = gs.min_den;
            if (config.log)
                *config.log << "picard: strain limit hit at iteration " << n + 1
                            << ", element " << err.element_id << ", qp " << err.qp
                            << ", 1+beta*div = " << err.coeff << "\n";
            return out;
        }
        apply_dirichlet(sys, loads, mesh);
        DisplacementField u_next = solve_linear(sys, opts, &out.u);
        if (config.damping < 1.0) {
            for (size_t i = 0; i < u_next.size(); ++i)
                u_next[i] = config.damping * u_next[i] + (1.0 - config.damping) * out.u[i];
        }
        const double res = residual(u_next, out.u);
        out.report.residual_history.push_back(res);
        out.u = std::move(u_next);
        if (config.log)
            *config.log << "picard: iter " << n + 1 << "  residual " << res
                        << "  min_coeff " << stats.min_den << "\n";
        if (res <= config.tol_rel) {
            out.report.converged = true;
            break;
        }
    }
    out.report.picard_iterations = static_cast<int>(out.report.residual_history.size());
    out.status = out.report.converged ? PicardStatus::CONVERGED : PicardStatus::NON_CONVERGED;

    const auto gs = displacement_gradient_stats(mesh, params, out.u);
    out.report.max_grad_norm = gs.max_grad_norm;
    out.report.min_coeff = gs.min_den;
    out.report.small_grad_warning = gs.max_grad_norm > config.small_grad_warn;
    if (out.report.small_grad_warning && config.log)
        *config.log << "picard: warning, max ||grad u|| = " << gs.max_grad_norm
                    << " exceeds the small-gradient threshold " << config.small_grad_warn
                    << "\n";
    return out;
}

}  // namespace porocrack
