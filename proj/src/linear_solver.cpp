#include "porocrack/linear_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Sparse>

#include "porocrack/errors.hpp"
#include "porocrack/kernels.hpp"

namespace porocrack {

LinearSolverKind linear_solver_from_name(const std::string& name) {
    if (name == "cg") return LinearSolverKind::CG;
    if (name == "direct") return LinearSolverKind::DIRECT;
    throw ConfigError("unknown linear solver '" + name + "' (use cg or direct)");
}

const char* linear_solver_name(LinearSolverKind k) {
    return k == LinearSolverKind::CG ? "cg" : "direct";
}

std::vector<double> solve_cg(const SparseSystem& sys, double tol, int max_iter,
                             const std::vector<double>* x0, int* iters_out) {
    const int n = sys.A.n;
    const size_t un = static_cast<size_t>(n);
    std::vector<double> x(un, 0.0);
    if (x0 && x0->size() == un) x = *x0;
    // seed constrained dofs with their values so those residual rows vanish
    for (int i = 0; i < n; ++i)
        if (!sys.constrained.empty() && sys.constrained[static_cast<size_t>(i)])
            x[static_cast<size_t>(i)] = sys.constrained_value[static_cast<size_t>(i)];

    std::vector<double> r(un), z(un), p(un), Ap(un), dinv(un);
    for (int i = 0; i < n; ++i) {
        const int d = sys.A.find(i, i);
        const double dv = d >= 0 ? sys.A.val[static_cast<size_t>(d)] : 0.0;
        if (!(dv > 0.0))
            throw SolverError("cg: nonpositive diagonal at dof " + std::to_string(i)
                              + " (system not SPD)");
        dinv[static_cast<size_t>(i)] = 1.0 / dv;
    }

    kernels::spmv(sys.A, x.data(), Ap.data());
    for (int i = 0; i < n; ++i) r[static_cast<size_t>(i)] = sys.b[static_cast<size_t>(i)] - Ap[static_cast<size_t>(i)];
    const double bnorm = kernels::norm2(sys.b.data(), un);
    const double stop = tol * (bnorm > 0.0 ? bnorm : 1.0);

    if (max_iter <= 0) max_iter = std::max(1000, 8 * n);

    double rnorm = kernels::norm2(r.data(), un);
    int it = 0;
    if (rnorm > stop) {
        for (int i = 0; i < n; ++i) z[static_cast<size_t>(i)] = dinv[static_cast<size_t>(i)] * r[static_cast<size_t>(i)];
        p = z;
        double rz = kernels::dot(r.data(), z.data(), un);
        for (it = 1; it <= max_iter; ++it) {
            kernels::spmv(sys.A, p.data(), Ap.data());
            const double pAp = kernels::dot(p.data(), Ap.data(), un);
            if (!(pAp > 0.0))
                throw SolverError("cg: p'Ap = " + std::to_string(pAp)
                                  + " <= 0, matrix is not positive definite");
            const double alpha = rz / pAp;
            kernels::axpy(alpha, p.data(), x.data(), un);
            kernels::axpy(-alpha, Ap.data(), r.data(), un);
            rnorm = kernels::norm2(r.data(), un);
            if (rnorm <= stop) break;
            for (int i = 0; i < n; ++i) z[static_cast<size_t>(i)] = dinv[static_cast<size_t>(i)] * r[static_cast<size_t>(i)];
            const double rz_new = kernels::dot(r.data(), z.data(), un);
            kernels::xpay(z.data(), rz_new / rz, p.data(), un);
            rz = rz_new;
        }
        if (rnorm > stop)
            throw SolverError("cg: stagnated after " + std::to_string(max_iter)
                              + " iterations, residual " + std::to_string(rnorm / (bnorm > 0 ? bnorm : 1.0)));
    }
    if (iters_out) *iters_out = it;
    return x;
}

std::vector<double> solve_direct(const SparseSystem& sys) {
    const int n = sys.A.n;
    Eigen::Map<const Eigen::SparseMatrix<double, Eigen::RowMajor, int>> A(
        n, n, sys.A.nnz(), sys.A.row_ptr.data(), sys.A.col.data(), sys.A.val.data());
    Eigen::SparseMatrix<double> Acol = A;  // LLT wants column major
    Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt(Acol);
    if (llt.info() != Eigen::Success)
        throw SolverError("direct: Cholesky factorization failed (system not SPD)");
    Eigen::Map<const Eigen::VectorXd> b(sys.b.data(), n);
    Eigen::VectorXd x = llt.solve(b);
    if (llt.info() != Eigen::Success)
        throw SolverError("direct: Cholesky solve failed");
    return std::vector<double>(x.data(), x.data() + n);
}

std::vector<double> solve_linear(const SparseSystem& sys, const LinearSolverOptions& opts,
                                 const std::vector<double>* x0) {
    if (opts.kind == LinearSolverKind::DIRECT) return solve_direct(sys);
    return solve_cg(sys, opts.cg_tol, opts.cg_max_iter, x0);
}

}  // namespace porocrack
