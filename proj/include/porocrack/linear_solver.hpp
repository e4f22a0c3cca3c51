#ifndef POROCRACK_LINEAR_SOLVER_HPP
#define POROCRACK_LINEAR_SOLVER_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "porocrack/sparse.hpp"

namespace porocrack {

enum class LinearSolverKind { CG, DIRECT };

LinearSolverKind linear_solver_from_name(const std::string& name);  // "cg" | "direct"
const char* linear_solver_name(LinearSolverKind k);

struct LinearSolverOptions {
    LinearSolverKind kind = LinearSolverKind::CG;
    double cg_tol = 1e-10;  // relative residual ||Ax-b|| / ||b||
    int cg_max_iter = 0;    // 0: derived from the system size
};

// Solves the (Dirichlet-reduced) SPD system. x0, when sized, seeds the CG
// iteration; constrained entries of the solution equal their prescribed
// values by construction. Throws SolverError on CG breakdown/stagnation or
// a failed factorization -- with the assembly guarding 1 + beta div(u) > 0,
// either indicates an indefinite system from a strain-limit violation
// upstream.
std::vector<double> solve_linear(const SparseSystem& system, const LinearSolverOptions& opts,
                                 const std::vector<double>* x0 = nullptr);

// Jacobi-preconditioned conjugate gradients on the full-size system.
std::vector<double> solve_cg(const SparseSystem& system, double tol, int max_iter,
                             const std::vector<double>* x0, int* iters_out = nullptr);

// Sparse Cholesky (Eigen SimplicialLLT) behind the same contract.
std::vector<double> solve_direct(const SparseSystem& system);

}  // namespace porocrack

#endif
