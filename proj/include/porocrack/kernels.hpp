#ifndef POROCRACK_KERNELS_HPP
#define POROCRACK_KERNELS_HPP

#include <cstddef>

#include "porocrack/sparse.hpp"

namespace porocrack {

// Hot vector/matrix kernels. Each comes in an OpenMP flavor (the default)
// and a _serial reference used by the tests and the benchmark. spmv owns
// whole rows per iteration and the reductions combine a fixed number of
// chunk partials in index order, so results are bitwise independent of the
// thread count.
namespace kernels {

void spmv(const CsrMatrix& A, const double* x, double* y);
void spmv_serial(const CsrMatrix& A, const double* x, double* y);

double dot(const double* a, const double* b, std::size_t n);
double dot_serial(const double* a, const double* b, std::size_t n);

double norm2(const double* a, std::size_t n);

// y += alpha x
void axpy(double alpha, const double* x, double* y, std::size_t n);
// p = z + beta p
void xpay(const double* z, double beta, double* p, std::size_t n);

}  // namespace kernels

}  // namespace porocrack

#endif
