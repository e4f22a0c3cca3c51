#include "porocrack/kernels.hpp"

#include <cmath>

namespace porocrack {
namespace kernels {

void spmv(const CsrMatrix& A, const double* x, double* y) {
#pragma omp parallel for schedule(static)
    for (int r = 0; r < A.n; ++r) {
        double s = 0.0;
        for (int k = A.row_ptr[static_cast<size_t>(r)];
             k < A.row_ptr[static_cast<size_t>(r) + 1]; ++k)
            s += A.val[static_cast<size_t>(k)] * x[A.col[static_cast<size_t>(k)]];
        y[r] = s;
    }
}

void spmv_serial(const CsrMatrix& A, const double* x, double* y) {
    for (int r = 0; r < A.n; ++r) {
        double s = 0.0;
        for (int k = A.row_ptr[static_cast<size_t>(r)];
             k < A.row_ptr[static_cast<size_t>(r) + 1]; ++k)
            s += A.val[static_cast<size_t>(k)] * x[A.col[static_cast<size_t>(k)]];
        y[r] = s;
    }
}

namespace {
constexpr std::size_t kDotChunks = 256;
}

// Fixed chunk partials summed in index order: the association does not
// depend on how many threads ran, only on kDotChunks.
double dot(const double* a, const double* b, std::size_t n) {
    if (n < 4096) return dot_serial(a, b, n);
    const std::size_t chunk = (n + kDotChunks - 1) / kDotChunks;
    double partial[kDotChunks] = {0.0};
    const int nc = static_cast<int>((n + chunk - 1) / chunk);
#pragma omp parallel for schedule(static)
    for (int c = 0; c < nc; ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * chunk;
        const std::size_t hi = lo + chunk < n ? lo + chunk : n;
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i];
        partial[c] = s;
    }
    double total = 0.0;
    for (int c = 0; c < nc; ++c) total += partial[c];
    return total;
}

double dot_serial(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double norm2(const double* a, std::size_t n) { return std::sqrt(dot(a, a, n)); }

void axpy(double alpha, const double* x, double* y, std::size_t n) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        y[i] += alpha * x[i];
}

void xpay(const double* z, double beta, double* p, std::size_t n) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        p[i] = z[i] + beta * p[i];
}

}  // namespace kernels
}  // namespace porocrack
