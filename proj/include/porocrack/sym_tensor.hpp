#ifndef POROCRACK_SYM_TENSOR_HPP
#define POROCRACK_SYM_TENSOR_HPP

#include <array>
#include <cmath>

#include "porocrack/types.hpp"

namespace porocrack {

// Symmetric 3x3 tensor, six stored components in the fixed order
// (11, 22, 33, 12, 13, 23). Tensor components throughout -- no
// engineering-shear factor anywhere.
struct SymTensor3 {
    std::array<double, 6> c{};

    double& operator[](int i) { return c[i]; }
    double operator[](int i) const { return c[i]; }

    static SymTensor3 zero() { return {}; }
    static SymTensor3 identity() { return {{1.0, 1.0, 1.0, 0.0, 0.0, 0.0}}; }
    static SymTensor3 diag(double a, double b, double d) {
        return {{a, b, d, 0.0, 0.0, 0.0}};
    }

    double operator()(int i, int j) const {
        static constexpr int map[3][3] = {{0, 3, 4}, {3, 1, 5}, {4, 5, 2}};
        return c[map[i][j]];
    }

    double trace() const { return c[0] + c[1] + c[2]; }

    // full contraction A : B = sum_ij A_ij B_ij; off-diagonals count twice
    double ddot(const SymTensor3& o) const {
        return c[0] * o.c[0] + c[1] * o.c[1] + c[2] * o.c[2]
             + 2.0 * (c[3] * o.c[3] + c[4] * o.c[4] + c[5] * o.c[5]);
    }

    double frobenius_norm() const { return std::sqrt(ddot(*this)); }

    SymTensor3 operator+(const SymTensor3& o) const {
        SymTensor3 r;
        for (int i = 0; i < 6; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    SymTensor3 operator-(const SymTensor3& o) const {
        SymTensor3 r;
        for (int i = 0; i < 6; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    SymTensor3 operator*(double s) const {
        SymTensor3 r;
        for (int i = 0; i < 6; ++i) r.c[i] = c[i] * s;
        return r;
    }
    SymTensor3& operator+=(const SymTensor3& o) {
        for (int i = 0; i < 6; ++i) c[i] += o.c[i];
        return *this;
    }

    Mat3 full() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = (*this)(i, j);
        return r;
    }

    // symmetric part of a general 3x3
    static SymTensor3 sym_part(const Mat3& m) {
        SymTensor3 r;
        r.c[0] = m(0, 0);
        r.c[1] = m(1, 1);
        r.c[2] = m(2, 2);
        r.c[3] = 0.5 * (m(0, 1) + m(1, 0));
        r.c[4] = 0.5 * (m(0, 2) + m(2, 0));
        r.c[5] = 0.5 * (m(1, 2) + m(2, 1));
        return r;
    }
};

inline SymTensor3 operator*(double s, const SymTensor3& t) { return t * s; }

}  // namespace porocrack

#endif
