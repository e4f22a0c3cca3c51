#ifndef POROCRACK_SPARSE_HPP
#define POROCRACK_SPARSE_HPP

#include <cstdint>
#include <vector>

namespace porocrack {

// Compressed-row square matrix; both triangles stored so the symmetric
// product is a plain row sweep. Column indices ascending within each row.
struct CsrMatrix {
    int n = 0;
    std::vector<int> row_ptr;  // size n + 1
    std::vector<int> col;
    std::vector<double> val;

    int nnz() const { return static_cast<int>(col.size()); }

    // index into val for entry (r, c); -1 when outside the pattern
    int find(int r, int c) const {
        int lo = row_ptr[static_cast<size_t>(r)], hi = row_ptr[static_cast<size_t>(r) + 1];
        while (lo < hi) {
            const int mid = (lo + hi) / 2;
            if (col[static_cast<size_t>(mid)] < c)
                lo = mid + 1;
            else
                hi = mid;
        }
        return (lo < row_ptr[static_cast<size_t>(r) + 1] && col[static_cast<size_t>(lo)] == c)
                   ? lo : -1;
    }
};

// Assembled linear system plus the Dirichlet bookkeeping. Constrained rows
// are reduced to identity and their columns moved to the right-hand side, so
// the remaining block is SPD and the full-size system can be solved as-is.
struct SparseSystem {
    CsrMatrix A;
    std::vector<double> b;
    std::vector<std::uint8_t> constrained;   // per dof
    std::vector<double> constrained_value;   // valid where constrained
    bool dirichlet_applied = false;
};

}  // namespace porocrack

#endif
