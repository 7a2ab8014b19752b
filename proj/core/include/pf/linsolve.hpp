#pragma once
/*
 * Dense exact linear algebra over the field of rational functions Q(t).
 * Rows are cleared to primitive integer polynomials, elimination is
 * fraction-free with content stripping after every pivot, and the pivot is
 * always the minimal-t-degree entry of the remaining submatrix (ties:
 * smallest column index, then smallest row index).  Deterministic by
 * construction.
 */

#include <optional>
#include <vector>

#include "pf/paramrat.hpp"

namespace pf {

struct ExactMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<ParamRat> a;  // row-major

    ExactMatrix() = default;
    ExactMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    ParamRat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const ParamRat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

struct SolveReport {
    bool consistent = false;
    int rank = 0;
    std::vector<int> pivot_cols;
};

// Solves A x = b exactly.  Returns nullopt when inconsistent; consistent
// underdetermined systems get the particular solution with free variables
// set to zero.  The optional report carries rank and pivot columns.
std::optional<std::vector<ParamRat>> solve_exact(const ExactMatrix& A,
                                                 const std::vector<ParamRat>& b,
                                                 SolveReport* report = nullptr);

}  // namespace pf
