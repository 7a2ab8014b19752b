#pragma once
/*
 * Sparse column-echelon basis over Q[t] with witness tracking, used for
 * graded slices of the Jacobian ideal.  Each inserted column is reduced
 * fraction-free against the existing basis; the identical row operations
 * and content stripping are applied to a witness vector expressing the
 * column as a combination of the raw generators, so membership tests come
 * with an explicit certificate for free.
 *
 * Determinism: columns are inserted in a caller-fixed order, the pivot of
 * a freshly reduced column is its minimal-t-degree entry (ties: smallest
 * row index), and every stored column is jointly primitive (integer
 * coefficients, overall content 1, positive pivot leading coefficient).
 */

#include <map>
#include <utility>
#include <vector>

#include "pf/paramrat.hpp"

namespace pf {

// Sorted-by-row sparse vector with polynomial entries.
using SparseVecPoly = std::vector<std::pair<int, ParamPoly>>;
// Same with rational-function entries (used for reduction queries).
using SparseVecRat = std::vector<std::pair<int, ParamRat>>;

class SparseEchelon {
public:
    struct InsertResult {
        bool independent = false;
        int pivot_row = -1;
    };

    // Inserts the column `v` whose expression in raw generators is `wit`
    // (typically the unit vector of the generator being inserted, possibly
    // scaled).  Entries must be sorted by row index.
    InsertResult insert(SparseVecPoly v, SparseVecPoly wit);

    struct Reduction {
        // What is left of the query after subtracting the ideal part; only
        // non-pivot rows can appear.
        SparseVecRat remainder;
        // Coefficients of the raw generators reproducing query - remainder.
        std::map<int, ParamRat> generator_coeffs;
    };

    // Reduces an arbitrary vector over Q(t) against the basis.
    Reduction reduce(const SparseVecRat& query) const;

    int rank() const { return static_cast<int>(cols_.size()); }
    bool is_pivot_row(int row) const { return pivot_of_row_.count(row) > 0; }

private:
    struct Column {
        int pivot_row = -1;
        SparseVecPoly v;
        SparseVecPoly wit;
    };
    std::vector<Column> cols_;          // in insertion order
    std::map<int, int> pivot_of_row_;   // row -> index into cols_
};

}  // namespace pf
