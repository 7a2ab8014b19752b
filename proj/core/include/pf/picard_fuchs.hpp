#pragma once
/*
 * Assembly of the annihilating operator of the family's holomorphic form:
 * reduce successive parameter derivatives of V/f, search for the first
 * linear dependency over Q(t), normalize, and fold the per-step witnesses
 * into a single certificate beta with D(V/f) = d(beta) as forms.
 */

#include "pf/reduction.hpp"

namespace pf {

struct PicardFuchsResult {
    DiffOperator op;  // normalized: coefficients in Q[t], content 1,
                      // positive leading integer coefficient
    Certificate cert;  // one merged term per pole order k = 2..order+1
    int order = 0;
    // Dimension of the full reduced-class space (upper bound used for the
    // automatic order cap).
    int space_dim = 0;
};

// max_order < 0 selects the automatic cap (the reduced-space dimension).
// Throws FamilyError if the generic fiber is singular, NoOperatorError if
// no dependency exists within the cap.
PicardFuchsResult picard_fuchs(const FamilySpec& spec, JacobianData& jd, int max_order = -1);

}  // namespace pf
