#pragma once
/*
 * Pole-order reduction of rational n-forms P*V/f^k on the hypersurface
 * complement (V the projective volume form).  Each step splits the
 * numerator across the Jacobian ideal and trades one pole order for an
 * explicit exact form, whose witness is recorded as a certificate term:
 *
 *   P*V/f^k = rem*V/f^k + (div A)/(k-1) * V/f^(k-1)
 *             + d( -1/(k-1) * iota_A V / f^(k-1) )
 *
 * with P = sum A_i df/dx_i + rem and
 * iota_A V = sum_{i<j} (-1)^(i+j+1) (x_i A_j - x_j A_i) dx_(ij)
 * (dx_(ij): ascending wedge of all coordinate differentials except i, j).
 */

#include <vector>

#include "pf/diffop.hpp"
#include "pf/jacobian.hpp"

namespace pf {

struct PoleForm {
    MultiPoly numerator;
    int k = 1;  // pole order; numerator degree k*m - (n+1)
};

// Canonical first representative: V/f.
PoleForm omega_form(const FamilySpec& spec);

// Parameter derivative of the class: (f dP/dt - k P df/dt) / f^(k+1).
PoleForm gm_derivative(const PoleForm& pf, const FamilySpec& spec);

struct CertTerm {
    int k = 0;  // certificate lives at pole order k-1 in the formula above
    ParamRat scalar;
    std::vector<MultiPoly> witness;  // A_0 .. A_n
};

struct Certificate {
    std::vector<CertTerm> terms;
    bool empty() const { return terms.empty(); }
};

// Coordinates of a fully reduced form: one coordinate vector per pole
// order 1..k_max over the complement basis of that graded slice.
struct ReducedClass {
    std::vector<std::vector<ParamRat>> coords;  // coords[k-1], k = 1..k_max

    int k_max() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;
};

struct ReduceStep {
    MultiPoly remainder;  // complement part left at pole order k
    std::vector<ParamRat> remainder_coords;
    PoleForm reduced;  // the order-(k-1) continuation
    CertTerm cert;
};

// One reduction step at pole order k >= 2.
ReduceStep reduce_once(const PoleForm& pf, JacobianData& jd);

struct ReduceResult {
    ReducedClass cls;
    Certificate cert;
};

// Full reduction down to pole order 1; linear over Q(t) in the input.
ReduceResult reduce_full(const PoleForm& pf, JacobianData& jd);

}  // namespace pf
