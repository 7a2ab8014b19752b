#pragma once
/*
 * Local analysis of an operator: singular points, indicial polynomials,
 * and the theta-graded decomposition used by the Frobenius machinery.
 */

#include <vector>

#include "pf/series.hpp"

namespace pf {

struct SingularPointInfo {
    LocalPoint point;
    bool regular_singular = false;
    // Indicial polynomial in the local exponent variable.
    ParamPoly indicial;
    // Rational roots of the indicial polynomial with multiplicities.
    std::vector<std::pair<BigRational, int>> exponents;
    // True when every indicial root is accounted for by `exponents`.
    bool exponents_complete = false;
};

struct SingularPoints {
    std::vector<SingularPointInfo> points;  // finite ones, ascending; then infinity if singular
    // Leading-coefficient factors whose roots could not be split over Q.
    std::vector<ParamPoly> unresolved_factors;
    bool roots_complete = true;
};

// Classifies all singular points of the (normalized) operator, including
// the point at infinity when it is singular.
SingularPoints singular_points(const DiffOperator& op);

// Indicial polynomial at one point (any point; degree equals the operator
// order exactly when the point is regular singular or ordinary).
SingularPointInfo indicial_polynomial(const DiffOperator& op, const LocalPoint& p);

// Is the point ordinary (all coefficient ratios holomorphic there)?
bool is_ordinary_point(const DiffOperator& op, const LocalPoint& p);

// theta-graded pieces of the localized operator: op = sum_d s^(v + d) q_d(theta)
// with q_0 != 0 (q_0 is the indicial polynomial).  `depth` controls how many
// graded pieces are produced.
struct ThetaGraded {
    int valuation = 0;
    std::vector<ParamPoly> pieces;  // pieces[d] = q_d
};
ThetaGraded theta_graded(const DiffOperator& op, const LocalPoint& p, int depth);

}  // namespace pf
