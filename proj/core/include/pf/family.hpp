#pragma once
/*
 * One-parameter families of projective hypersurfaces, read from line-based
 * "key: value" description files.  The defining polynomial is homogeneous
 * in the ambient coordinates with coefficients that are rational functions
 * of the deformation parameter.
 */

#include <string>
#include <vector>

#include "pf/multipoly.hpp"

namespace pf {

struct FamilySpec {
    std::string name;
    int n = 0;  // ambient projective dimension; n + 1 coordinates
    std::vector<std::string> variables;
    std::string parameter = "t";
    MultiPoly f;
    // Declared parameter-independent (and checked to be so).
    bool constant_family = false;
    // Optional reference-series hint used by the CLI, e.g.
    // "gauss 1/2 1/2 1" or "diagonal"; empty when absent.
    std::string oracle;

    int degree() const { return f.degree(); }
    int nvars() const { return n + 1; }
};

// Parses the description text.  Keys: name, ambient_dim, variables,
// parameter, polynomial, constant, oracle.  Throws ParseError (with
// line/column for polynomial syntax) or FamilyError.
FamilySpec parse_family(const std::string& text);

// Reads and parses a family file; FamilyError if unreadable.
FamilySpec load_family_file(const std::string& path);

// Structural validation beyond parsing: at least three coordinates,
// degree = coordinate count (the holomorphic-form bookkeeping this engine
// implements), genuine parameter dependence unless flagged constant.
void validate_family(const FamilySpec& spec);

}  // namespace pf
