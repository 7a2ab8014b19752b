#pragma once
/*
 * Error hierarchy shared by the whole library.  The CLI maps each class to
 * a stable process exit code, so new failure modes should reuse one of
 * these categories instead of inventing ad-hoc exceptions.
 */

#include <stdexcept>
#include <string>

namespace pf {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: expression syntax, family files, operator documents.
struct ParseError : Error {
    int line = 0;  // 1-based; 0 when no position applies
    int col = 0;
    ParseError(const std::string& msg, int line_ = 0, int col_ = 0)
        : Error(line_ > 0 ? std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg
                          : msg),
          line(line_), col(col_) {}
};

// A family spec violates an invariant (wrong variable count, inhomogeneous
// polynomial, degenerate generic member, ...).
struct FamilyError : Error {
    using Error::Error;
};

// No Picard-Fuchs relation was found within the requested order bound.
struct NoOperatorError : Error {
    using Error::Error;
};

// A certificate failed to verify, or could not be interpreted.
struct CertificateError : Error {
    using Error::Error;
};

// A numeric consistency check (series annihilation, quadrature, fit) failed.
struct NumericCheckError : Error {
    using Error::Error;
};

// Valid input outside the implemented scope (e.g. deg f != n+1 for the
// operator search).
struct UnsupportedError : Error {
    using Error::Error;
};

}  // namespace pf
