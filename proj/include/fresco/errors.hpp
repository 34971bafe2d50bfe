#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fresco {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// qexact
struct SingularMatrixError : Error {
    SingularMatrixError() : Error("matrix is singular") {}
    explicit SingularMatrixError(const std::string& what) : Error(what) {}
};

// abops
struct NotMonicError : Error {
    NotMonicError() : Error("operator is not monic in a") {}
};
struct ZeroFactorError : Error {
    ZeroFactorError() : Error("linear factor u*a + v*b with u = v = 0") {}
};

// fresco_core
struct C1ViolationError : Error {
    explicit C1ViolationError(const std::string& what) : Error(what) {}
};
struct C2ViolationError : Error {
    explicit C2ViolationError(const std::string& what) : Error(what) {}
};
struct UnreachableTargetError : Error {
    explicit UnreachableTargetError(const std::string& what) : Error(what) {}
};

// abmodule
struct NotSimplePoleError : Error {
    NotSimplePoleError() : Error("presentation does not have a simple pole (a.E is not contained in b.E)") {}
};

// polyparse: every parse failure carries a byte offset into the source text.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};
struct SyntaxError : ParseError {
    using ParseError::ParseError;
};
struct ArityError : ParseError {
    using ParseError::ParseError;
};
struct DuplicateMonomialError : ParseError {
    using ParseError::ParseError;
};
struct ZeroCoefficientError : ParseError {
    using ParseError::ParseError;
};

}  // namespace fresco
