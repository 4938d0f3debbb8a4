#pragma once

#include <stdexcept>
#include <string>

namespace rda {

// Base class for all recoverable failures raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct EmptyMesh : Error {
    using Error::Error;
};

struct NonManifold : Error {
    using Error::Error;
};

struct UnsupportedDegree : Error {
    using Error::Error;
};

struct ArityMismatch : Error {
    using Error::Error;
};

// A patch whose collocation points cannot determine a degree-m polynomial.
struct DeficientPatch : Error {
    int element = -1;
    int rank = -1;
    DeficientPatch(int element_, int rank_, const std::string& what_)
        : Error(what_), element(element_), rank(rank_) {}
};

struct NonSPD : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    int iterations = 0;
    NoConvergence(int iterations_, const std::string& what_)
        : Error(what_), iterations(iterations_) {}
};

struct DegenerateH : Error {
    using Error::Error;
};

}  // namespace rda
