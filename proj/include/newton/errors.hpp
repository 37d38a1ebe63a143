#pragma once

#include <stdexcept>
#include <string>

namespace newton {

struct EmptySupportError : std::runtime_error {
    EmptySupportError() : std::runtime_error("support set is empty") {}
};

struct NotConvenientError : std::runtime_error {
    explicit NotConvenientError(const std::string& what = "polyhedron does not meet every coordinate axis")
        : std::runtime_error(what) {}
};

struct PointInPolyhedronError : std::runtime_error {
    explicit PointInPolyhedronError(const std::string& what = "point already lies in the polyhedron")
        : std::runtime_error(what) {}
};

struct NotLatticeError : std::runtime_error {
    explicit NotLatticeError(const std::string& what = "point has a negative coordinate")
        : std::runtime_error(what) {}
};

// Caller bug: a geometric precondition (boundedness, non-degeneracy) was violated.
struct GeometryError : std::logic_error {
    explicit GeometryError(const std::string& what) : std::logic_error(what) {}
};

// An internal self-check (integrality of nu, predicate/number agreement) failed.
struct PropertyCheckError : std::runtime_error {
    explicit PropertyCheckError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace newton
