#ifndef INFORATIO_ERRORS_HPP
#define INFORATIO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace inforatio {

/// Bad argument values (out-of-range dimension, malformed permutation, ...).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input graph is not of the family an operation expects.
class StructureError : public std::runtime_error {
public:
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

/// Instance exceeds a hard size cutoff.
class SizeError : public std::runtime_error {
public:
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal LP failure (infeasible/unbounded model means a generator bug).
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// An inequality instance whose side conditions fail in the host graph.
class InvalidInstanceError : public std::runtime_error {
public:
    explicit InvalidInstanceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace inforatio

#endif
