#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace aggmdp {

/// Invalid model, parameter, or input file. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
    ValidationError(const std::string& context, const std::vector<std::string>& issues);
};

/// A vector argument does not match the model it is paired with.
class DimensionError : public ValidationError {
public:
    DimensionError(const std::string& what_vector, std::size_t expected, std::size_t actual);

    std::size_t expected;
    std::size_t actual;
};

/// A fixed-point iteration hit its iteration cap. The CLI maps this to exit code 2.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& solver, long iterations, double last_residual);

    long iterations;
    double last_residual;
};

}  // namespace aggmdp
