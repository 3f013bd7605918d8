#include "aggmdp/errors.hpp"

#include <sstream>

namespace aggmdp {

namespace {

std::string join_issues(const std::string& context, const std::vector<std::string>& issues) {
    std::ostringstream out;
    out << context << ":";
    for (const auto& issue : issues) {
        out << "\n  - " << issue;
    }
    return out.str();
}

}  // namespace

ValidationError::ValidationError(const std::string& context, const std::vector<std::string>& issues)
    : std::runtime_error(join_issues(context, issues)) {}

DimensionError::DimensionError(const std::string& what_vector, std::size_t expected_in,
                               std::size_t actual_in)
    : ValidationError(what_vector + " has length " + std::to_string(actual_in) + ", expected " +
                      std::to_string(expected_in)),
      expected(expected_in),
      actual(actual_in) {}

ConvergenceError::ConvergenceError(const std::string& solver, long iterations_in,
                                   double last_residual_in)
    : std::runtime_error(solver + " did not converge within " + std::to_string(iterations_in) +
                         " iterations (last residual " + std::to_string(last_residual_in) + ")"),
      iterations(iterations_in),
      last_residual(last_residual_in) {}

}  // namespace aggmdp
