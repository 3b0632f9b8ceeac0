#ifndef GOMETRICS_ERRORS_HPP
#define GOMETRICS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gometrics {

/// A structure failed validation while being built (Jacobi, invariance, ...).
class ConstructionError : public std::runtime_error {
public:
    explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested instance lies outside the range where a routine's premises hold.
class ExcludedCaseError : public std::domain_error {
public:
    explicit ExcludedCaseError(const std::string& what) : std::domain_error(what) {}
};

} // namespace gometrics

#endif // GOMETRICS_ERRORS_HPP
