#pragma once

#include <stdexcept>
#include <string>

namespace regzeta {

/// Recoverable arithmetic/domain signals. The degree pipeline treats
/// InexactDivision as an internal-consistency failure (the theorems
/// guarantee integrality on their stated domain), so callers surface it
/// with diagnostics instead of silently rounding.
struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct InexactDivision : std::domain_error {
    explicit InexactDivision(const std::string& what) : std::domain_error(what) {}
};

struct BoundExceeded : std::domain_error {
    explicit BoundExceeded(const std::string& what) : std::domain_error(what) {}
};

struct NotPrime : std::domain_error {
    explicit NotPrime(const std::string& what) : std::domain_error(what) {}
};

struct PartsMismatch : std::domain_error {
    explicit PartsMismatch(const std::string& what) : std::domain_error(what) {}
};

/// Numeric zeta evaluation requested at or below the abscissa of convergence.
struct Diverges : std::domain_error {
    explicit Diverges(const std::string& what) : std::domain_error(what) {}
};

/// Dirichlet coefficient slice requested for a series with unbounded
/// multiplicities (n = 1).
struct Unbounded : std::domain_error {
    explicit Unbounded(const std::string& what) : std::domain_error(what) {}
};

}  // namespace regzeta
