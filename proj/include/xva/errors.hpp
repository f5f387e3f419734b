#pragma once

#include <stdexcept>
#include <string>

namespace xva {

// Argument values outside an operation's domain (bad rates, |rho| >= 1, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally inconsistent inputs, e.g. mismatched path counts between an
// exposure matrix and a default-scenario set.
struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

// Scenario file problems. Messages name the offending field.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failures: quadrature non-convergence, infeasible spread solves.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace xva
