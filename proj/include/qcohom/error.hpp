#pragma once

#include <stdexcept>
#include <string>

namespace qcohom {

// Mismatched variable lists, malformed inputs, broken invariants.
struct StructuralError : std::invalid_argument {
    explicit StructuralError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Out-of-range configuration (qubit count, sample caps, ...).
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& msg) : std::invalid_argument(msg) {}
};

// xi lies on a wall of the moment polytope.
struct NotRegularError : std::domain_error {
    explicit NotRegularError(const std::string& msg) : std::domain_error(msg) {}
};

// Polarization vector orthogonal to some isotropy weight.
struct NonGenericError : std::domain_error {
    explicit NonGenericError(const std::string& msg) : std::domain_error(msg) {}
};

// A residue stage received no weights or a zero truncated weight.
struct DegenerateStageError : std::domain_error {
    explicit DegenerateStageError(const std::string& msg) : std::domain_error(msg) {}
};

// Class degree does not match the quotient dimension.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Input to the symmetric decomposition is not symmetric.
struct NotSymmetricError : std::invalid_argument {
    explicit NotSymmetricError(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace qcohom
