#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricode {

enum class ErrorKind {
    InvalidInput,
    NoPreimage,
    Singular,
    NotPrimitive,
    NotSimplicial,
    NotComplete,
    TorsionClassGroup,
    BadGrading,
    InconclusiveMembership,
    ZeroCoordinate,
    NotLatticePolytope,
    RequiresSemiample,
    NotRankOneGrading,
    BudgetExceeded,
    EmptySection,
    ZeroCode,
    DimensionMismatch,
    NotPrime,
};

std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace toricode
