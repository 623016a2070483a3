#include "toricode/error.hpp"

namespace toricode {

std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NoPreimage: return "NoPreimage";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::TorsionClassGroup: return "TorsionClassGroup";
    case ErrorKind::BadGrading: return "BadGrading";
    case ErrorKind::InconclusiveMembership: return "InconclusiveMembership";
    case ErrorKind::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorKind::NotLatticePolytope: return "NotLatticePolytope";
    case ErrorKind::RequiresSemiample: return "RequiresSemiample";
    case ErrorKind::NotRankOneGrading: return "NotRankOneGrading";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::EmptySection: return "EmptySection";
    case ErrorKind::ZeroCode: return "ZeroCode";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotPrime: return "NotPrime";
    }
    return "Unknown";
}

} // namespace toricode
