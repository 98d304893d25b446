#include "hankelkit/error.hpp"

namespace hk {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::zero_constant_divisor: return "ZeroConstantDivisor";
    case Errc::non_unit_constant: return "NonUnitConstant";
    case Errc::nonzero_inner_constant: return "NonzeroInnerConstant";
    case Errc::not_revertible: return "NotRevertible";
    case Errc::index_out_of_triangle: return "IndexOutOfTriangle";
    case Errc::unsupported_parameter: return "UnsupportedParameter";
    case Errc::non_integer_result: return "NonIntegerResult";
    case Errc::insufficient_order: return "InsufficientOrder";
    case Errc::insufficient_terms: return "InsufficientTerms";
    case Errc::singular_leading_minor: return "SingularLeadingMinor";
    case Errc::singular_diagonal: return "SingularDiagonal";
    case Errc::singular_system: return "SingularSystem";
    case Errc::integrality_violation: return "IntegralityViolation";
    case Errc::invalid_riordan_array: return "InvalidRiordanArray";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::identity_violation: return "IdentityViolation";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what, std::optional<std::size_t> index)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), message_(what), index_(index)
{
}

bool Error::is_singularity() const noexcept
{
    return code_ == Errc::singular_leading_minor || code_ == Errc::singular_system
        || code_ == Errc::singular_diagonal;
}

} // namespace hk
