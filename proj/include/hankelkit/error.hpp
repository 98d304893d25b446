#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hk {

enum class Errc {
    zero_constant_divisor,
    non_unit_constant,
    nonzero_inner_constant,
    not_revertible,
    index_out_of_triangle,
    unsupported_parameter,
    non_integer_result,
    insufficient_order,
    insufficient_terms,
    singular_leading_minor,
    singular_diagonal,
    singular_system,
    integrality_violation,
    invalid_riordan_array,
    dimension_mismatch,
    identity_violation,
};

std::string_view errc_name(Errc code) noexcept;

/// Error raised by every exact-arithmetic operation in the library.
///
/// `index()` carries the failing step for the singularity errors
/// (leading minor, linear system order, triangle row).
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, std::optional<std::size_t> index = std::nullopt);

    Errc code() const noexcept { return code_; }
    std::optional<std::size_t> index() const noexcept { return index_; }
    /// The message without the error-name prefix.
    const std::string& message() const noexcept { return message_; }

    /// True for the singular-matrix family of errors.
    bool is_singularity() const noexcept;

private:
    Errc code_;
    std::string message_;
    std::optional<std::size_t> index_;
};

} // namespace hk
