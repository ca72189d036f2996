#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pmatch {

enum class errc {
    degenerate_input,
    not_on_hull,
    not_found,
    odd_size,
    size_limit,
    invalid_matching,
    precondition_violated,
    internal_inconsistency,
    parse_error,
    not_general_position,
    duplicate_point,
    coordinate_out_of_range,
    generation_exhausted,
    invalid_argument,
};

constexpr std::string_view to_string(errc code) noexcept {
    switch (code) {
        case errc::degenerate_input: return "DegenerateInput";
        case errc::not_on_hull: return "NotOnHull";
        case errc::not_found: return "NotFound";
        case errc::odd_size: return "OddSize";
        case errc::size_limit: return "SizeLimit";
        case errc::invalid_matching: return "InvalidMatching";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::internal_inconsistency: return "InternalInconsistency";
        case errc::parse_error: return "ParseError";
        case errc::not_general_position: return "NotGeneralPosition";
        case errc::duplicate_point: return "DuplicatePoint";
        case errc::coordinate_out_of_range: return "CoordinateOutOfRange";
        case errc::generation_exhausted: return "GenerationExhausted";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace pmatch
