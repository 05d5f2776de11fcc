#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bwkit {

/// Named failure modes shared by parsing, reductions and solvers.
enum class Errc {
    malformed_syntax,
    schema_violation,
    invariant_violation,
    budget_exceeded,
    budget_exhausted,
    not_a_node,
    witness_exhausted,
    separator_undefined,
    non_monotone_selector,
    empty_tree_at_stage,
    no_infinite_cell,
    horizon_too_small,
    precondition_failed,
    not_ground_truth,
    unsupported_edge,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message, std::string location = {});

    Errc code() const noexcept { return code_; }
    /// JSON pointer or byte offset for parse errors, empty otherwise.
    const std::string& location() const noexcept { return location_; }

private:
    Errc code_;
    std::string location_;
};

}  // namespace bwkit
