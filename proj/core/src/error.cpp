#include "bwkit/error.hpp"

namespace bwkit {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::malformed_syntax: return "malformed-syntax";
        case Errc::schema_violation: return "schema-violation";
        case Errc::invariant_violation: return "invariant-violation";
        case Errc::budget_exceeded: return "budget-exceeded";
        case Errc::budget_exhausted: return "budget-exhausted";
        case Errc::not_a_node: return "not-a-node";
        case Errc::witness_exhausted: return "witness-exhausted";
        case Errc::separator_undefined: return "S-undefined";
        case Errc::non_monotone_selector: return "non-monotone-selector";
        case Errc::empty_tree_at_stage: return "empty-tree-at-stage";
        case Errc::no_infinite_cell: return "no-infinite-cell";
        case Errc::horizon_too_small: return "horizon-too-small";
        case Errc::precondition_failed: return "precondition-failed";
        case Errc::not_ground_truth: return "not-ground-truth";
        case Errc::unsupported_edge: return "unsupported-edge";
    }
    return "unknown";
}

namespace {
std::string compose(Errc code, const std::string& message, const std::string& location) {
    std::string out{to_string(code)};
    out += ": ";
    out += message;
    if (!location.empty()) {
        out += " (at ";
        out += location;
        out += ")";
    }
    return out;
}
}  // namespace

Error::Error(Errc code, std::string message, std::string location)
    : std::runtime_error(compose(code, message, location)),
      code_(code),
      location_(std::move(location)) {}

}  // namespace bwkit
