#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "bwkit/certificates.hpp"
#include "bwkit/instance.hpp"

namespace bwkit {

/// One file in the shared envelope {"kind", "repr", "meta"}: an instance or
/// a certificate.
struct Document {
    std::variant<Instance, CauchyCertificate, CohesiveWitness, BranchPrefix, SeparatorSet, AccumulationPoint> body;
    nlohmann::json meta = nlohmann::json::object();
};

/// Throws Error(malformed_syntax | schema_violation | invariant_violation)
/// with a byte offset or JSON pointer location.
Document parse_document(std::string_view text);
Document document_from_json(const nlohmann::json& envelope);
/// Canonical form: sorted keys, "p/q" rationals, two-space indent, trailing
/// newline. Throws unsupported_edge for library-only callback instances.
std::string serialize_document(const Document& document);
nlohmann::json document_to_json(const Document& document);

/// parse_document restricted to the four instance kinds.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

/// "rational_sequence", ..., "cauchy_certificate", ..., "accumulation_point".
std::string_view document_kind(const Document& document) noexcept;

nlohmann::json budget_to_json(const Budget& budget);
Budget budget_from_json(const nlohmann::json& j);

}  // namespace bwkit
