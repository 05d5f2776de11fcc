#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace bwkit {

struct Instance;

/// Where a derived instance came from; enough to replay the reduction.
struct Provenance {
    std::string derived_by;
    std::shared_ptr<const Instance> source;
    std::optional<std::string> convention;
    std::optional<std::uint64_t> code_budget;
};

}  // namespace bwkit
