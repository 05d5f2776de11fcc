#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bwkit/certificates.hpp"

namespace bwkit::cli {

struct Stage {
    std::string step;
    std::string digest;  ///< 16 hex digits, FNV-1a of the step's serialized output
    std::string result;  ///< verifier result, "-" for steps without one
    bool checked = false;
    bool passed = true;
};

struct RoundTripReport {
    std::string pair;
    Budget budget;
    std::vector<Stage> stages;
    std::vector<std::string> notes;

    /// Pass iff every checked stage passed.
    bool passed() const;
    nlohmann::json to_json() const;
    /// Fixed-width plain-text table.
    std::string table() const;
};

std::string fnv1a_hex(std::string_view bytes);

}  // namespace bwkit::cli
