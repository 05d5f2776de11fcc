#include "bwkit_cli/report.hpp"

#include <algorithm>
#include <cstdio>

#include "bwkit/document.hpp"

namespace bwkit::cli {

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

bool RoundTripReport::passed() const {
    return std::all_of(stages.begin(), stages.end(), [](const Stage& s) { return !s.checked || s.passed; });
}

nlohmann::json RoundTripReport::to_json() const {
    nlohmann::json stage_list = nlohmann::json::array();
    for (const auto& s : stages) {
        stage_list.push_back({{"step", s.step}, {"digest", s.digest}, {"result", s.result}});
    }
    return {{"pair", pair},
            {"budget", budget_to_json(budget)},
            {"stages", stage_list},
            {"notes", notes},
            {"verdict", passed() ? "pass" : "fail"}};
}

std::string RoundTripReport::table() const {
    std::size_t step_width = 4;
    for (const auto& s : stages) step_width = std::max(step_width, s.step.size());
    const auto pad = [](std::string text, std::size_t width) {
        text.resize(std::max(width, text.size()), ' ');
        return text;
    };
    std::string out = "pair: " + pair + "\n";
    out += pad("step", step_width) + "  " + pad("digest", 16) + "  result\n";
    out += std::string(step_width, '-') + "  " + std::string(16, '-') + "  " + std::string(6, '-') + "\n";
    for (const auto& s : stages) out += pad(s.step, step_width) + "  " + pad(s.digest, 16) + "  " + s.result + "\n";
    for (const auto& note : notes) out += "note: " + note + "\n";
    out += std::string("verdict: ") + (passed() ? "pass" : "fail") + "\n";
    return out;
}

}  // namespace bwkit::cli
