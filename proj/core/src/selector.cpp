#include "bwkit/selector.hpp"

#include <numeric>
#include <string>

#include "bwkit/error.hpp"

namespace bwkit {

Selector::Selector(std::vector<std::uint64_t> values) : values_(std::move(values)) {
    for (std::size_t v = 1; v < values_.size(); ++v) {
        if (values_[v] <= values_[v - 1]) {
            throw Error(Errc::non_monotone_selector,
                        "selector not strictly increasing at position " + std::to_string(v));
        }
    }
}

Selector Selector::identity(std::size_t length) {
    std::vector<std::uint64_t> values(length);
    std::iota(values.begin(), values.end(), std::uint64_t{0});
    return Selector(std::move(values));
}

}  // namespace bwkit
