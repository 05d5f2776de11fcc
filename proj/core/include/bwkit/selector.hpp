#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bwkit {

/// Strictly increasing finite index map f(0) < f(1) < ... (a subsequence
/// selector, or the increasing enumeration of a finite part of a set).
class Selector {
public:
    Selector() = default;
    /// Throws Error(non_monotone_selector) unless strictly increasing.
    explicit Selector(std::vector<std::uint64_t> values);

    static Selector identity(std::size_t length);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    std::uint64_t operator[](std::size_t v) const { return values_[v]; }
    const std::vector<std::uint64_t>& values() const noexcept { return values_; }

    friend bool operator==(const Selector&, const Selector&) = default;

private:
    std::vector<std::uint64_t> values_;
};

}  // namespace bwkit
