#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bwkit {

/// Finite 0/1 string. Ordering is lexicographic with a proper prefix
/// sorting before its extensions, which is the "leftmost" order used by
/// every search in this library.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<std::uint8_t> bits);

    /// Parses "0110"; the empty string is the empty BitString.
    static BitString parse(std::string_view text);
    static BitString repeat(std::uint8_t bit, std::size_t count);

    /// Breadth-first numbering of strings: code(s) = 2^|s| - 1 + value(s),
    /// so the empty string is 0, "0" is 1, "1" is 2, "00" is 3, ...
    static BitString from_code(std::uint64_t code);
    std::uint64_t code() const;

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    void push_back(std::uint8_t bit);
    BitString appended(std::uint8_t bit) const;
    BitString prefix(std::size_t length) const;
    BitString concat(const BitString& tail) const;
    bool is_prefix_of(const BitString& other) const;

    std::string str() const;

    friend bool operator==(const BitString&, const BitString&) = default;
    friend auto operator<=>(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

}  // namespace bwkit
