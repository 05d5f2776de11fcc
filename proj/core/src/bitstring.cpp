#include "bwkit/bitstring.hpp"

#include <algorithm>

#include "bwkit/error.hpp"

namespace bwkit {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) throw Error(Errc::invariant_violation, "bit value other than 0/1");
    }
}

BitString BitString::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1') {
            throw Error(Errc::schema_violation, "bit string contains '" + std::string(1, c) + "'",
                        "offset " + std::to_string(i));
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitString(std::move(bits));
}

BitString BitString::repeat(std::uint8_t bit, std::size_t count) {
    return BitString(std::vector<std::uint8_t>(count, bit));
}

BitString BitString::from_code(std::uint64_t code) {
    // code + 1 written in binary is "1" followed by the string.
    const std::uint64_t shifted = code + 1;
    int top = 63;
    while (top > 0 && !((shifted >> top) & 1U)) --top;
    std::vector<std::uint8_t> bits;
    for (int i = top - 1; i >= 0; --i) bits.push_back(static_cast<std::uint8_t>((shifted >> i) & 1U));
    return BitString(std::move(bits));
}

std::uint64_t BitString::code() const {
    if (bits_.size() >= 63) throw Error(Errc::invariant_violation, "bit string too long to code");
    std::uint64_t shifted = 1;
    for (auto b : bits_) shifted = (shifted << 1) | b;
    return shifted - 1;
}

void BitString::push_back(std::uint8_t bit) {
    if (bit > 1) throw Error(Errc::invariant_violation, "bit value other than 0/1");
    bits_.push_back(bit);
}

BitString BitString::appended(std::uint8_t bit) const {
    BitString out = *this;
    out.push_back(bit);
    return out;
}

BitString BitString::prefix(std::size_t length) const {
    length = std::min(length, bits_.size());
    return BitString(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(length)));
}

BitString BitString::concat(const BitString& tail) const {
    BitString out = *this;
    out.bits_.insert(out.bits_.end(), tail.bits_.begin(), tail.bits_.end());
    return out;
}

bool BitString::is_prefix_of(const BitString& other) const {
    return bits_.size() <= other.bits_.size() &&
           std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

std::string BitString::str() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
    return out;
}

}  // namespace bwkit
