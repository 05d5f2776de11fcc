#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bwkit/rational.hpp"

namespace bwkit {

/// Prime-power sequence code: <v_0,...,v_{L-1}> is coded as
/// prod_{x<L} p_x^(v_x + 1) with p_x the (x+1)-th prime, and the empty
/// sequence as 1. Codes are monotone in every component and strictly
/// increase under extension.
class SeqCode {
public:
    SeqCode() : value_(1) {}
    explicit SeqCode(BigInt value) : value_(std::move(value)) {}

    const BigInt& value() const noexcept { return value_; }

    friend bool operator==(const SeqCode&, const SeqCode&) = default;
    friend auto operator<=>(const SeqCode& a, const SeqCode& b) { return cmp(a.value_, b.value_) <=> 0; }

private:
    BigInt value_;
};

/// The (index+1)-th prime: nth_prime(0) == 2.
std::uint64_t nth_prime(std::size_t index);

SeqCode seq_code(std::span<const std::uint64_t> values);
/// nullopt for 0 and for integers whose prime support is not p_0..p_{L-1}.
std::optional<std::vector<std::uint64_t>> seq_decode(const BigInt& code);
std::optional<std::vector<std::uint64_t>> seq_decode(std::uint64_t code);

/// Length of a valid code without materializing the entries.
std::optional<std::size_t> seq_length(std::uint64_t code);

}  // namespace bwkit
