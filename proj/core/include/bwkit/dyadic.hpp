#pragma once

#include <cstdint>

#include "bwkit/bitstring.hpp"
#include "bwkit/rational.hpp"

namespace bwkit {

/// The cell [k/2^i, (k+1)/2^i] at level i.
class DyadicInterval {
public:
    static constexpr unsigned max_level = 62;

    DyadicInterval(unsigned level, std::uint64_t index);

    /// The cell addressed by a path of halvings from [0,1]: level |path|,
    /// index = path read as a binary number.
    static DyadicInterval from_path(const BitString& path);

    unsigned level() const noexcept { return level_; }
    std::uint64_t index() const noexcept { return index_; }

    Rational left() const;
    Rational right() const;
    Rational width() const;

    /// Closed membership k/2^i <= q <= (k+1)/2^i.
    bool contains(const Rational& q) const;
    /// Half-open membership k/2^i <= q < (k+1)/2^i.
    bool contains_halfopen(const Rational& q) const;

    DyadicInterval child(std::uint8_t bit) const;

    friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;

private:
    unsigned level_;
    std::uint64_t index_;
};

DyadicInterval dyadic_interval(unsigned level, std::uint64_t index);

}  // namespace bwkit
