#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bwkit/cantor.hpp"
#include "bwkit/provenance.hpp"
#include "bwkit/sequence.hpp"

namespace bwkit {

/// Interval convention for the family built from a sequence.
enum class Convention {
    /// R_i = { j : floor((x_j / 2) * 2^i) is even } (half-open cells of the
    /// sequence scaled into [0, 1/2]).
    corrected,
    /// R_i = { j : x_j lies in some closed cell [k/2^i, (k+1)/2^i], k even }.
    paper_literal,
};

std::string_view to_string(Convention c) noexcept;
/// "corrected" or "paper-literal"; throws Error(schema_violation).
Convention parse_convention(std::string_view text);

/// A uniformly decidable sequence of sets R_0, R_1, ... of naturals.
class SetFamily {
public:
    /// Row n < rows.size() is rows[n] read as a bit pattern over j; all
    /// later rows are default_row. Every row must be eventually periodic.
    struct PeriodicRows {
        std::vector<CantorPoint> rows;
        CantorPoint default_row;
    };
    /// (n, j) -> membership with a fallback for everything unlisted.
    struct TableRows {
        std::map<std::pair<std::uint64_t, std::uint64_t>, bool> entries;
        bool fallback = false;
    };
    struct FromSequence {
        RationalSequence source;
        Convention convention = Convention::corrected;
    };
    using Repr = std::variant<PeriodicRows, TableRows, FromSequence>;

    explicit SetFamily(Repr repr, std::shared_ptr<const Provenance> provenance = nullptr);

    static SetFamily periodic_rows(std::vector<CantorPoint> rows, CantorPoint default_row);

    /// j in R_n
    bool member(std::uint64_t n, std::uint64_t j) const;

    /// Joint eventual periodicity in j of the rows n < rows.
    std::optional<PeriodicShape> joint_shape(std::uint64_t rows) const;

    /// The Cantor point n -> [i in R_n].
    CantorPoint column(std::uint64_t i) const;
    /// Eventual periodicity of i -> column(i), if known.
    std::optional<PeriodicShape> column_shape() const;

    const Repr& repr() const noexcept { return *repr_; }
    const Provenance* provenance() const noexcept { return provenance_.get(); }

private:
    std::shared_ptr<const Repr> repr_;
    std::shared_ptr<const Provenance> provenance_;
};

bool family_member(const SetFamily& family, std::uint64_t n, std::uint64_t j);

/// Row membership of a single value under either convention.
bool cell_parity_member(const Rational& value, std::uint64_t level, Convention convention);

}  // namespace bwkit
