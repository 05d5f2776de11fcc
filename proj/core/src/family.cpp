#include "bwkit/family.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bwkit/error.hpp"

namespace bwkit {

std::string_view to_string(Convention c) noexcept {
    return c == Convention::corrected ? "corrected" : "paper-literal";
}

Convention parse_convention(std::string_view text) {
    if (text == "corrected") return Convention::corrected;
    if (text == "paper-literal") return Convention::paper_literal;
    throw Error(Errc::schema_violation, "unknown convention '" + std::string(text) + "'");
}

bool cell_parity_member(const Rational& value, std::uint64_t level, Convention convention) {
    BigInt scaled = value.numerator();
    BigInt den = value.denominator();
    if (convention == Convention::corrected) {
        scaled <<= level;
        den *= 2;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
        return mpz_even_p(q.get_mpz_t()) != 0;
    }
    // Closed cells: an exact multiple of 2^-level sits on the boundary of an
    // even and an odd cell, so it is always a member.
    scaled <<= level;
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    return r == 0 || mpz_even_p(q.get_mpz_t()) != 0;
}

namespace {

const CantorPoint& row_of(const SetFamily::PeriodicRows& p, std::uint64_t n) {
    return n < p.rows.size() ? p.rows[n] : p.default_row;
}

void widen(PeriodicShape& shape, const CantorPoint& p) {
    shape.prefix_length = std::max<std::uint64_t>(shape.prefix_length, p.prefix().size());
    shape.period_length = std::lcm<std::uint64_t>(shape.period_length, p.period().size());
}

}  // namespace

SetFamily::SetFamily(Repr repr, std::shared_ptr<const Provenance> provenance) : provenance_(std::move(provenance)) {
    if (const auto* p = std::get_if<PeriodicRows>(&repr)) {
        for (std::size_t n = 0; n < p->rows.size(); ++n) {
            if (!p->rows[n].is_periodic()) {
                throw Error(Errc::invariant_violation, "row is not eventually periodic", "/repr/rows/" + std::to_string(n));
            }
        }
        if (!p->default_row.is_periodic()) {
            throw Error(Errc::invariant_violation, "default row is not eventually periodic", "/repr/default");
        }
    }
    repr_ = std::make_shared<const Repr>(std::move(repr));
}

SetFamily SetFamily::periodic_rows(std::vector<CantorPoint> rows, CantorPoint default_row) {
    return SetFamily(PeriodicRows{std::move(rows), std::move(default_row)});
}

bool SetFamily::member(std::uint64_t n, std::uint64_t j) const {
    struct Visit {
        std::uint64_t n, j;
        bool operator()(const PeriodicRows& p) const { return row_of(p, n).bit(j) != 0; }
        bool operator()(const TableRows& t) const {
            auto it = t.entries.find({n, j});
            return it == t.entries.end() ? t.fallback : it->second;
        }
        bool operator()(const FromSequence& f) const { return cell_parity_member(f.source.term(j), n, f.convention); }
    };
    return std::visit(Visit{n, j}, *repr_);
}

std::optional<PeriodicShape> SetFamily::joint_shape(std::uint64_t rows) const {
    struct Visit {
        std::uint64_t rows;
        std::optional<PeriodicShape> operator()(const PeriodicRows& p) const {
            PeriodicShape shape{0, 1};
            for (std::uint64_t n = 0; n < rows && n < p.rows.size(); ++n) widen(shape, p.rows[n]);
            if (rows > p.rows.size()) widen(shape, p.default_row);
            return shape;
        }
        std::optional<PeriodicShape> operator()(const TableRows& t) const {
            PeriodicShape shape{0, 1};
            for (const auto& [key, value] : t.entries) {
                if (key.first < rows) shape.prefix_length = std::max(shape.prefix_length, key.second + 1);
            }
            return shape;
        }
        std::optional<PeriodicShape> operator()(const FromSequence& f) const { return f.source.periodic_shape(); }
    };
    return std::visit(Visit{rows}, *repr_);
}

CantorPoint SetFamily::column(std::uint64_t i) const {
    if (const auto* p = std::get_if<PeriodicRows>(repr_.get())) {
        std::vector<std::uint8_t> head;
        for (const auto& row : p->rows) head.push_back(row.bit(i));
        return CantorPoint::periodic(BitString(std::move(head)), BitString::repeat(p->default_row.bit(i), 1));
    }
    if (const auto* t = std::get_if<TableRows>(repr_.get())) {
        std::uint64_t rows = 0;
        for (const auto& [key, value] : t->entries) rows = std::max(rows, key.first + 1);
        std::vector<std::uint8_t> head;
        for (std::uint64_t n = 0; n < rows; ++n) head.push_back(member(n, i) ? 1 : 0);
        return CantorPoint::periodic(BitString(std::move(head)), BitString::repeat(t->fallback ? 1 : 0, 1));
    }
    return CantorPoint::from_rule([family = *this, i](std::uint64_t n) -> std::uint8_t { return family.member(n, i) ? 1 : 0; });
}

std::optional<PeriodicShape> SetFamily::column_shape() const {
    struct Visit {
        std::optional<PeriodicShape> operator()(const PeriodicRows& p) const {
            PeriodicShape shape{0, 1};
            for (const auto& row : p.rows) widen(shape, row);
            widen(shape, p.default_row);
            return shape;
        }
        std::optional<PeriodicShape> operator()(const TableRows& t) const {
            PeriodicShape shape{0, 1};
            for (const auto& [key, value] : t.entries) shape.prefix_length = std::max(shape.prefix_length, key.second + 1);
            return shape;
        }
        std::optional<PeriodicShape> operator()(const FromSequence& f) const { return f.source.periodic_shape(); }
    };
    return std::visit(Visit{}, *repr_);
}

bool family_member(const SetFamily& family, std::uint64_t n, std::uint64_t j) { return family.member(n, j); }

}  // namespace bwkit
