#include "bwkit/document.hpp"

#include <string>

#include "bwkit/error.hpp"
#include "bwkit/reductions.hpp"

namespace bwkit {

using nlohmann::json;

namespace {

// ---- reading ---------------------------------------------------------------

/// A JSON value together with its pointer, so every error can say where.
class Node {
public:
    Node(const json& value, std::string path) : value_(value), path_(std::move(path)) {}

    const json& raw() const { return value_; }
    const std::string& path() const { return path_; }

    [[noreturn]] void fail(const std::string& message) const { throw Error(Errc::schema_violation, message, where()); }

    Node at(const std::string& key) const {
        require_object();
        const auto it = value_.find(key);
        if (it == value_.end()) fail("missing field '" + key + "'");
        return {*it, path_ + "/" + key};
    }
    std::optional<Node> find(const std::string& key) const {
        require_object();
        const auto it = value_.find(key);
        if (it == value_.end()) return std::nullopt;
        return Node{*it, path_ + "/" + key};
    }
    std::vector<Node> items() const {
        if (!value_.is_array()) fail("expected an array");
        std::vector<Node> out;
        for (std::size_t i = 0; i < value_.size(); ++i) out.emplace_back(value_[i], path_ + "/" + std::to_string(i));
        return out;
    }

    std::string str() const {
        if (!value_.is_string()) fail("expected a string");
        return value_.get<std::string>();
    }
    std::uint64_t u64() const {
        if (value_.is_number_unsigned()) return value_.get<std::uint64_t>();
        if (value_.is_number_integer() && value_.get<std::int64_t>() >= 0) return value_.get<std::uint64_t>();
        fail("expected a non-negative integer");
    }
    bool boolean() const {
        if (!value_.is_boolean()) fail("expected true or false");
        return value_.get<bool>();
    }
    Rational rational() const {
        return relocate([&] { return Rational::parse(str()); });
    }
    BitString bits() const {
        return relocate([&] { return BitString::parse(str()); });
    }
    CantorPoint point() const {
        return relocate([&] { return CantorPoint::parse(str()); });
    }

    void require_object() const {
        if (!value_.is_object()) fail("expected an object");
    }

    /// Runs f; errors it raises without a location are pinned here.
    template <class F>
    auto relocate(F&& f) const -> decltype(f()) {
        try {
            return f();
        } catch (const Error& e) {
            if (!e.location().empty()) throw;
            throw Error(e.code(), strip(e), where());
        }
    }

private:
    std::string where() const { return path_.empty() ? "/" : path_; }
    static std::string strip(const Error& e) {
        const std::string what = e.what();
        const auto colon = what.find(": ");
        return colon == std::string::npos ? what : what.substr(colon + 2);
    }

    const json& value_;
    std::string path_;
};

std::string error_message(const Error& e) {
    const std::string what = e.what();
    auto begin = what.find(": ");
    begin = begin == std::string::npos ? 0 : begin + 2;
    auto end = what.rfind(" (at ");
    if (end == std::string::npos || end < begin || e.location().empty()) end = what.size();
    return what.substr(begin, end - begin);
}

/// Constructors report locations relative to their own envelope ("/repr/...");
/// nested envelopes shift them under `base`.
template <class F>
auto rebased(const std::string& base, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.code() != Errc::invariant_violation && e.code() != Errc::schema_violation) throw;
        if (!e.location().empty() && e.location().starts_with(base)) throw;
        throw Error(e.code(), error_message(e), base + (e.location().empty() ? "/repr" : e.location()));
    }
}

Instance instance_from_node(const Node& envelope);

Instance nested_source(const Node& repr) {
    const Node source = repr.at("source");
    return instance_from_node(source);
}

template <class T>
const T& expect_kind(const Instance& instance, const Node& where, std::string_view wanted) {
    if (const auto* v = std::get_if<T>(&instance.value)) return *v;
    where.fail("source must be a " + std::string(wanted) + ", got " + std::string(kind_name(instance)));
}

std::vector<Rational> rationals(const Node& n) {
    std::vector<Rational> out;
    for (const auto& item : n.items()) out.push_back(item.rational());
    return out;
}

std::vector<CantorPoint> points(const Node& n) {
    std::vector<CantorPoint> out;
    for (const auto& item : n.items()) out.push_back(item.point());
    return out;
}

RationalSequence sequence_from_repr(const Node& repr, const std::string& base) {
    const std::string form = repr.at("form").str();
    return rebased(base, [&]() -> RationalSequence {
        using S = RationalSequence;
        if (form == "periodic") return S(S::Periodic{rationals(repr.at("prefix")), rationals(repr.at("period"))});
        if (form == "constant") return S(S::Constant{repr.at("value").rational()});
        if (form == "harmonic") return S(S::Harmonic{});
        if (form == "alternating") return S(S::Alternating{repr.at("a").rational(), repr.at("b").rational()});
        if (form == "binary_walk") return S(S::BinaryWalk{repr.at("target").rational()});
        if (form == "table") {
            S::Table table{{}, repr.at("default").rational()};
            for (const auto& e : repr.at("entries").items()) {
                const auto index = e.at("index").u64();
                if (!table.entries.emplace(index, e.at("value").rational()).second) e.fail("duplicate index");
            }
            return S(std::move(table));
        }
        if (form == "embedded") {
            auto listed = CantorSequence::listed(points(repr.at("prefix")), points(repr.at("period")));
            std::uint32_t precision = 64;
            if (const auto p = repr.find("precision")) precision = static_cast<std::uint32_t>(p->u64());
            return S(S::Embedded{std::move(listed), precision});
        }
        if (form == "derived") {
            const auto by = repr.at("derived_by").str();
            const Instance source = nested_source(repr);
            if (by == "separation_to_bw") {
                const auto& p = expect_kind<SeparationInstance>(source, repr.at("source"), "separation");
                std::uint32_t precision = 64;
                if (const auto q = repr.find("precision")) precision = static_cast<std::uint32_t>(q->u64());
                return separation_to_bw(p, repr.at("code_budget").u64(), precision);
            }
            if (by == "stcoh_to_bwweak") {
                return stcoh_to_bwweak(expect_kind<SetFamily>(source, repr.at("source"), "set_family"));
            }
            repr.at("derived_by").fail("unknown derivation '" + by + "' for a rational_sequence");
        }
        repr.at("form").fail("unknown rational_sequence form '" + form + "'");
    });
}

SigmaTree tree_from_repr(const Node& repr, const std::string& base) {
    const std::string form = repr.at("form").str();
    return rebased(base, [&]() -> SigmaTree {
        if (form == "full_binary") return SigmaTree::full_binary();
        if (form == "single_branch") return SigmaTree::single_branch(repr.at("branch").point());
        if (form == "branch_union") return SigmaTree::branch_union(points(repr.at("branches")));
        if (form == "stage_list") {
            std::vector<SigmaTree::StageEntry> entries;
            for (const auto& e : repr.at("stages").items()) entries.push_back({e.at("stage").u64(), e.at("node").bits()});
            return SigmaTree::stage_list(std::move(entries));
        }
        if (form == "derived") {
            const auto by = repr.at("derived_by").str();
            if (by != "bw_to_swkl") repr.at("derived_by").fail("unknown derivation '" + by + "' for a sigma_tree");
            const Instance source = nested_source(repr);
            return bw_to_swkl(expect_kind<RationalSequence>(source, repr.at("source"), "rational_sequence"));
        }
        repr.at("form").fail("unknown sigma_tree form '" + form + "'");
    });
}

Predicate predicate_from_node(const Node& n) {
    const std::string rule = n.at("rule").str();
    if (rule == "const") return Predicate::constant(n.at("value").boolean());
    if (rule == "y_eq_affine") return Predicate::affine(n.at("a").u64(), n.at("c").u64());
    if (rule == "y_ge_x") return Predicate::at_least_x();
    if (rule == "x_below") return Predicate::x_below(n.at("limit").u64(), predicate_from_node(n.at("inner")));
    if (rule == "n_lt") {
        return Predicate::n_below(n.at("bound").u64(), predicate_from_node(n.at("then")),
                                  predicate_from_node(n.at("else")));
    }
    if (rule == "n_mod") {
        std::vector<Predicate> cases;
        for (const auto& c : n.at("cases").items()) cases.push_back(predicate_from_node(c));
        if (cases.empty()) n.at("cases").fail("n_mod needs at least one case");
        return Predicate::n_mod(std::move(cases));
    }
    if (rule == "table") {
        std::map<std::array<std::uint64_t, 3>, bool> table;
        for (const auto& e : n.at("entries").items()) {
            const std::array<std::uint64_t, 3> key{e.at("x").u64(), e.at("y").u64(), e.at("n").u64()};
            if (!table.emplace(key, e.at("value").boolean()).second) e.fail("duplicate (x, y, n) entry");
        }
        return Predicate::with_table(std::move(table), predicate_from_node(n.at("base")));
    }
    if (rule == "minimal") return Predicate(Predicate::Minimal{predicate_from_node(n.at("inner"))});
    n.at("rule").fail("unknown predicate rule '" + rule + "'");
}

SeparationInstance separation_from_repr(const Node& repr, const std::string& base) {
    const std::string form = repr.at("form").str();
    return rebased(base, [&]() -> SeparationInstance {
        if (form == "normal_form") {
            bool disjoint = true;
            if (const auto d = repr.find("disjoint")) disjoint = d->boolean();
            return SeparationInstance(predicate_from_node(repr.at("b0")), predicate_from_node(repr.at("b1")), disjoint);
        }
        if (form == "derived") {
            const auto by = repr.at("derived_by").str();
            if (by != "swkl_to_separation") {
                repr.at("derived_by").fail("unknown derivation '" + by + "' for a separation");
            }
            const Instance source = nested_source(repr);
            return swkl_to_separation(expect_kind<SigmaTree>(source, repr.at("source"), "sigma_tree"));
        }
        repr.at("form").fail("unknown separation form '" + form + "'");
    });
}

SetFamily family_from_repr(const Node& repr, const std::string& base) {
    const std::string form = repr.at("form").str();
    return rebased(base, [&]() -> SetFamily {
        if (form == "periodic_rows") return SetFamily::periodic_rows(points(repr.at("rows")), repr.at("default").point());
        if (form == "table") {
            SetFamily::TableRows table{{}, repr.at("default").boolean()};
            for (const auto& e : repr.at("entries").items()) {
                const std::pair key{e.at("n").u64(), e.at("j").u64()};
                if (!table.entries.emplace(key, e.at("value").boolean()).second) e.fail("duplicate (n, j) entry");
            }
            return SetFamily(std::move(table));
        }
        if (form == "derived") {
            const auto by = repr.at("derived_by").str();
            if (by != "bwweak_to_stcoh") repr.at("derived_by").fail("unknown derivation '" + by + "' for a set_family");
            const Instance source = nested_source(repr);
            Convention convention = Convention::corrected;
            if (const auto c = repr.find("convention")) {
                convention = c->relocate([&] { return parse_convention(c->str()); });
            }
            return bwweak_to_stcoh(expect_kind<RationalSequence>(source, repr.at("source"), "rational_sequence"),
                                   convention);
        }
        repr.at("form").fail("unknown set_family form '" + form + "'");
    });
}

void check_envelope_keys(const Node& envelope) {
    envelope.require_object();
    for (const auto& [key, value] : envelope.raw().items()) {
        if (key != "kind" && key != "repr" && key != "meta") envelope.fail("unexpected field '" + key + "'");
    }
}

Instance instance_from_node(const Node& envelope) {
    check_envelope_keys(envelope);
    const Node kind = envelope.at("kind");
    const std::string k = kind.str();
    const Node repr = envelope.at("repr");
    repr.require_object();
    const std::string& base = envelope.path();
    if (k == "rational_sequence") return {sequence_from_repr(repr, base)};
    if (k == "sigma_tree") return {tree_from_repr(repr, base)};
    if (k == "separation") return {separation_from_repr(repr, base)};
    if (k == "set_family") return {family_from_repr(repr, base)};
    kind.fail("expected an instance kind, got '" + k + "'");
}

std::vector<std::uint64_t> naturals(const Node& n) {
    std::vector<std::uint64_t> out;
    for (const auto& item : n.items()) out.push_back(item.u64());
    return out;
}

Selector selector_from(const Node& n) {
    return n.relocate([&] { return Selector(naturals(n)); });
}

std::optional<Budget> optional_budget(const Node& repr) {
    if (const auto b = repr.find("budget")) return budget_from_json(b->raw());
    return std::nullopt;
}

// ---- writing ---------------------------------------------------------------

json rationals_json(const std::vector<Rational>& values) {
    json out = json::array();
    for (const auto& q : values) out.push_back(q.str());
    return out;
}

json points_json(const std::vector<CantorPoint>& pts) {
    json out = json::array();
    for (const auto& p : pts) {
        if (!p.is_periodic()) throw Error(Errc::unsupported_edge, "rule-backed Cantor point has no file form");
        out.push_back(p.str());
    }
    return out;
}

json envelope(std::string_view kind, json repr) {
    return json{{"kind", kind}, {"repr", std::move(repr)}, {"meta", json::object()}};
}

json instance_json(const Instance& instance);

json source_json(const Provenance& provenance) {
    if (!provenance.source) throw Error(Errc::unsupported_edge, "derived instance without a recorded source");
    return instance_json(*provenance.source);
}

json sequence_repr(const RationalSequence& x) {
    if (const auto* p = x.provenance(); p && !p->derived_by.empty()) {
        json repr{{"form", "derived"}, {"derived_by", p->derived_by}, {"source", source_json(*p)}};
        if (p->code_budget) repr["code_budget"] = *p->code_budget;
        if (const auto* e = std::get_if<RationalSequence::Embedded>(&x.repr()); e && p->derived_by == "separation_to_bw") {
            repr["precision"] = e->precision;
        }
        return repr;
    }
    return std::visit(
        [](const auto& r) -> json {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, RationalSequence::Periodic>) {
                return {{"form", "periodic"}, {"prefix", rationals_json(r.prefix)}, {"period", rationals_json(r.period)}};
            } else if constexpr (std::is_same_v<T, RationalSequence::Constant>) {
                return {{"form", "constant"}, {"value", r.value.str()}};
            } else if constexpr (std::is_same_v<T, RationalSequence::Harmonic>) {
                return {{"form", "harmonic"}};
            } else if constexpr (std::is_same_v<T, RationalSequence::Alternating>) {
                return {{"form", "alternating"}, {"a", r.a.str()}, {"b", r.b.str()}};
            } else if constexpr (std::is_same_v<T, RationalSequence::BinaryWalk>) {
                return {{"form", "binary_walk"}, {"target", r.target.str()}};
            } else if constexpr (std::is_same_v<T, RationalSequence::Table>) {
                json entries = json::array();
                for (const auto& [i, q] : r.entries) entries.push_back({{"index", i}, {"value", q.str()}});
                return {{"form", "table"}, {"entries", entries}, {"default", r.fallback.str()}};
            } else {
                if (!r.points.is_listed()) {
                    throw Error(Errc::unsupported_edge, "rule-backed embedded sequence has no file form");
                }
                return {{"form", "embedded"},
                        {"prefix", points_json(r.points.listed_prefix())},
                        {"period", points_json(r.points.listed_period())},
                        {"precision", r.precision}};
            }
        },
        x.repr());
}

json tree_repr(const SigmaTree& t) {
    return std::visit(
        [](const auto& r) -> json {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, SigmaTree::FullBinary>) {
                return {{"form", "full_binary"}};
            } else if constexpr (std::is_same_v<T, SigmaTree::Branches>) {
                if (r.branches.size() == 1) return {{"form", "single_branch"}, {"branch", points_json(r.branches)[0]}};
                return {{"form", "branch_union"}, {"branches", points_json(r.branches)}};
            } else if constexpr (std::is_same_v<T, SigmaTree::StageList>) {
                json stages = json::array();
                for (const auto& e : r.entries) stages.push_back({{"stage", e.stage}, {"node", e.node.str()}});
                return {{"form", "stage_list"}, {"stages", stages}};
            } else {
                return {{"form", "derived"},
                        {"derived_by", "bw_to_swkl"},
                        {"source", instance_json(Instance{r.source})}};
            }
        },
        t.repr());
}

json predicate_json(const Predicate& p) {
    return std::visit(
        [](const auto& r) -> json {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Predicate::Const>) {
                return {{"rule", "const"}, {"value", r.value}};
            } else if constexpr (std::is_same_v<T, Predicate::Affine>) {
                return {{"rule", "y_eq_affine"}, {"a", r.a}, {"c", r.c}};
            } else if constexpr (std::is_same_v<T, Predicate::AtLeastX>) {
                return {{"rule", "y_ge_x"}};
            } else if constexpr (std::is_same_v<T, Predicate::XBelow>) {
                return {{"rule", "x_below"}, {"limit", r.limit}, {"inner", predicate_json(r.inner)}};
            } else if constexpr (std::is_same_v<T, Predicate::NBelow>) {
                return {{"rule", "n_lt"},
                        {"bound", r.bound},
                        {"then", predicate_json(r.then)},
                        {"else", predicate_json(r.otherwise)}};
            } else if constexpr (std::is_same_v<T, Predicate::NMod>) {
                json cases = json::array();
                for (const auto& c : r.cases) cases.push_back(predicate_json(c));
                return {{"rule", "n_mod"}, {"cases", cases}};
            } else if constexpr (std::is_same_v<T, Predicate::WithTable>) {
                json entries = json::array();
                for (const auto& [key, value] : r.table) {
                    entries.push_back({{"x", key[0]}, {"y", key[1]}, {"n", key[2]}, {"value", value}});
                }
                return {{"rule", "table"}, {"entries", entries}, {"base", predicate_json(r.base)}};
            } else if constexpr (std::is_same_v<T, Predicate::Minimal>) {
                return {{"rule", "minimal"}, {"inner", predicate_json(r.inner)}};
            } else {
                throw Error(Errc::unsupported_edge, "predicate has no file form");
            }
        },
        p.node());
}

json separation_repr(const SeparationInstance& p) {
    if (const auto* side = std::get_if<Predicate::TreeSide>(&p.b(0).node())) {
        return {{"form", "derived"}, {"derived_by", "swkl_to_separation"}, {"source", instance_json(Instance{side->tree})}};
    }
    return {{"form", "normal_form"},
            {"b0", predicate_json(p.b(0))},
            {"b1", predicate_json(p.b(1))},
            {"disjoint", p.disjointness_promise()}};
}

json family_repr(const SetFamily& f) {
    return std::visit(
        [](const auto& r) -> json {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, SetFamily::PeriodicRows>) {
                return {{"form", "periodic_rows"}, {"rows", points_json(r.rows)}, {"default", r.default_row.str()}};
            } else if constexpr (std::is_same_v<T, SetFamily::TableRows>) {
                json entries = json::array();
                for (const auto& [key, value] : r.entries) {
                    entries.push_back({{"n", key.first}, {"j", key.second}, {"value", value}});
                }
                return {{"form", "table"}, {"entries", entries}, {"default", r.fallback}};
            } else {
                return {{"form", "derived"},
                        {"derived_by", "bwweak_to_stcoh"},
                        {"convention", std::string(to_string(r.convention))},
                        {"source", instance_json(Instance{r.source})}};
            }
        },
        f.repr());
}

json instance_json(const Instance& instance) {
    return std::visit(
        [&](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, RationalSequence>) {
                return envelope(kind_name(instance), sequence_repr(v));
            } else if constexpr (std::is_same_v<T, SigmaTree>) {
                return envelope(kind_name(instance), tree_repr(v));
            } else if constexpr (std::is_same_v<T, SeparationInstance>) {
                return envelope(kind_name(instance), separation_repr(v));
            } else {
                return envelope(kind_name(instance), family_repr(v));
            }
        },
        instance.value);
}

void put_budget(json& repr, const std::optional<Budget>& budget) {
    if (budget) repr["budget"] = budget_to_json(*budget);
}

json side_json(Side side) { return side == Side::in ? "in" : "out"; }

}  // namespace

json budget_to_json(const Budget& b) {
    return {{"horizon", b.horizon},
            {"depth", b.depth},
            {"stage", b.stage},
            {"code_budget", b.code_budget},
            {"threshold", b.threshold}};
}

Budget budget_from_json(const json& j) {
    const Node n(j, "/repr/budget");
    return {n.at("horizon").u64(), n.at("depth").u64(), n.at("stage").u64(), n.at("code_budget").u64(),
            n.at("threshold").u64()};
}

std::string_view document_kind(const Document& document) noexcept {
    switch (document.body.index()) {
        case 0: return kind_name(std::get<Instance>(document.body));
        case 1: return "cauchy_certificate";
        case 2: return "cohesive_witness";
        case 3: return "branch_prefix";
        case 4: return "separator_set";
        default: return "accumulation_point";
    }
}

Document document_from_json(const json& j) {
    const Node top(j, "");
    check_envelope_keys(top);
    json meta = json::object();
    if (const auto m = top.find("meta")) {
        m->require_object();
        meta = m->raw();
    }
    const std::string kind = top.at("kind").str();
    const Node repr = top.at("repr");
    repr.require_object();

    if (kind == "cauchy_certificate") {
        CauchyCertificate c;
        c.selector = selector_from(repr.at("selector"));
        for (const auto& m : repr.at("moduli").items()) c.moduli.push_back({m.at("n").u64(), m.at("s").u64()});
        const auto rate = repr.at("rate");
        const auto r = rate.str();
        if (r != "slow" && r != "fast") rate.fail("rate must be 'slow' or 'fast'");
        c.rate = r == "fast" ? Rate::fast : Rate::slow;
        c.budget = optional_budget(repr);
        return {c, meta};
    }
    if (kind == "cohesive_witness") {
        CohesiveWitness w;
        w.selector = selector_from(repr.at("selector"));
        for (const auto& e : repr.at("settle").items()) {
            const auto side = e.at("side");
            const auto s = side.str();
            if (s != "in" && s != "out") side.fail("side must be 'in' or 'out'");
            w.settle.push_back({e.at("i").u64(), e.at("s").u64(), s == "in" ? Side::in : Side::out});
        }
        w.budget = optional_budget(repr);
        return {w, meta};
    }
    if (kind == "branch_prefix") {
        return {BranchPrefix{repr.at("bits").bits(), repr.at("verified_at_stage").u64(), optional_budget(repr)}, meta};
    }
    if (kind == "separator_set") return {SeparatorSet{repr.at("bits").bits()}, meta};
    if (kind == "accumulation_point") {
        AccumulationPoint a;
        for (const auto& c : repr.at("chain").items()) {
            const auto level = c.at("level").u64();
            const auto index = c.at("index").u64();
            if (level > DyadicInterval::max_level || (level < 64 && index >= (std::uint64_t{1} << level))) {
                c.fail("no dyadic cell with level " + std::to_string(level) + " and index " + std::to_string(index));
            }
            a.chain.emplace_back(static_cast<unsigned>(level), index);
        }
        a.approx = repr.at("approx").rational();
        a.exact = repr.at("exact").boolean();
        a.budget = optional_budget(repr);
        return {a, meta};
    }
    return {instance_from_node(top), meta};
}

Document parse_document(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::malformed_syntax, e.what(), "byte " + std::to_string(e.byte));
    }
    return document_from_json(j);
}

json document_to_json(const Document& document) {
    json out = std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Instance>) {
                return instance_json(v);
            } else if constexpr (std::is_same_v<T, CauchyCertificate>) {
                json moduli = json::array();
                for (const auto& m : v.moduli) moduli.push_back({{"n", m.n}, {"s", m.s}});
                json repr{{"selector", v.selector.values()},
                          {"moduli", moduli},
                          {"rate", v.rate == Rate::fast ? "fast" : "slow"}};
                put_budget(repr, v.budget);
                return envelope("cauchy_certificate", repr);
            } else if constexpr (std::is_same_v<T, CohesiveWitness>) {
                json settle = json::array();
                for (const auto& e : v.settle) settle.push_back({{"i", e.i}, {"s", e.s}, {"side", side_json(e.side)}});
                json repr{{"selector", v.selector.values()}, {"settle", settle}};
                put_budget(repr, v.budget);
                return envelope("cohesive_witness", repr);
            } else if constexpr (std::is_same_v<T, BranchPrefix>) {
                json repr{{"bits", v.bits.str()}, {"verified_at_stage", v.verified_at_stage}};
                put_budget(repr, v.budget);
                return envelope("branch_prefix", repr);
            } else if constexpr (std::is_same_v<T, SeparatorSet>) {
                return envelope("separator_set", json{{"bits", v.bits.str()}});
            } else {
                json chain = json::array();
                for (const auto& c : v.chain) chain.push_back({{"level", c.level()}, {"index", c.index()}});
                json repr{{"chain", chain}, {"approx", v.approx.str()}, {"exact", v.exact}};
                put_budget(repr, v.budget);
                return envelope("accumulation_point", repr);
            }
        },
        document.body);
    out["meta"] = document.meta.is_null() ? json::object() : document.meta;
    return out;
}

std::string serialize_document(const Document& document) { return document_to_json(document).dump(2) + "\n"; }

Instance parse_instance(std::string_view text) {
    Document d = parse_document(text);
    if (auto* instance = std::get_if<Instance>(&d.body)) return std::move(*instance);
    throw Error(Errc::schema_violation, "expected an instance, got '" + std::string(document_kind(d)) + "'", "/kind");
}

std::string serialize_instance(const Instance& instance) { return serialize_document(Document{instance, {}}); }

}  // namespace bwkit
