#include "bwkit_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bwkit/bwkit.hpp"
#include "bwkit_cli/report.hpp"

namespace bwkit::cli {

namespace {

/// Failure outside the library's own error codes (files, flag combinations).
struct Abort {
    int code;
    std::string message;
};

int exit_for(Errc code) {
    switch (code) {
        case Errc::malformed_syntax:
        case Errc::schema_violation:
        case Errc::invariant_violation:
        case Errc::non_monotone_selector:
            return exit_malformed;
        case Errc::budget_exceeded:
        case Errc::budget_exhausted:
        case Errc::horizon_too_small:
        case Errc::empty_tree_at_stage:
        case Errc::no_infinite_cell:
        case Errc::witness_exhausted:
            return exit_budget;
        case Errc::unsupported_edge:
        case Errc::not_ground_truth:
            return exit_unsupported;
        case Errc::not_a_node:
        case Errc::separator_undefined:
        case Errc::precondition_failed:
            return exit_verify_fail;
    }
    return exit_malformed;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Abort{exit_malformed, "cannot read '" + path + "'"};
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) throw Abort{exit_malformed, "cannot write '" + path + "'"};
}

Document load(const std::string& path) { return parse_document(read_file(path)); }

Instance load_instance(const std::string& path) {
    Document d = load(path);
    if (auto* instance = std::get_if<Instance>(&d.body)) return std::move(*instance);
    throw Abort{exit_malformed, "'" + path + "' holds a " + std::string(document_kind(d)) + ", not an instance"};
}

template <class T>
T expect(const Instance& instance, std::string_view role) {
    if (const auto* v = std::get_if<T>(&instance.value)) return *v;
    throw Abort{exit_malformed, std::string(role) + " input is a " + std::string(kind_name(instance))};
}

std::string serialize(const Instance& instance) { return serialize_instance(instance); }
template <class C>
std::string serialize(const C& certificate) {
    return serialize_document(Document{certificate, nlohmann::json::object()});
}

template <class T>
std::string digest(const T& value) {
    return fnv1a_hex(serialize(value));
}

void add_budget_flags(CLI::App* cmd, Budget& budget) {
    cmd->add_option("--horizon", budget.horizon, "sequence indices inspected")->capture_default_str();
    cmd->add_option("--depth", budget.depth, "precision level / tree depth")->capture_default_str();
    cmd->add_option("--stage", budget.stage, "tree enumeration stage")->capture_default_str();
    cmd->add_option("--threshold", budget.threshold, "minimum witnesses per cell")->capture_default_str();
    cmd->add_option("--code-budget", budget.code_budget, "largest sequence code searched")->capture_default_str();
}

// ---- reduce ----------------------------------------------------------------

struct ReduceArgs {
    std::string from, to, input, output, convention = "corrected";
    std::uint64_t code_budget = Budget{}.code_budget;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
    const auto edge = a.from + "->" + a.to;
    const auto supported = {"bw->swkl", "swkl->separation", "separation->bw", "bwweak->stcoh", "stcoh->bwweak"};
    if (std::find(supported.begin(), supported.end(), edge) == supported.end()) {
        throw Error(Errc::unsupported_edge, "no reduction from " + a.from + " to " + a.to);
    }
    const Instance in = load_instance(a.input);
    const auto derive = [&]() -> Instance {
        if (edge == "bw->swkl") return {bw_to_swkl(expect<RationalSequence>(in, "bw"))};
        if (edge == "swkl->separation") return {swkl_to_separation(expect<SigmaTree>(in, "swkl"))};
        if (edge == "separation->bw") {
            return {separation_to_bw(expect<SeparationInstance>(in, "separation"), a.code_budget)};
        }
        if (edge == "bwweak->stcoh") {
            return {bwweak_to_stcoh(expect<RationalSequence>(in, "bwweak"), parse_convention(a.convention))};
        }
        return {stcoh_to_bwweak(expect<SetFamily>(in, "stcoh"))};
    };
    const Instance result = derive();
    emit(a.output, serialize(result), out);
    return exit_pass;
}

// ---- solve -----------------------------------------------------------------

struct SolveArgs {
    std::string problem, input, output;
    Budget budget;
    std::optional<std::uint64_t> levels;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
    const Instance in = load_instance(a.input);
    const auto& b = a.budget;
    std::string text;
    if (a.problem == "accumulation") {
        text = serialize(find_accumulation_real(expect<RationalSequence>(in, "accumulation"), b));
    } else if (a.problem == "branch") {
        text = serialize(find_branch(expect<SigmaTree>(in, "branch"), b));
    } else if (a.problem == "cohesive") {
        text = serialize(build_strongly_cohesive(expect<SetFamily>(in, "cohesive"), a.levels.value_or(b.depth), b));
    } else if (a.problem == "slow-cauchy") {
        text = serialize(extract_slow_cauchy(expect<RationalSequence>(in, "slow-cauchy"), b));
    } else {
        const auto x = expect<RationalSequence>(in, "fast-cauchy");
        text = serialize(thin_to_fast(extract_slow_cauchy(x, b), x, b));
    }
    emit(a.output, text, out);
    return exit_pass;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string input, certificate;
    std::optional<std::uint64_t> range, levels;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const Instance in = load_instance(a.input);
    const Document cert = load(a.certificate);
    const auto mismatch = [&]() -> Abort {
        return {exit_malformed, "certificate kind " + std::string(document_kind(cert)) + " does not apply to a " +
                                    std::string(kind_name(in))};
    };
    std::string result;
    bool passed = false;
    const auto take = [&](const auto& r) {
        result = r.str();
        passed = r.passed();
    };
    if (const auto* c = std::get_if<CauchyCertificate>(&cert.body)) {
        const auto* x = std::get_if<RationalSequence>(&in.value);
        if (!x) throw mismatch();
        take(verify_cauchy(*c, *x));
    } else if (const auto* w = std::get_if<CohesiveWitness>(&cert.body)) {
        const auto* f = std::get_if<SetFamily>(&in.value);
        if (!f) throw mismatch();
        take(verify_cohesive(*w, *f, a.levels));
    } else if (const auto* bp = std::get_if<BranchPrefix>(&cert.body)) {
        const auto* t = std::get_if<SigmaTree>(&in.value);
        if (!t) throw mismatch();
        take(verify_branch(*bp, *t));
    } else if (const auto* s = std::get_if<SeparatorSet>(&cert.body)) {
        const auto* p = std::get_if<SeparationInstance>(&in.value);
        if (!p) throw mismatch();
        take(verify_separator(*s, *p, a.range.value_or(s->defined_below())));
    } else if (const auto* ap = std::get_if<AccumulationPoint>(&cert.body)) {
        const auto* x = std::get_if<RationalSequence>(&in.value);
        if (!x) throw mismatch();
        take(verify_accumulation(*ap, *x));
    } else {
        throw Abort{exit_malformed, "'" + a.certificate + "' holds an instance, not a certificate"};
    }
    if (passed) {
        out << "pass\n";
        return exit_pass;
    }
    err << document_kind(cert) << ": " << result << "\n";
    return exit_verify_fail;
}

// ---- roundtrip -------------------------------------------------------------

template <class R>
Stage checked_stage(std::string step, std::string digest_hex, const R& result) {
    return {std::move(step), std::move(digest_hex), result.str(), true, result.passed()};
}

Stage plain_stage(std::string step, std::string digest_hex) { return {std::move(step), std::move(digest_hex), "-"}; }

void roundtrip_bw_swkl(const RationalSequence& x, RoundTripReport& r) {
    const auto& b = r.budget;
    const SigmaTree tree = bw_to_swkl(x);
    r.stages.push_back(plain_stage("bw_to_swkl", digest(Instance{tree})));
    const auto branch = find_branch(tree, b);
    r.stages.push_back(checked_stage("find_branch", digest(branch), verify_branch(branch, tree)));
    const auto cert = fast_certificate(branch_to_point(x, branch.bits, branch.verified_at_stage));
    r.stages.push_back(checked_stage("branch_to_point", digest(cert), verify_cauchy(cert, x)));
}

void roundtrip_swkl_separation(const SigmaTree& tree, RoundTripReport& r) {
    const auto& b = r.budget;
    const auto problem = swkl_to_separation(tree);
    r.stages.push_back(plain_stage("swkl_to_separation", digest(Instance{problem})));
    const auto s = exact_separator(tree, b.depth);
    if (!s) throw Error(Errc::not_ground_truth, "tree has no decidable ground truth for an exact separator");
    r.stages.push_back(checked_stage("exact_separator", digest(*s), verify_separator(*s, problem, s->defined_below())));
    const auto branch = separator_to_branch(*s, tree, b.depth, b.stage);
    r.stages.push_back(checked_stage("separator_to_branch", digest(branch), verify_branch(branch, tree)));
}

void roundtrip_separation_bw(const SeparationInstance& problem, RoundTripReport& r) {
    auto b = r.budget;
    const auto x = separation_to_bw(problem, b.code_budget);
    r.stages.push_back(plain_stage("separation_to_bw", digest(Instance{x})));
    const CantorSequence& points = *x.cantor_points();
    // Only the stable prefix can reach a threshold above the last change index.
    const auto settled = stabilization_index(points, b.depth, b.horizon);
    b.threshold = std::max(b.threshold, settled + 1);
    if (b.horizon < settled + b.threshold) {
        throw Error(Errc::horizon_too_small, "h_k prefixes change until k = " + std::to_string(settled) +
                                                 "; horizon " + std::to_string(b.horizon) + " leaves too few stable points");
    }
    const auto prefix = find_accumulation_cantor(points, b);
    const auto s = point_to_separator(prefix);
    r.stages.push_back(plain_stage("find_accumulation_cantor", digest(s)));
    r.notes.push_back("h_k prefixes of length " + std::to_string(b.depth) + " are constant from k = " +
                      std::to_string(settled) + "; threshold " + std::to_string(b.threshold));
    r.stages.push_back(checked_stage("point_to_separator", digest(s), verify_separator(s, problem, b.depth)));
    r.notes.push_back("S on [0, " + std::to_string(b.depth) + ") = " + s.bits.str());
}

void boundary_notes(const RationalSequence& x, Convention convention, std::size_t levels, const Budget& b,
                    RoundTripReport& r) {
    if (convention == Convention::corrected) return;
    std::string whole_rows;
    for (std::size_t i = 0; i < levels; ++i) {
        bool whole = true;
        std::optional<std::uint64_t> boundary;
        for (std::uint64_t j = 0; j < b.horizon; ++j) {
            const auto q = x.term(j);
            const bool literal = cell_parity_member(q, i, Convention::paper_literal);
            whole = whole && literal;
            if (!boundary && literal != cell_parity_member(q, i, Convention::corrected)) boundary = j;
        }
        if (whole) whole_rows += (whole_rows.empty() ? "" : ", ") + std::to_string(i);
        if (boundary) {
            r.notes.push_back("R_" + std::to_string(i) + " at j = " + std::to_string(*boundary) + " (x_j = " +
                              x.term(*boundary).str() + ") differs from the corrected row first here, on a closed cell boundary");
        }
    }
    if (!whole_rows.empty()) r.notes.push_back("R_i = N below the horizon for i in {" + whole_rows + "}");
}

void roundtrip_bwweak_stcoh(const RationalSequence& x, Convention convention, RoundTripReport& r) {
    const auto& b = r.budget;
    const std::size_t levels = b.depth + 2;
    const auto family = bwweak_to_stcoh(x, convention);
    r.stages.push_back(plain_stage("bwweak_to_stcoh", digest(Instance{family})));
    const auto witness = build_strongly_cohesive(family, levels, b);
    r.stages.push_back(
        checked_stage("build_strongly_cohesive", digest(witness), verify_cohesive(witness, family, levels)));
    CauchyCertificate cert;
    cert.selector = subsequence_from_cohesive(witness.selector, x);
    cert.budget = b;
    // n = 0 only asks for distance < 1 and is left out.
    for (std::uint64_t n = 1; n <= b.depth; ++n) cert.moduli.push_back({n, 0});
    r.stages.push_back(checked_stage("subsequence_from_cohesive", digest(cert), verify_cauchy(cert, x)));
    r.notes.push_back("convention: " + std::string(to_string(convention)));
    boundary_notes(x, convention, levels, b, r);
}

void roundtrip_stcoh_bwweak(const SetFamily& family, RoundTripReport& r) {
    const auto levels = r.budget.depth;
    const auto x = stcoh_to_bwweak(family);
    r.stages.push_back(plain_stage("stcoh_to_bwweak", digest(Instance{x})));
    auto inner = r.budget;
    inner.depth = modulus_for_levels(levels);
    const auto cert = extract_slow_cauchy(x, inner);
    r.stages.push_back(checked_stage("extract_slow_cauchy", digest(cert), verify_cauchy(cert, x)));
    const auto witness = cohesive_from_cauchy(cert, family, levels);
    r.stages.push_back(
        checked_stage("cohesive_from_cauchy", digest(witness), verify_cohesive(witness, family, levels)));
    r.notes.push_back("levels " + std::to_string(levels) + " use modulus n = " + std::to_string(inner.depth));
}

struct RoundTripArgs {
    std::string pair, input, report, convention = "corrected";
    Budget budget;
};

int cmd_roundtrip(const RoundTripArgs& a, std::ostream& out) {
    const Instance in = load_instance(a.input);
    RoundTripReport r{a.pair, a.budget, {}, {}};
    if (a.pair == "bw-swkl") {
        roundtrip_bw_swkl(expect<RationalSequence>(in, a.pair), r);
    } else if (a.pair == "swkl-separation") {
        roundtrip_swkl_separation(expect<SigmaTree>(in, a.pair), r);
    } else if (a.pair == "separation-bw") {
        roundtrip_separation_bw(expect<SeparationInstance>(in, a.pair), r);
    } else if (a.pair == "bwweak-stcoh") {
        roundtrip_bwweak_stcoh(expect<RationalSequence>(in, a.pair), parse_convention(a.convention), r);
    } else {
        roundtrip_stcoh_bwweak(expect<SetFamily>(in, a.pair), r);
    }
    out << r.table();
    if (!a.report.empty()) emit(a.report, r.to_json().dump(2) + "\n", out);
    return r.passed() ? exit_pass : exit_verify_fail;
}

// ---- embed -----------------------------------------------------------------

struct EmbedArgs {
    std::string direction;
    std::vector<std::string> points;
    std::uint64_t budget = 4096;
};

int cmd_embed(const EmbedArgs& a, std::ostream& out) {
    std::vector<CantorPoint> pts;
    for (const auto& text : a.points) pts.push_back(CantorPoint::parse(text));
    if (a.direction == "to-real") {
        if (pts.size() != 1) throw Abort{exit_malformed, "to-real takes one point"};
        out << embed_exact(pts[0])->str() << "\n";
        return exit_pass;
    }
    if (pts.size() != 2) throw Abort{exit_malformed, "dist takes two points"};
    out << "cantor " << cantor_dist(pts[0], pts[1], a.budget).str() << "\n";
    out << "real " << distance(*embed_exact(pts[0]), *embed_exact(pts[1])).str() << "\n";
    return exit_pass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reductions, solvers and certificate checks for BW, WKL, separation and cohesiveness instances",
                 "bwkit"};
    app.require_subcommand(1);
    std::function<int()> action;

    ReduceArgs reduce;
    auto* r = app.add_subcommand("reduce", "apply one reduction to an instance file");
    r->add_option("--from", reduce.from, "bw | bwweak | swkl | separation | stcoh")->required();
    r->add_option("--to", reduce.to, "bw | bwweak | swkl | separation | stcoh")->required();
    r->add_option("-i,--input", reduce.input)->required();
    r->add_option("-o,--output", reduce.output, "defaults to standard output");
    r->add_option("--convention", reduce.convention, "corrected | paper-literal")->capture_default_str();
    r->add_option("--code-budget", reduce.code_budget)->capture_default_str();
    r->callback([&] { action = [&] { return cmd_reduce(reduce, out); }; });

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "run a budgeted solver and write its certificate");
    s->add_option("--problem", solve.problem)
        ->required()
        ->check(CLI::IsMember({"accumulation", "branch", "cohesive", "slow-cauchy", "fast-cauchy"}));
    s->add_option("-i,--input", solve.input)->required();
    s->add_option("-o,--output", solve.output, "defaults to standard output");
    s->add_option("--levels", solve.levels, "rows for --problem cohesive (default: depth)");
    add_budget_flags(s, solve.budget);
    s->callback([&] { action = [&] { return cmd_solve(solve, out); }; });

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "check a certificate against an instance");
    v->add_option("-i,--input", verify.input)->required();
    v->add_option("--certificate", verify.certificate)->required();
    v->add_option("--range", verify.range, "separator range (default: the certificate's domain)");
    v->add_option("--levels", verify.levels, "require settle entries for every row below this");
    v->callback([&] { action = [&] { return cmd_verify(verify, out, err); }; });

    RoundTripArgs trip;
    auto* t = app.add_subcommand("roundtrip", "reduce, solve, translate back and verify");
    t->add_option("--pair", trip.pair)
        ->required()
        ->check(CLI::IsMember({"bw-swkl", "swkl-separation", "separation-bw", "bwweak-stcoh", "stcoh-bwweak"}));
    t->add_option("-i,--input", trip.input)->required();
    t->add_option("--report", trip.report, "write the JSON report here");
    t->add_option("--convention", trip.convention, "corrected | paper-literal")->capture_default_str();
    add_budget_flags(t, trip.budget);
    t->callback([&] { action = [&] { return cmd_roundtrip(trip, out); }; });

    EmbedArgs embed;
    auto* e = app.add_subcommand("embed", "exact Cantor-set values and distances of periodic points");
    e->add_option("--direction", embed.direction)->required()->check(CLI::IsMember({"to-real", "dist"}));
    e->add_option("points", embed.points, "points as 'prefix,(period)'")->required();
    e->add_option("--budget", embed.budget, "bits compared before giving up")->capture_default_str();
    e->callback([&] { action = [&] { return cmd_embed(embed, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? exit_pass : exit_malformed;
    }

    try {
        return action();
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return exit_for(ex.code());
    } catch (const Abort& ex) {
        err << "error: " << ex.message << "\n";
        return ex.code;
    }
}

}  // namespace bwkit::cli
