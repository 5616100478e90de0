#include "numerosity/axioms.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "numerosity/dsl.hpp"
#include "numerosity/error.hpp"

namespace numerosity {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Undecided: return "undecided";
    }
    return "undecided";
}

std::string Witness::to_string() const {
    std::vector<std::string> parts;
    if (support) parts.push_back("F=" + support->to_string());
    if (stage) parts.push_back("k=" + std::to_string(*stage));
    if (collision) parts.push_back("collision " + collision->to_string());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) out += "; ";
        out += parts[i];
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
public:
    double millis() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    }

private:
    Clock::time_point start_ = Clock::now();
};

AxiomReport make_report(std::string axiom, std::vector<std::string> operands,
                        const CheckContext& ctx) {
    AxiomReport report;
    report.axiom = std::move(axiom);
    report.operands = std::move(operands);
    report.horizon = ctx.horizon;
    return report;
}

Numerosity numerosity_of(const PointSetExpr& x, const CheckContext& ctx) {
    std::vector<BigInt> seq;
    seq.reserve(ctx.horizon + 1);
    for (std::size_t k = 0; k <= ctx.horizon; ++k) seq.emplace_back(ctx.counter(x, ctx.chain.stage(k)));
    return Numerosity::from_sequence(std::move(seq), ctx.chain);
}

ComparisonResult compare_sets(const PointSetExpr& x, const PointSetExpr& y, const CheckContext& ctx) {
    return compare(numerosity_of(x, ctx), numerosity_of(y, ctx), *ctx.oracle);
}

// Every F ⊆ {0..min(horizon, exhaustive_limit)} ∪ extra.
std::vector<FiniteSupport> exhaustive_supports(const CheckContext& ctx,
                                               std::vector<Natural> extra = {}) {
    const Natural top = static_cast<Natural>(std::min(ctx.horizon, ctx.exhaustive_limit));
    auto base = FiniteSupport::interval(0, top).elements();
    base.insert(base.end(), extra.begin(), extra.end());
    return subsets_of(FiniteSupport(std::move(base)));
}

std::vector<FiniteSupport> chain_stages(const CheckContext& ctx) {
    std::vector<FiniteSupport> out;
    for (std::size_t k = 0; k <= ctx.horizon; ++k) out.push_back(ctx.chain.stage(k));
    return out;
}

std::string oscillation_note(const PointSetExpr& x, const PointSetExpr& y, const CheckContext& ctx) {
    const auto nx = numerosity_of(x, ctx);
    const auto ny = numerosity_of(y, ctx);
    std::set<int> signs;
    const std::size_t last = ctx.horizon;
    const std::size_t from = last >= kDefaultWindow ? last - kDefaultWindow : 0;
    for (std::size_t k = from; k <= last; ++k) {
        const BigInt d = nx.sequence()[k] - ny.sequence()[k];
        signs.insert(d < 0 ? -1 : (d > 0 ? 1 : 0));
    }
    return "difference of " + x.to_string() + " and " + y.to_string() + " oscillates (" +
           std::to_string(signs.size()) + " sign classes in the final window)";
}

// The first stage where the pointwise implication "premise counts equal ⇒
// conclusion counts equal" breaks.
std::optional<std::size_t> implication_violation(
    const std::vector<std::pair<PointSetExpr, PointSetExpr>>& premises,
    const std::pair<PointSetExpr, PointSetExpr>& conclusion, const CheckContext& ctx) {
    for (std::size_t k = 0; k <= ctx.horizon; ++k) {
        const auto stage = ctx.chain.stage(k);
        bool premises_equal = true;
        for (const auto& [p, q] : premises) {
            premises_equal = premises_equal && ctx.counter(p, stage) == ctx.counter(q, stage);
        }
        if (premises_equal &&
            ctx.counter(conclusion.first, stage) != ctx.counter(conclusion.second, stage)) {
            return k;
        }
    }
    return std::nullopt;
}

// Shared tail of SP, DP and PP: premises decided Equal must give a decided
// Equal conclusion.
void judge_implication(AxiomReport& report,
                       const std::vector<std::pair<PointSetExpr, PointSetExpr>>& premises,
                       const std::pair<PointSetExpr, PointSetExpr>& conclusion,
                       const CheckContext& ctx) {
    bool all_equal = true;
    for (const auto& [p, q] : premises) {
        const auto c = compare_sets(p, q, ctx);
        if (c.outcome == Comparison::Undecided) {
            report.verdict = Verdict::Undecided;
            report.note = oscillation_note(p, q, ctx);
            return;
        }
        all_equal = all_equal && c.outcome == Comparison::Equal;
    }
    if (!all_equal) {
        report.note = "premises not all equal; implication holds vacuously";
        return;
    }
    const auto c = compare_sets(conclusion.first, conclusion.second, ctx);
    if (c.outcome == Comparison::Equal) {
        report.note = "premises and conclusion EQUAL";
        return;
    }
    report.verdict = Verdict::Fail;
    report.witness.stage = implication_violation(premises, conclusion, ctx).value_or(ctx.horizon);
    report.witness.support = ctx.chain.stage(*report.witness.stage);
    report.note = "conclusion " + c.to_string() + " although premises are EQUAL";
}

void require_disjoint(const PointSetExpr& a, const PointSetExpr& b, const CheckContext& ctx) {
    const auto top = ctx.chain.stage(ctx.horizon);
    const auto common = restrict(a, top) & restrict(b, top);
    if (!common.empty()) {
        throw PreconditionError(a.to_string() + " and " + b.to_string() + " share " +
                                common.tuples().front().to_string() + " on F=" + top.to_string());
    }
}

void require_subset(const PointSetExpr& sub, const PointSetExpr& super, const CheckContext& ctx) {
    const auto top = ctx.chain.stage(ctx.horizon);
    const auto extra = restrict(sub, top) - restrict(super, top);
    if (!extra.empty()) {
        throw PreconditionError(sub.to_string() + " is not a subset of " + super.to_string() + ": " +
                                extra.tuples().front().to_string() + " on F=" + top.to_string());
    }
}

void require_multipliable(const PointSetExpr& a, const PointSetExpr& b, const CheckContext& ctx) {
    const auto verdict = is_multipliable(a, b);
    if (verdict.status == Multipliability::Status::False) throw NotMultipliableError(*verdict.witness);
    if (verdict.status == Multipliability::Status::Unknown) {
        if (auto w = find_collision(a, b, ctx.chain.stage(ctx.horizon))) {
            throw NotMultipliableError(std::move(*w));
        }
    }
}

PointSetExpr singleton(Natural n) { return PointSetExpr::finite({Tuple{n}}); }

}  // namespace

// ---------------------------------------------------------------------------
// Single-point predicates

bool ap_holds_at(const PointSetExpr& x, const PointSetExpr& y, const FiniteSupport& f,
                 const Counter& counter) {
    const auto lhs = BigInt(counter(x, f)) - BigInt(counter(y, f));
    const auto rhs = BigInt(counter(set_difference(x, y), f)) - BigInt(counter(set_difference(y, x), f));
    return lhs == rhs;
}

bool up_holds_at(const PointSetExpr& a, Natural n, const FiniteSupport& f, const Counter& counter) {
    const auto extended = restrict(product(a, singleton(n)), f).size();
    return extended == (f.contains(n) ? counter(a, f) : 0);
}

bool tp_holds_at(const PointSetExpr& x, const PermutationSpec& spec, const FiniteSupport& f,
                 const Counter& counter) {
    const auto original = restrict(x, f);
    const auto image = restrict(permute_transform(x, spec), f);
    std::vector<Tuple> mapped;
    mapped.reserve(original.size());
    for (const auto& t : original) {
        auto moved = spec.apply(t);
        // Position permutations keep the set of components.
        if (!(monomial_of_tuple(moved).support() == monomial_of_tuple(t).support())) return false;
        mapped.push_back(std::move(moved));
    }
    return FinitePointSet(std::move(mapped)) == image && image.size() == counter(x, f);
}

bool additive_at(const PointSetExpr& a, const PointSetExpr& b, const FiniteSupport& f,
                 const Counter& counter) {
    return counter(set_union(a, b), f) == counter(a, f) + counter(b, f);
}

bool multiplicative_at(const PointSetExpr& a, const PointSetExpr& b, const FiniteSupport& f,
                       const Counter& counter) {
    return restrict(product(a, b), f).size() == counter(a, f) * counter(b, f);
}

// ---------------------------------------------------------------------------
// Checks

AxiomReport check_AP(const PointSetExpr& x, const PointSetExpr& y, const CheckContext& ctx) {
    Timer timer;
    auto report = make_report("AP", {x.to_string(), y.to_string()}, ctx);
    // |X_F| - |Y_F| = |(X\Y)_F| - |(Y\X)_F| for every F, so both comparisons
    // see the same difference sequence.
    auto supports = chain_stages(ctx);
    for (const auto& f : supports) {
        if (!ap_holds_at(x, y, f, ctx.counter)) {
            report.verdict = Verdict::Fail;
            report.witness.support = f;
            report.note = "difference sequences disagree";
            report.millis = timer.millis();
            return report;
        }
    }
    const auto whole = compare_sets(x, y, ctx);
    const auto parts = compare_sets(set_difference(x, y), set_difference(y, x), ctx);
    if (whole.outcome == Comparison::Undecided && parts.outcome == Comparison::Undecided) {
        report.verdict = Verdict::Undecided;
        report.note = oscillation_note(x, y, ctx);
    } else if ((whole.outcome == Comparison::Equal) != (parts.outcome == Comparison::Equal) ||
               whole.outcome != parts.outcome) {
        report.verdict = Verdict::Fail;
        report.witness.stage = ctx.horizon;
        report.note = "A vs B " + whole.to_string() + ", A\\B vs B\\A " + parts.to_string();
    } else {
        report.note = "both sides " + whole.to_string();
    }
    report.millis = timer.millis();
    return report;
}

AxiomReport check_SP(const PointSetExpr& a, const PointSetExpr& b, const PointSetExpr& a2,
                     const PointSetExpr& b2, const CheckContext& ctx) {
    Timer timer;
    auto report = make_report("SP", {a.to_string(), b.to_string(), a2.to_string(), b2.to_string()}, ctx);
    require_disjoint(a, b, ctx);
    require_disjoint(a2, b2, ctx);
    for (const auto& f : chain_stages(ctx)) {
        if (!additive_at(a, b, f, ctx.counter) || !additive_at(a2, b2, f, ctx.counter)) {
            report.verdict = Verdict::Fail;
            report.witness.support = f;
            report.note = "count of a disjoint union is not the sum of counts";
            report.millis = timer.millis();
            return report;
        }
    }
    judge_implication(report, {{a, a2}, {b, b2}}, {set_union(a, b), set_union(a2, b2)}, ctx);
    report.millis = timer.millis();
    return report;
}

AxiomReport check_DP(const PointSetExpr& c, const PointSetExpr& a, const PointSetExpr& c2,
                     const PointSetExpr& a2, const CheckContext& ctx) {
    Timer timer;
    auto report = make_report("DP", {c.to_string(), a.to_string(), c2.to_string(), a2.to_string()}, ctx);
    require_subset(a, c, ctx);
    require_subset(a2, c2, ctx);
    for (const auto& f : chain_stages(ctx)) {
        if (ctx.counter(set_difference(c, a), f) + ctx.counter(a, f) != ctx.counter(c, f) ||
            ctx.counter(set_difference(c2, a2), f) + ctx.counter(a2, f) != ctx.counter(c2, f)) {
            report.verdict = Verdict::Fail;
            report.witness.support = f;
            report.note = "count of a difference is not the difference of counts";
            report.millis = timer.millis();
            return report;
        }
    }
    judge_implication(report, {{c, c2}, {a, a2}}, {set_difference(c, a), set_difference(c2, a2)}, ctx);
    report.millis = timer.millis();
    return report;
}

AxiomReport check_UP(const PointSetExpr& a, Natural n, const CheckContext& ctx) {
    Timer timer;
    const auto extended = product(a, singleton(n));
    auto report = make_report("UP", {a.to_string(), "n=" + std::to_string(n)}, ctx);
    std::size_t checked = 0;
    for (const auto& f : exhaustive_supports(ctx, {n})) {
        ++checked;
        if (!up_holds_at(a, n, f, ctx.counter)) {
            report.verdict = Verdict::Fail;
            report.witness.support = f;
            report.note = "|(A x {n})_F| differs from the expected exact count";
            report.millis = timer.millis();
            return report;
        }
    }
    const auto c = compare_sets(extended, a, ctx);
    if (c.outcome != Comparison::Equal) {
        report.verdict = c.outcome == Comparison::Undecided ? Verdict::Undecided : Verdict::Fail;
        report.witness.stage = ctx.horizon;
        report.note = "chain comparison " + c.to_string();
    } else {
        report.note = "exact on " + std::to_string(checked) + " supports; chain comparison " + c.to_string();
    }
    report.millis = timer.millis();
    return report;
}

AxiomReport check_TP_NP(const PointSetExpr& x, const PermutationSpec& spec, const CheckContext& ctx) {
    Timer timer;
    auto report = make_report("TP_NP", {x.to_string(), spec.to_string()}, ctx);
    std::size_t checked = 0;
    for (const auto& f : exhaustive_supports(ctx)) {
        ++checked;
        if (!tp_holds_at(x, spec, f, ctx.counter)) {
            report.verdict = Verdict::Fail;
            report.witness.support = f;
            report.note = "permuted restriction differs from the restriction permuted";
            report.millis = timer.millis();
            return report;
        }
    }
    const auto c = compare_sets(permute_transform(x, spec), x, ctx);
    if (c.outcome != Comparison::Equal) {
        report.verdict = c.outcome == Comparison::Undecided ? Verdict::Undecided : Verdict::Fail;
        report.witness.stage = ctx.horizon;
        report.note = "chain comparison " + c.to_string();
    } else {
        report.note = "exact on " + std::to_string(checked) + " supports";
    }
    report.millis = timer.millis();
    return report;
}

AxiomReport check_PP(const PointSetExpr& a, const PointSetExpr& b, const PointSetExpr& a2,
                     const PointSetExpr& b2, const CheckContext& ctx) {
    Timer timer;
    auto report = make_report("PP", {a.to_string(), b.to_string(), a2.to_string(), b2.to_string()}, ctx);
    require_multipliable(a, b, ctx);
    require_multipliable(a2, b2, ctx);
    for (const auto& f : exhaustive_supports(ctx)) {
        if (!multiplicative_at(a, b, f, ctx.counter) || !multiplicative_at(a2, b2, f, ctx.counter)) {
            report.verdict = Verdict::Fail;
            report.witness.support = f;
            report.note = "count of a multipliable product is not the product of counts";
            report.millis = timer.millis();
            return report;
        }
    }
    judge_implication(report, {{a, a2}, {b, b2}}, {product(a, b), product(a2, b2)}, ctx);
    report.millis = timer.millis();
    return report;
}

AxiomReport check_finite_agreement(std::size_t max_size, std::size_t samples, std::uint64_t seed,
                                   const std::vector<PointSetExpr>& infinite_sets,
                                   const CheckContext& ctx) {
    Timer timer;
    auto report = make_report("FIN", {"max_size=" + std::to_string(max_size),
                                      "samples=" + std::to_string(samples),
                                      "seed=" + std::to_string(seed)},
                              ctx);
    std::mt19937_64 rng(seed);
    constexpr Natural kMaxEntry = 15;
    auto random_set = [&](std::size_t size) {
        std::uniform_int_distribution<std::size_t> arity(1, 3);
        std::uniform_int_distribution<Natural> entry(0, kMaxEntry);
        std::set<Tuple> tuples;
        while (tuples.size() < size) {
            std::vector<Natural> entries(arity(rng));
            for (auto& e : entries) e = entry(rng);
            tuples.emplace(std::move(entries));
        }
        return PointSetExpr::finite(std::vector<Tuple>(tuples.begin(), tuples.end()));
    };
    std::uniform_int_distribution<std::size_t> size_dist(0, max_size);
    // Undecided means the horizon is too short for these entries, not a wrong answer.
    auto fail = [&](const std::string& note, Comparison got) {
        report.verdict = got == Comparison::Undecided ? Verdict::Undecided : Verdict::Fail;
        if (report.verdict == Verdict::Fail) report.witness.stage = ctx.horizon;
        report.note = note;
        report.millis = timer.millis();
        return report;
    };
    for (std::size_t i = 0; i < samples; ++i) {
        const std::size_t sa = size_dist(rng);
        const std::size_t sb = i % 4 == 0 ? sa : size_dist(rng);
        const auto a = random_set(sa);
        const auto b = random_set(sb);
        const auto c = compare_sets(a, b, ctx);
        const Comparison expected =
            sa == sb ? Comparison::Equal : (sa < sb ? Comparison::Less : Comparison::Greater);
        if (c.outcome != expected) {
            return fail(a.to_string() + " vs " + b.to_string() + " gave " + c.to_string(), c.outcome);
        }
        for (const auto& inf : infinite_sets) {
            const auto ci = compare_sets(a, inf, ctx);
            if (ci.outcome != Comparison::Less) {
                return fail(a.to_string() + " vs " + inf.to_string() + " gave " + ci.to_string(), ci.outcome);
            }
        }
    }
    report.note = std::to_string(samples) + " random pairs agree with cardinality";
    report.millis = timer.millis();
    return report;
}

Natural copy_threshold(const PointSetExpr& a) {
    // A copy tuple has length >= 1 + h + k; past max_arity(A) it cannot lie in A.
    return static_cast<Natural>(max_arity(a));
}

AxiomReport check_copy(const PointSetExpr& a, Natural m, Natural h, Natural n, Natural k,
                       std::size_t copies, const CheckContext& ctx) {
    Timer timer;
    auto report = make_report("COPY",
                              {a.to_string(), "m=" + std::to_string(m), "h=" + std::to_string(h),
                               "n=" + std::to_string(n), "k=" + std::to_string(k),
                               "copies=" + std::to_string(copies)},
                              ctx);
    std::vector<PointSetExpr> family;
    for (std::size_t i = 0; i < copies; ++i) family.push_back(shifted_copy(a, m, h, n, k + i));
    const Natural threshold = copy_threshold(a);
    const bool asserted = h >= threshold && k >= threshold;

    for (const auto& f : exhaustive_supports(ctx, {m, n})) {
        const auto base = restrict(a, f);
        std::vector<FinitePointSet> restricted;
        for (const auto& c : family) restricted.push_back(restrict(c, f));
        const bool anchors_in = (h == 0 || f.contains(m)) && (k == 0 || f.contains(n));
        for (std::size_t i = 0; i < restricted.size(); ++i) {
            if (restricted[i].size() != (anchors_in ? ctx.counter(a, f) : 0)) {
                report.verdict = Verdict::Fail;
                report.witness.support = f;
                report.note = "copy " + std::to_string(i) + " is not counted like A";
                report.millis = timer.millis();
                return report;
            }
        }
        std::optional<std::string> overlap;
        for (std::size_t i = 0; i < restricted.size() && !overlap; ++i) {
            if (!(restricted[i] & base).empty()) overlap = "copy " + std::to_string(i) + " meets A";
            for (std::size_t j = i + 1; j < restricted.size() && !overlap; ++j) {
                if (!(restricted[i] & restricted[j]).empty()) {
                    overlap = "copies " + std::to_string(i) + " and " + std::to_string(j) + " meet";
                }
            }
        }
        if (overlap) {
            if (asserted) {
                report.verdict = Verdict::Fail;
                report.witness.support = f;
                report.note = *overlap;
                report.millis = timer.millis();
                return report;
            }
            report.note = "h,k below threshold " + std::to_string(threshold) + ": " + *overlap +
                          " on F=" + f.to_string() + " (disjointness only claimed for large h,k)";
            report.millis = timer.millis();
            return report;
        }
    }
    report.note = asserted ? "pairwise disjoint and counted like A"
                           : "h,k below threshold " + std::to_string(threshold) +
                                 "; no overlap found";
    report.millis = timer.millis();
    return report;
}

// ---------------------------------------------------------------------------
// Catalog

Catalog default_catalog() {
    Catalog c;
    c.expressions = {
        "N^1",
        "N^2",
        "diag(2)",
        "evens",
        "odds",
        "squares",
        "affine(3,1)",
        "{(0),(1,2),(2,1)}",
        "N^1 * diag(2)",
        "N^2 \\ diag(2)",
        "perm(N^2 \\ diag(2), rev) | {(7)}",
        "copy(evens, 1, 2, 3, 1)",
    };
    auto check = [](std::string axiom, std::vector<std::string> operands) {
        CheckSpec s;
        s.axiom = std::move(axiom);
        s.operands = std::move(operands);
        return s;
    };
    auto& k = c.checks;
    k.push_back(check("AP", {"N^2", "N^1"}));
    k.push_back(check("AP", {"diag(2)", "N^1"}));
    k.push_back(check("AP", {"evens | {(1)}", "odds | {(0)}"}));
    k.push_back(check("AP", {"evens", "odds"}));
    k.push_back(check("AP", {"squares", "evens"}));
    k.push_back(check("AP", {"N^2 \\ diag(2)", "N^2"}));
    k.push_back(check("AP", {"N^1", "N^1"}));
    k.push_back(check("SP", {"N^1", "N^2", "diag(2)", "copy(N^2, 0, 3, 1, 0)"}));
    k.push_back(check("SP", {"{}", "N^1", "{}", "diag(2)"}));
    {
        auto s = check("SP", {"evens", "odds", "odds", "copy(evens, 0, 2, 1, 0)"});
        s.oracle = "eventual-sign-mod:2:1";
        k.push_back(s);
    }
    {
        auto s = check("DP", {"N^1", "evens", "N^1", "odds"});
        s.oracle = "eventual-sign-mod:2:1";
        k.push_back(s);
    }
    k.push_back(check("DP", {"N^2", "diag(2)", "perm(N^2, rev)", "diag(2)"}));
    k.push_back(check("DP", {"N^1", "squares", "N^1", "affine(1,0) & squares"}));
    {
        auto s = check("UP", {"N^1"});
        s.n = 0;
        k.push_back(s);
    }
    {
        auto s = check("UP", {"diag(2)"});
        s.n = 3;
        k.push_back(s);
    }
    {
        auto s = check("UP", {"{(1,2),(2,1)}"});
        s.n = 1;
        k.push_back(s);
    }
    {
        auto s = check("UP", {"squares | {(2,5)}"});
        s.n = 12;
        k.push_back(s);
    }
    {
        auto s = check("TP_NP", {"N^3"});
        s.spec = "rev";
        k.push_back(s);
    }
    {
        auto s = check("TP_NP", {"diag(2)"});
        s.spec = "[1 0]";
        k.push_back(s);
    }
    {
        auto s = check("TP_NP", {"N^2 \\ diag(2) | {(1,2,3)}"});
        s.spec = "[1 0][2 0 1]";
        k.push_back(s);
    }
    {
        auto s = check("TP_NP", {"evens * odds"});
        s.spec = "id";
        k.push_back(s);
    }
    k.push_back(check("PP", {"N^1", "N^1", "diag(2)", "diag(2)"}));
    k.push_back(check("PP", {"N^1", "squares", "diag(2)", "squares"}));
    k.push_back(check("PP", {"{(1),(1,2)}", "evens", "{(5),(6)}", "evens"}));
    {
        auto s = check("FIN", {"N^1", "evens", "squares", "diag(2)", "N^2"});
        s.size = 6;
        s.samples = 40;
        s.seed = 7;
        k.push_back(s);
    }
    {
        auto s = check("COPY", {"N^1"});
        s.m = 1, s.h = 1, s.n = 2, s.k = 1, s.copies = 3;
        k.push_back(s);
    }
    {
        auto s = check("COPY", {"diag(2) | {(4)}"});
        s.m = 0, s.h = 2, s.n = 1, s.k = 2, s.copies = 2;
        k.push_back(s);
    }
    {
        auto s = check("COPY", {"{}"});
        s.m = 0, s.h = 1, s.n = 1, s.k = 1, s.copies = 2;
        k.push_back(s);
    }
    return c;
}

namespace {

using nlohmann::ordered_json;

ordered_json spec_to_json(const CheckSpec& s) {
    ordered_json j;
    j["axiom"] = s.axiom;
    j["operands"] = s.operands;
    if (s.oracle) j["oracle"] = *s.oracle;
    if (s.axiom == "UP") j["n"] = s.n;
    if (s.axiom == "TP_NP") j["spec"] = s.spec;
    if (s.axiom == "COPY") {
        j["m"] = s.m;
        j["h"] = s.h;
        j["n"] = s.n;
        j["k"] = s.k;
        j["copies"] = s.copies;
    }
    if (s.axiom == "FIN") {
        j["size"] = s.size;
        j["samples"] = s.samples;
        j["seed"] = s.seed;
    }
    return j;
}

CheckSpec spec_from_json(const ordered_json& j) {
    CheckSpec s;
    s.axiom = j.at("axiom").get<std::string>();
    s.operands = j.value("operands", std::vector<std::string>{});
    if (j.contains("oracle")) s.oracle = j.at("oracle").get<std::string>();
    s.m = j.value("m", s.m);
    s.h = j.value("h", s.h);
    s.n = j.value("n", s.n);
    s.k = j.value("k", s.k);
    s.copies = j.value("copies", s.copies);
    s.spec = j.value("spec", s.spec);
    s.size = j.value("size", s.size);
    s.samples = j.value("samples", s.samples);
    s.seed = j.value("seed", s.seed);
    return s;
}

}  // namespace

Catalog parse_catalog(const std::string& json_text) {
    try {
        const auto j = ordered_json::parse(json_text);
        Catalog c;
        c.expressions = j.value("expressions", std::vector<std::string>{});
        for (const auto& entry : j.at("checks")) c.checks.push_back(spec_from_json(entry));
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed catalog: ") + e.what());
    }
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open catalog '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_catalog(buffer.str());
}

std::string catalog_to_json(const Catalog& catalog) {
    ordered_json j;
    j["expressions"] = catalog.expressions;
    j["checks"] = ordered_json::array();
    for (const auto& s : catalog.checks) j["checks"].push_back(spec_to_json(s));
    return j.dump(2) + "\n";
}

AxiomReport run_check(const CheckSpec& spec, const Catalog&, const CheckContext& base_ctx) {
    CheckContext ctx = base_ctx;
    if (spec.oracle) ctx.oracle = make_oracle(*spec.oracle);
    std::vector<PointSetExpr> ops;
    for (const auto& text : spec.operands) ops.push_back(parse_expr(text));
    auto need = [&](std::size_t count) {
        if (ops.size() != count) {
            throw Error(spec.axiom + " needs " + std::to_string(count) + " operands, got " +
                        std::to_string(ops.size()));
        }
    };
    AxiomReport report;
    if (spec.axiom == "AP") {
        need(2);
        report = check_AP(ops[0], ops[1], ctx);
    } else if (spec.axiom == "SP") {
        need(4);
        report = check_SP(ops[0], ops[1], ops[2], ops[3], ctx);
    } else if (spec.axiom == "DP") {
        need(4);
        report = check_DP(ops[0], ops[1], ops[2], ops[3], ctx);
    } else if (spec.axiom == "UP") {
        need(1);
        report = check_UP(ops[0], spec.n, ctx);
    } else if (spec.axiom == "TP_NP") {
        need(1);
        report = check_TP_NP(ops[0], parse_permutation_spec(spec.spec), ctx);
    } else if (spec.axiom == "PP") {
        need(4);
        report = check_PP(ops[0], ops[1], ops[2], ops[3], ctx);
    } else if (spec.axiom == "FIN") {
        report = check_finite_agreement(spec.size, spec.samples, spec.seed, ops, ctx);
    } else if (spec.axiom == "COPY") {
        need(1);
        report = check_copy(ops[0], spec.m, spec.h, spec.n, spec.k, spec.copies, ctx);
    } else {
        throw Error("unknown axiom '" + spec.axiom + "'");
    }
    if (spec.oracle) report.note += " [oracle " + ctx.oracle->name() + "]";
    return report;
}

std::vector<AxiomReport> run_catalog(const Catalog& catalog, const CheckContext& ctx,
                                     std::size_t threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<AxiomReport> reports(catalog.checks.size());
    if (threads == 1) {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            reports[i] = run_check(catalog.checks[i], catalog, ctx);
        }
        return reports;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (std::size_t t = 0; t < threads; ++t) {
        workers.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next++; i < reports.size(); i = next++) {
                reports[i] = run_check(catalog.checks[i], catalog, ctx);
            }
        }));
    }
    for (auto& w : workers) w.get();
    return reports;
}

std::string reports_to_json(const std::vector<AxiomReport>& reports, bool include_timing) {
    ordered_json out = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json j;
        j["axiom"] = r.axiom;
        j["operands"] = r.operands;
        j["verdict"] = std::string(to_string(r.verdict));
        if (r.witness.empty()) {
            j["witness"] = nullptr;
        } else {
            j["witness"] = r.witness.to_string();
        }
        if (include_timing) {
            j["millis"] = std::round(r.millis * 1000.0) / 1000.0;
        } else {
            j["millis"] = nullptr;
        }
        out.push_back(std::move(j));
    }
    return out.dump(2) + "\n";
}

std::string reports_to_table(const std::vector<AxiomReport>& reports) {
    std::ostringstream out;
    out << std::left << std::setw(7) << "axiom" << std::setw(11) << "verdict" << "operands / note\n";
    for (const auto& r : reports) {
        std::string ops;
        for (std::size_t i = 0; i < r.operands.size(); ++i) {
            if (i != 0) ops += " ; ";
            ops += r.operands[i];
        }
        out << std::left << std::setw(7) << r.axiom << std::setw(11) << to_string(r.verdict) << ops
            << '\n';
        if (!r.witness.empty()) out << std::string(18, ' ') << "witness: " << r.witness.to_string() << '\n';
        if (!r.note.empty()) out << std::string(18, ' ') << r.note << '\n';
    }
    return out.str();
}

}  // namespace numerosity
