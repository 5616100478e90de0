#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "numerosity/counting.hpp"
#include "numerosity/numerosity.hpp"
#include "numerosity/pointset.hpp"

namespace numerosity {

enum class Verdict { Pass, Fail, Undecided };

std::string_view to_string(Verdict v);

// A failing verdict always names one of these; each can be re-checked on its
// own with the matching *_holds_at function.
struct Witness {
    std::optional<FiniteSupport> support;
    std::optional<std::size_t> stage;
    std::optional<Collision> collision;

    bool empty() const { return !support && !stage && !collision; }
    std::string to_string() const;
};

struct AxiomReport {
    std::string axiom;
    std::vector<std::string> operands;
    std::size_t horizon = 0;
    Verdict verdict = Verdict::Pass;
    Witness witness;
    std::string note;
    double millis = 0.0;
};

using Counter = std::function<std::uint64_t(const PointSetExpr&, const FiniteSupport&)>;

struct CheckContext {
    std::shared_ptr<const UltrafilterOracle> oracle = std::make_shared<EventualSignOracle>();
    Chain chain = Chain::identity();
    std::size_t horizon = kDefaultHorizon;
    // Checks that quantify over every F enumerate all F ⊆ {0..exhaustive_limit}
    // (plus the distinguished elements of the check).
    std::size_t exhaustive_limit = 10;
    // |X_F|; replaceable so failure paths can be exercised.
    Counter counter = [](const PointSetExpr& x, const FiniteSupport& f) { return count(x, f); };
};

// Single-point predicates behind the checks. A witness recorded in a failing
// report makes the corresponding predicate return false.
bool ap_holds_at(const PointSetExpr& x, const PointSetExpr& y, const FiniteSupport& f,
                 const Counter& counter);
bool up_holds_at(const PointSetExpr& a, Natural n, const FiniteSupport& f, const Counter& counter);
bool tp_holds_at(const PointSetExpr& x, const PermutationSpec& spec, const FiniteSupport& f,
                 const Counter& counter);
bool additive_at(const PointSetExpr& a, const PointSetExpr& b, const FiniteSupport& f,
                 const Counter& counter);
bool multiplicative_at(const PointSetExpr& a, const PointSetExpr& b, const FiniteSupport& f,
                       const Counter& counter);

// A ≈ B iff A \ B ≈ B \ A
AxiomReport check_AP(const PointSetExpr& x, const PointSetExpr& y, const CheckContext& ctx);
// Disjoint A, B and A', B' with A ≈ A', B ≈ B' give A ∪ B ≈ A' ∪ B'.
AxiomReport check_SP(const PointSetExpr& a, const PointSetExpr& b, const PointSetExpr& a2,
                     const PointSetExpr& b2, const CheckContext& ctx);
// A ⊆ C, A' ⊆ C' with C ≈ C', A ≈ A' give C \ A ≈ C' \ A'.
AxiomReport check_DP(const PointSetExpr& c, const PointSetExpr& a, const PointSetExpr& c2,
                     const PointSetExpr& a2, const CheckContext& ctx);
// A x {n} ≈ A, exactly on every F containing n.
AxiomReport check_UP(const PointSetExpr& a, Natural n, const CheckContext& ctx);
// Position permutations preserve supports, hence counts on every F.
AxiomReport check_TP_NP(const PointSetExpr& x, const PermutationSpec& spec, const CheckContext& ctx);
// Multipliable pairs with A ≈ A', B ≈ B' give A x B ≈ A' x B'.
AxiomReport check_PP(const PointSetExpr& a, const PointSetExpr& b, const PointSetExpr& a2,
                     const PointSetExpr& b2, const CheckContext& ctx);
// Random finite sets of size <= max_size: Equal iff same cardinality, and
// every finite set is below every infinite catalog set.
AxiomReport check_finite_agreement(std::size_t max_size, std::size_t samples, std::uint64_t seed,
                                   const std::vector<PointSetExpr>& infinite_sets,
                                   const CheckContext& ctx);
// `copies` shifted copies A x {m}^h x {n}^(k+i): pairwise disjoint, disjoint
// from A, and counted like A on every F containing m and n, once h and k are
// past the certificate threshold.
AxiomReport check_copy(const PointSetExpr& a, Natural m, Natural h, Natural n, Natural k,
                       std::size_t copies, const CheckContext& ctx);

// Smallest h (and k) from which check_copy asserts disjointness for a.
Natural copy_threshold(const PointSetExpr& a);

struct CheckSpec {
    std::string axiom;  // AP, SP, DP, UP, TP_NP, PP, FIN, COPY
    std::vector<std::string> operands;
    std::optional<std::string> oracle;
    Natural m = 0, h = 0, n = 0, k = 0;
    std::size_t copies = 2;
    std::string spec = "rev";
    std::size_t size = 6;
    std::size_t samples = 40;
    std::uint64_t seed = 1;
};

struct Catalog {
    // Reference expressions for whole-catalog sweeps.
    std::vector<std::string> expressions;
    std::vector<CheckSpec> checks;
};

Catalog default_catalog();
Catalog parse_catalog(const std::string& json_text);
Catalog load_catalog(const std::string& path);
std::string catalog_to_json(const Catalog& catalog);

AxiomReport run_check(const CheckSpec& spec, const Catalog& catalog, const CheckContext& ctx);
// Runs every check, possibly in parallel; reports come back in catalog order.
std::vector<AxiomReport> run_catalog(const Catalog& catalog, const CheckContext& ctx,
                                     std::size_t threads = 0);

// JSON array of {axiom, operands, verdict, witness, millis}.
std::string reports_to_json(const std::vector<AxiomReport>& reports, bool include_timing = true);
std::string reports_to_table(const std::vector<AxiomReport>& reports);

}  // namespace numerosity
