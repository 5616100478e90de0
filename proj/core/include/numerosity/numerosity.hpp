#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numerosity/combinatorics.hpp"
#include "numerosity/counting.hpp"
#include "numerosity/error.hpp"
#include "numerosity/pointset.hpp"

namespace numerosity {

enum class SignClass { Negative, Zero, Positive, Undecided };

struct Classification {
    SignClass sign = SignClass::Undecided;
    // First index of the tail on which the committed sign holds.
    std::optional<std::size_t> tail_index;
};

// Operational stand-in for an ultrafilter on the chain indices: decides which
// of {k : d(k) < 0}, {k : d(k) = 0}, {k : d(k) > 0} is large. Implementations
// must be deterministic and treat cofinite index sets as large; they may
// answer Undecided when the finite data does not determine the answer.
class UltrafilterOracle {
public:
    virtual ~UltrafilterOracle() = default;
    virtual std::string name() const = 0;
    virtual Classification classify(std::span<const BigInt> d) const = 0;
};

inline constexpr std::size_t kDefaultHorizon = 64;
inline constexpr std::size_t kDefaultWindow = 16;

// Commits to a sign class only if it holds on every index of the last
// `window`+1 entries [K - window, K].
class EventualSignOracle : public UltrafilterOracle {
public:
    explicit EventualSignOracle(std::size_t window = kDefaultWindow) : window_(window) {}

    std::string name() const override { return "eventual-sign"; }
    Classification classify(std::span<const BigInt> d) const override;

private:
    std::size_t window_;
};

// Eventual sign restricted to indices k = residue (mod modulus): models
// ultrafilters containing that residue class.
class ResidueOracle : public UltrafilterOracle {
public:
    ResidueOracle(std::size_t modulus, std::size_t residue, std::size_t window = kDefaultWindow);

    std::string name() const override;
    Classification classify(std::span<const BigInt> d) const override;

private:
    std::size_t modulus_;
    std::size_t residue_;
    std::size_t window_;
};

using OracleFactory =
    std::function<std::shared_ptr<const UltrafilterOracle>(std::string_view argument, std::size_t window)>;

// Names: "eventual-sign", "eventual-sign-mod:<p>:<r>", plus anything added
// with register_oracle. A name "prefix:arg" dispatches to the factory
// registered for "prefix" with "arg". Throws Error for unknown names.
std::shared_ptr<const UltrafilterOracle> make_oracle(std::string_view name,
                                                     std::size_t window = kDefaultWindow);
void register_oracle(std::string name, OracleFactory factory);

// A numerosity represented by its counting sequence along a chain, up to a
// horizon. The source expression is kept when one is known.
class Numerosity {
public:
    static Numerosity of(const PointSetExpr& x, const Chain& chain,
                         std::size_t horizon = kDefaultHorizon);
    static Numerosity from_sequence(std::vector<BigInt> sequence, Chain chain);

    // n(empty set) and n({(pi(0))}).
    static Numerosity zero(const Chain& chain, std::size_t horizon = kDefaultHorizon);
    static Numerosity one(const Chain& chain, std::size_t horizon = kDefaultHorizon);

    const std::vector<BigInt>& sequence() const noexcept { return sequence_; }
    const Chain& chain() const noexcept { return chain_; }
    std::size_t horizon() const noexcept { return sequence_.size() - 1; }
    const std::optional<PointSetExpr>& source() const noexcept { return source_; }

    // Counting sequences are nondecreasing along a chain.
    bool is_well_formed() const;

private:
    Numerosity(std::vector<BigInt> sequence, Chain chain, std::optional<PointSetExpr> source);

    std::vector<BigInt> sequence_;
    Chain chain_;
    std::optional<PointSetExpr> source_;
};

enum class Comparison { Less, Equal, Greater, Undecided };

struct ComparisonResult {
    Comparison outcome = Comparison::Undecided;
    std::optional<std::size_t> tail_index;

    // "GREATER tail=1", "UNDECIDED"
    std::string to_string() const;
};

std::string_view to_string(Comparison c);

// Pointwise difference classified by the oracle. Equal whenever the
// difference vanishes on the whole horizon, whatever the oracle.
ComparisonResult compare(const Numerosity& x, const Numerosity& y, const UltrafilterOracle& oracle);

// Carries the colliding concatenation that makes a product ill-defined.
class NotMultipliableError : public PreconditionError {
public:
    explicit NotMultipliableError(Collision witness);
    const Collision& witness() const noexcept { return witness_; }

private:
    Collision witness_;
};

// Pointwise sum. With known sources, the result's source is their union when
// they are disjoint on the chain, otherwise the union with a disjoint shifted
// copy of the second source.
Numerosity add(const Numerosity& x, const Numerosity& y);
Numerosity mul(const Numerosity& x, const Numerosity& y);
// c - a where a's source is a subset of c's source.
Numerosity sub_partial(const Numerosity& c, const Numerosity& a);

struct FapResult {
    bool holds = true;
    std::optional<FiniteSupport> witness;
    std::size_t subsets_checked = 0;
};

// |X_F| <= |Y_F| for every F ⊆ {0..horizon}.
FapResult fap_check(const PointSetExpr& x, const PointSetExpr& y, std::size_t horizon);

class CountMismatchError : public PreconditionError {
public:
    CountMismatchError(std::size_t stage, std::uint64_t x_count, std::uint64_t y_count);
    std::size_t stage() const noexcept { return stage_; }

private:
    std::size_t stage_;
};

struct Congruence {
    // (x, tau(x)) in canonical order of x within each layer.
    std::vector<std::pair<Tuple, Tuple>> pairs;
    // Chain stage at which each pair's source first appears.
    std::vector<std::size_t> layer;

    std::optional<Tuple> image(const Tuple& x) const;
};

// Glues layer bijections X_{H_k} \ X_{H_{k-1}} -> Y_{H_k} \ Y_{H_{k-1}},
// pairing elements in canonical order. Throws CountMismatchError naming the
// first stage where the counts differ.
Congruence build_congruence(const PointSetExpr& x, const PointSetExpr& y, const Chain& chain,
                            std::size_t horizon);

// tau is injective and tau[X_{H_k}] = Y_{H_k} for every k <= horizon.
bool verify_congruence(const Congruence& tau, const PointSetExpr& x, const PointSetExpr& y,
                       const Chain& chain, std::size_t horizon);

}  // namespace numerosity
