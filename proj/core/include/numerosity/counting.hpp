#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "numerosity/combinatorics.hpp"
#include "numerosity/pointset.hpp"

namespace numerosity {

// An injective enumeration pi(0), pi(1), ... of N. The first entries are given
// explicitly; afterwards the unused naturals follow in increasing order.
// Stage k of the chain is H_k = {pi(0), ..., pi(k)}.
class Chain {
public:
    static Chain identity() { return Chain{}; }
    // Throws PreconditionError if the prefix repeats a value.
    static Chain reordered(std::vector<Natural> prefix);

    Natural at(std::size_t k) const;
    FiniteSupport stage(std::size_t k) const;
    bool is_identity() const;
    const std::vector<Natural>& prefix() const noexcept { return prefix_; }

    // "identity" or "perm:0,2,4"
    std::string to_string() const;

    friend bool operator==(const Chain& a, const Chain& b);

private:
    std::vector<Natural> prefix_;
};

// |X_F|. Uses structural counting where it is exact and falls back to
// enumerating the restriction otherwise.
std::uint64_t count(const PointSetExpr& x, const FiniteSupport& f);

// F -> |X_F| with a cache shared between copies. Safe for concurrent use.
class CountingFunction {
public:
    explicit CountingFunction(PointSetExpr source);

    const PointSetExpr& source() const noexcept { return source_; }
    std::uint64_t operator()(const FiniteSupport& f) const;
    std::size_t cached_entries() const;

private:
    struct Cache {
        mutable std::shared_mutex mutex;
        std::map<FiniteSupport, std::uint64_t> values;
    };

    PointSetExpr source_;
    std::shared_ptr<Cache> cache_;
};

// Entry k is |X_{H_k}| for k = 0..horizon.
std::vector<std::uint64_t> counting_sequence(const PointSetExpr& x, const Chain& chain,
                                             std::size_t horizon);
std::vector<std::uint64_t> counting_sequence(const CountingFunction& counter, const Chain& chain,
                                             std::size_t horizon);

// Re-indexes values given along a chain by the cardinality of the support:
// position n receives the value at the stage with n+1 elements. Throws if the
// stages are not a strictly increasing chain with |H_k| = k+1.
std::vector<BigInt> sigma_transport(const std::vector<std::pair<FiniteSupport, BigInt>>& along_chain);

// "k,H_k,count" header followed by one row per stage.
std::string counting_csv(const PointSetExpr& x, const Chain& chain, std::size_t horizon);

}  // namespace numerosity
