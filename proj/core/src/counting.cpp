#include "numerosity/counting.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

#include "numerosity/error.hpp"

namespace numerosity {

Chain Chain::reordered(std::vector<Natural> prefix) {
    std::set<Natural> seen;
    for (Natural v : prefix) {
        if (!seen.insert(v).second) {
            throw PreconditionError("chain reordering repeats " + std::to_string(v));
        }
    }
    Chain chain;
    chain.prefix_ = std::move(prefix);
    // A prefix that is already 0,1,...,n-1 is the identity chain.
    if (std::all_of(chain.prefix_.begin(), chain.prefix_.end(),
                    [i = Natural{0}](Natural v) mutable { return v == i++; })) {
        chain.prefix_.clear();
    }
    return chain;
}

Natural Chain::at(std::size_t k) const {
    if (k < prefix_.size()) return prefix_[k];
    std::size_t remaining = k - prefix_.size();
    const std::set<Natural> used(prefix_.begin(), prefix_.end());
    for (Natural n = 0;; ++n) {
        if (used.count(n) != 0) continue;
        if (remaining == 0) return n;
        --remaining;
    }
}

FiniteSupport Chain::stage(std::size_t k) const {
    if (prefix_.empty()) return FiniteSupport::interval(0, k);
    std::vector<Natural> elements;
    elements.reserve(k + 1);
    const std::size_t explicit_part = std::min(k + 1, prefix_.size());
    elements.assign(prefix_.begin(), prefix_.begin() + static_cast<std::ptrdiff_t>(explicit_part));
    const std::set<Natural> used(prefix_.begin(), prefix_.end());
    for (Natural n = 0; elements.size() < k + 1; ++n) {
        if (used.count(n) == 0) elements.push_back(n);
    }
    return FiniteSupport(std::move(elements));
}

bool Chain::is_identity() const { return prefix_.empty(); }

std::string Chain::to_string() const {
    if (prefix_.empty()) return "identity";
    std::string out = "perm:";
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(prefix_[i]);
    }
    return out;
}

bool operator==(const Chain& a, const Chain& b) { return a.prefix_ == b.prefix_; }

// ---------------------------------------------------------------------------

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::uint64_t power(std::uint64_t base, std::size_t exponent) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exponent; ++i) out *= base;
    return out;
}

std::uint64_t count_intersection(const PointSetExpr& a, const PointSetExpr& b,
                                 const FiniteSupport& f) {
    // Enumerate the smaller side and test membership in the other.
    const bool a_smaller = count(a, f) <= count(b, f);
    const PointSetExpr& enumerated = a_smaller ? a : b;
    const PointSetExpr& tested = a_smaller ? b : a;
    std::uint64_t total = 0;
    for (const auto& t : restrict(enumerated, f)) {
        if (contains(tested, t)) ++total;
    }
    return total;
}

bool structurally_multipliable(const PointSetExpr& a, const PointSetExpr& b) {
    return is_structurally_empty(a) || is_structurally_empty(b) || uniform_arity(a) ||
           uniform_arity(b);
}

}  // namespace

std::uint64_t count(const PointSetExpr& x, const FiniteSupport& f) {
    return std::visit(
        Overloaded{
            [&](const ExplicitFiniteNode& node) {
                return static_cast<std::uint64_t>(std::count_if(
                    node.tuples.begin(), node.tuples.end(),
                    [&f](const Tuple& t) { return f.contains_all(t); }));
            },
            [&](const FullSpaceNode& node) { return power(f.size(), node.dimension); },
            [&](const DiagonalNode&) { return static_cast<std::uint64_t>(f.size()); },
            [&](const MonotoneImageNode& node) {
                return static_cast<std::uint64_t>(
                    std::count_if(f.elements().begin(), f.elements().end(),
                                  [&node](Natural v) { return node.map.in_image(v); }));
            },
            [&](const UnionNode& node) {
                return count(node.lhs, f) + count(node.rhs, f) -
                       count_intersection(node.lhs, node.rhs, f);
            },
            [&](const IntersectionNode& node) { return count_intersection(node.lhs, node.rhs, f); },
            [&](const DifferenceNode& node) {
                return count(node.lhs, f) - count_intersection(node.lhs, node.rhs, f);
            },
            [&](const ProductNode& node) {
                if (structurally_multipliable(node.lhs, node.rhs)) {
                    return count(node.lhs, f) * count(node.rhs, f);
                }
                return static_cast<std::uint64_t>(restrict(x, f).size());
            },
            [&](const PermuteNode& node) { return count(node.inner, f); },
            [&](const ShiftedCopyNode& node) -> std::uint64_t {
                if ((node.h > 0 && !f.contains(node.m)) || (node.k > 0 && !f.contains(node.n))) {
                    return 0;
                }
                return count(node.inner, f);
            },
        },
        x.node().value);
}

CountingFunction::CountingFunction(PointSetExpr source)
    : source_(std::move(source)), cache_(std::make_shared<Cache>()) {}

std::uint64_t CountingFunction::operator()(const FiniteSupport& f) const {
    {
        std::shared_lock lock(cache_->mutex);
        if (auto it = cache_->values.find(f); it != cache_->values.end()) return it->second;
    }
    const std::uint64_t value = count(source_, f);
    std::unique_lock lock(cache_->mutex);
    cache_->values.insert_or_assign(f, value);
    return value;
}

std::size_t CountingFunction::cached_entries() const {
    std::shared_lock lock(cache_->mutex);
    return cache_->values.size();
}

std::vector<std::uint64_t> counting_sequence(const CountingFunction& counter, const Chain& chain,
                                             std::size_t horizon) {
    std::vector<std::uint64_t> out;
    out.reserve(horizon + 1);
    for (std::size_t k = 0; k <= horizon; ++k) out.push_back(counter(chain.stage(k)));
    return out;
}

std::vector<std::uint64_t> counting_sequence(const PointSetExpr& x, const Chain& chain,
                                             std::size_t horizon) {
    return counting_sequence(CountingFunction(x), chain, horizon);
}

std::vector<BigInt> sigma_transport(
    const std::vector<std::pair<FiniteSupport, BigInt>>& along_chain) {
    std::vector<BigInt> out(along_chain.size());
    std::vector<bool> filled(along_chain.size(), false);
    for (const auto& [stage, value] : along_chain) {
        const std::size_t n = stage.size();
        if (n == 0 || n > along_chain.size()) {
            throw PreconditionError("stage " + stage.to_string() +
                                    " does not fit a chain with |H_k| = k+1");
        }
        if (filled[n - 1]) {
            throw PreconditionError("two stages of cardinality " + std::to_string(n));
        }
        filled[n - 1] = true;
        out[n - 1] = value;
    }
    // Stages sorted by cardinality must be nested.
    std::vector<const FiniteSupport*> by_size(along_chain.size());
    for (const auto& entry : along_chain) by_size[entry.first.size() - 1] = &entry.first;
    for (std::size_t i = 1; i < by_size.size(); ++i) {
        if (!by_size[i - 1]->is_subset_of(*by_size[i])) {
            throw PreconditionError("stages " + by_size[i - 1]->to_string() + " and " +
                                    by_size[i]->to_string() + " are not nested");
        }
    }
    return out;
}

std::string counting_csv(const PointSetExpr& x, const Chain& chain, std::size_t horizon) {
    CountingFunction counter(x);
    std::ostringstream out;
    out << "k,H_k,count\n";
    for (std::size_t k = 0; k <= horizon; ++k) {
        const auto stage = chain.stage(k);
        out << k << ',' << stage.to_csv_field() << ',' << counter(stage) << '\n';
    }
    return out.str();
}

}  // namespace numerosity
