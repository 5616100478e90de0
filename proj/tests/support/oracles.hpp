#pragma once

// Brute-force reference implementations used to check the library. None of
// these call the library routine they are checking.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <variant>
#include <vector>

#include "numerosity/combinatorics.hpp"
#include "numerosity/pointset.hpp"
#include "numerosity/series.hpp"

namespace oracle {

using namespace numerosity;

// Occurrence count of each value, as a plain map.
inline std::map<Natural, unsigned> occurrences(const std::vector<Natural>& xs) {
    std::map<Natural, unsigned> out;
    for (auto x : xs) ++out[x];
    return out;
}

inline std::map<Natural, unsigned> exponents_of(const Monomial& m) {
    std::map<Natural, unsigned> out;
    for (const auto& [v, e] : m.exponents()) out[v] = e;
    return out;
}

// Every tuple of exactly `length` entries drawn from `alphabet`.
inline std::vector<std::vector<Natural>> all_words(const std::vector<Natural>& alphabet, std::size_t length) {
    std::vector<std::vector<Natural>> out{{}};
    for (std::size_t i = 0; i < length; ++i) {
        std::vector<std::vector<Natural>> next;
        for (const auto& w : out) {
            for (auto a : alphabet) {
                auto v = w;
                v.push_back(a);
                next.push_back(std::move(v));
            }
        }
        out = std::move(next);
    }
    return out;
}

inline std::uint64_t tuples_with_monomial(const Monomial& m) {
    const auto want = exponents_of(m);
    std::uint64_t n = 0;
    for (const auto& w : all_words(m.support().elements(), m.degree())) {
        if (occurrences(w) == want) ++n;
    }
    return n;
}

bool member(const PointSetExpr& x, const std::vector<Natural>& t);

struct MemberVisitor {
    const std::vector<Natural>& t;

    bool operator()(const ExplicitFiniteNode& n) const {
        return std::any_of(n.tuples.begin(), n.tuples.end(), [&](const Tuple& u) { return u.entries() == t; });
    }
    bool operator()(const FullSpaceNode& n) const { return t.size() == n.dimension; }
    bool operator()(const DiagonalNode& n) const {
        return t.size() == n.dimension && std::adjacent_find(t.begin(), t.end(), std::not_equal_to<>()) == t.end();
    }
    bool operator()(const MonotoneImageNode& n) const {
        if (t.size() != 1) return false;
        for (Natural i = 0; i <= t[0]; ++i) {
            if (n.map.apply(i) == t[0]) return true;
            if (n.map.apply(i) > t[0]) return false;
        }
        return false;
    }
    bool operator()(const UnionNode& n) const { return member(n.lhs, t) || member(n.rhs, t); }
    bool operator()(const IntersectionNode& n) const { return member(n.lhs, t) && member(n.rhs, t); }
    bool operator()(const DifferenceNode& n) const { return member(n.lhs, t) && !member(n.rhs, t); }
    bool operator()(const ProductNode& n) const {
        for (std::size_t cut = 1; cut < t.size(); ++cut) {
            std::vector<Natural> a(t.begin(), t.begin() + cut), b(t.begin() + cut, t.end());
            if (member(n.lhs, a) && member(n.rhs, b)) return true;
        }
        return false;
    }
    bool operator()(const PermuteNode& n) const {
        // Search every rearrangement s of t for one with s ∈ inner and spec(s) = t.
        auto s = t;
        std::sort(s.begin(), s.end());
        do {
            if (n.spec.apply(Tuple(s)).entries() == t && member(n.inner, s)) return true;
        } while (std::next_permutation(s.begin(), s.end()));
        return false;
    }
    bool operator()(const ShiftedCopyNode& n) const {
        const std::size_t tail = n.h + n.k;
        if (t.size() <= tail) return false;
        const std::size_t base = t.size() - tail;
        for (std::size_t i = 0; i < n.h; ++i) {
            if (t[base + i] != n.m) return false;
        }
        for (std::size_t i = 0; i < n.k; ++i) {
            if (t[base + n.h + i] != n.n) return false;
        }
        return member(n.inner, std::vector<Natural>(t.begin(), t.begin() + base));
    }
};

inline bool member(const PointSetExpr& x, const std::vector<Natural>& t) {
    return std::visit(MemberVisitor{t}, x.node().value);
}

// X_F by enumerating every word over F up to `max_length`.
inline std::set<std::vector<Natural>> restrict_set(const PointSetExpr& x, const FiniteSupport& f,
                                                   std::size_t max_length) {
    std::set<std::vector<Natural>> out;
    for (std::size_t len = 1; len <= max_length; ++len) {
        for (const auto& w : all_words(f.elements(), len)) {
            if (member(x, w)) out.insert(w);
        }
    }
    return out;
}

inline std::set<std::vector<Natural>> as_set(const FinitePointSet& s) {
    std::set<std::vector<Natural>> out;
    for (const auto& t : s) out.insert(t.entries());
    return out;
}

// All subsets of f as plain vectors, any order.
inline std::vector<std::vector<Natural>> power_set(const std::vector<Natural>& f) {
    std::vector<std::vector<Natural>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.size()); ++mask) {
        std::vector<Natural> s;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (mask >> i & 1) s.push_back(f[i]);
        }
        out.push_back(std::move(s));
    }
    return out;
}

inline bool subset(const std::vector<Natural>& a, const std::vector<Natural>& b) {
    return std::all_of(a.begin(), a.end(), [&](Natural x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

// n_E = Σ_{E'⊆E} (−1)^{|E∖E'|} g(E'), straight from the formula.
inline std::map<std::vector<Natural>, BigInt> mobius(const std::map<std::vector<Natural>, BigInt>& g,
                                                     const std::vector<Natural>& f) {
    std::map<std::vector<Natural>, BigInt> out;
    for (const auto& e : power_set(f)) {
        BigInt acc = 0;
        for (const auto& e2 : power_set(e)) {
            const bool odd = (e.size() - e2.size()) % 2 == 1;
            acc += odd ? BigInt(-g.at(e2)) : g.at(e2);
        }
        out[e] = acc;
    }
    return out;
}

// Σ_a n_a ∏ v_i^{a_i}, term by term.
inline Rational evaluate(const TruncatedSeries& s, const std::map<Natural, Rational>& v) {
    Rational total = 0;
    for (const auto& [m, c] : s.coefficients()) {
        Rational term = c;
        for (const auto& [var, e] : exponents_of(m)) {
            const auto it = v.find(var);
            const Rational value = it == v.end() ? Rational(0) : it->second;
            for (unsigned i = 0; i < e; ++i) term *= value;
        }
        total += term;
    }
    return total;
}

inline std::map<Natural, Rational> indicator(const std::vector<Natural>& f, const std::vector<Natural>& window) {
    std::map<Natural, Rational> v;
    for (auto w : window) v[w] = 0;
    for (auto x : f) v[x] = 1;
    return v;
}

// Explicit realization: try to pick n_a distinct tuples for each monomial and
// check the resulting set has exactly the series s.
inline bool realizable(const TruncatedSeries& s) {
    std::vector<Tuple> chosen;
    for (const auto& [m, c] : s.coefficients()) {
        if (m.degree() == 0 || c < 0) return false;
        const auto want = exponents_of(m);
        std::uint64_t need = static_cast<std::uint64_t>(c);
        for (const auto& w : all_words(m.support().elements(), m.degree())) {
            if (need == 0) break;
            if (occurrences(w) == want) {
                chosen.emplace_back(w);
                --need;
            }
        }
        if (need != 0) return false;
    }
    return char_series(PointSetExpr::finite(chosen), s.window()) == s;
}

}  // namespace oracle
