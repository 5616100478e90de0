#pragma once

// Seeded random generators for property tests.

#include <random>
#include <set>
#include <vector>

#include "numerosity/combinatorics.hpp"
#include "numerosity/pointset.hpp"
#include "numerosity/series.hpp"

namespace gen {

using namespace numerosity;
using Rng = std::mt19937_64;

inline std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
inline long long between(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline Tuple tuple(Rng& rng, std::size_t max_arity, Natural max_entry) {
    std::vector<Natural> entries(1 + below(rng, max_arity));
    for (auto& e : entries) e = static_cast<Natural>(between(rng, 0, static_cast<long long>(max_entry)));
    return Tuple(std::move(entries));
}

inline PointSetExpr finite_set(Rng& rng, std::size_t max_size, std::size_t max_arity, Natural max_entry) {
    std::vector<Tuple> tuples;
    const std::size_t n = below(rng, max_size + 1);
    for (std::size_t i = 0; i < n; ++i) tuples.push_back(tuple(rng, max_arity, max_entry));
    return PointSetExpr::finite(std::move(tuples));
}

inline FiniteSupport support(Rng& rng, Natural max_element) {
    std::vector<Natural> elements;
    for (Natural i = 0; i <= max_element; ++i) {
        if (below(rng, 2) == 1) elements.push_back(i);
    }
    return FiniteSupport(std::move(elements));
}

// Random expression whose tuples have length <= max_arity.
inline PointSetExpr expr(Rng& rng, std::size_t max_arity, int depth = 2) {
    if (depth == 0 || below(rng, 3) == 0) {
        switch (below(rng, 8)) {
            case 0: return PointSetExpr::full_space(1 + below(rng, max_arity));
            case 1: return PointSetExpr::diagonal(1 + below(rng, max_arity));
            case 2: return PointSetExpr::evens();
            case 3: return PointSetExpr::odds();
            case 4: return PointSetExpr::squares();
            case 5: return PointSetExpr::monotone_image(MonotoneMap::affine(1 + below(rng, 3), below(rng, 3)));
            default: return finite_set(rng, 6, max_arity, 5);
        }
    }
    switch (below(rng, 6)) {
        case 0: return set_union(expr(rng, max_arity, depth - 1), expr(rng, max_arity, depth - 1));
        case 1: return set_intersection(expr(rng, max_arity, depth - 1), expr(rng, max_arity, depth - 1));
        case 2: return set_difference(expr(rng, max_arity, depth - 1), expr(rng, max_arity, depth - 1));
        case 3:
            if (max_arity >= 2) {
                const std::size_t left = 1 + below(rng, max_arity - 1);
                return product(expr(rng, left, depth - 1), expr(rng, max_arity - left, depth - 1));
            }
            return expr(rng, max_arity, depth - 1);
        case 4:
            return permute_transform(expr(rng, max_arity, depth - 1),
                                     below(rng, 2) == 0 ? PermutationSpec::reversal()
                                                        : PermutationSpec::from_arities({{2, {1, 0}}, {3, {2, 0, 1}}}));
        default:
            if (max_arity >= 2) {
                const Natural h = below(rng, 2), k = h == 0 ? 1 : below(rng, 2);
                if (h + k < max_arity) {
                    return shifted_copy(expr(rng, max_arity - h - k, depth - 1), below(rng, 4), h, below(rng, 4), k);
                }
            }
            return expr(rng, max_arity, depth - 1);
    }
}

// Every monomial with support ⊆ window.support and exponents ≤ cap, up to
// total degree max_degree.
inline std::vector<Monomial> monomials(const TruncationWindow& w, std::size_t max_degree) {
    std::vector<Monomial> out{Monomial{}};
    for (auto v : w.support.elements()) {
        std::vector<Monomial> next;
        for (const auto& m : out) {
            Monomial power{};
            for (std::uint32_t e = 0; e <= w.degree_cap && m.degree() + e <= max_degree; ++e) {
                next.push_back(m * power);
                power = power * Monomial::variable(v);
            }
        }
        out = std::move(next);
    }
    return out;
}

inline TruncatedSeries series(Rng& rng, const TruncationWindow& w, std::size_t terms, long long lo, long long hi,
                              std::size_t max_degree = 6) {
    const auto pool = monomials(w, max_degree);
    TruncatedSeries::Coefficients coeffs;
    for (std::size_t i = 0; i < terms; ++i) coeffs[pool[below(rng, pool.size())]] += between(rng, lo, hi);
    return TruncatedSeries(w, std::move(coeffs));
}

inline Rational rational(Rng& rng) {
    return Rational(between(rng, 0, 6), between(rng, 1, 4));
}

}  // namespace gen
