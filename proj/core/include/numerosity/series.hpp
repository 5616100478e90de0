#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numerosity/combinatorics.hpp"
#include "numerosity/pointset.hpp"

namespace numerosity {

// Finite view of a series in countably many indeterminates: only the
// variables in `support`, each with exponent at most `degree_cap`.
struct TruncationWindow {
    FiniteSupport support;
    std::uint32_t degree_cap = 1;

    bool admits(const Monomial& m) const;
    std::string to_string() const;

    friend bool operator==(const TruncationWindow&, const TruncationWindow&) = default;
};

// Window on f wide enough to hold the characteristic series of x restricted
// to f exactly.
TruncationWindow window_for(const PointSetExpr& x, const FiniteSupport& f);

// Integer series truncated to a window. Zero coefficients are never stored.
// The optional bound b certifies membership in the bounded ring:
// |n_a| <= b * multinomial(a) for every stored coefficient.
class TruncatedSeries {
public:
    using Coefficients = std::map<Monomial, BigInt>;

    explicit TruncatedSeries(TruncationWindow window);
    // Throws PreconditionError if a monomial lies outside the window or the
    // bound is violated.
    TruncatedSeries(TruncationWindow window, Coefficients coeffs,
                    std::optional<BigInt> bound = std::nullopt);

    const TruncationWindow& window() const noexcept { return window_; }
    const Coefficients& coefficients() const noexcept { return coeffs_; }
    const std::optional<BigInt>& bound() const noexcept { return bound_; }
    BigInt coefficient(const Monomial& m) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }

    TruncatedSeries with_bound(BigInt b) const;

    // Canonical text: "t0^2+2*t0*t1-t1", "0" for the zero series.
    std::string to_string() const;

    // Window and coefficients; the bound certificate does not take part.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.window_ == b.window_ && a.coeffs_ == b.coeffs_;
    }

private:
    TruncationWindow window_;
    Coefficients coeffs_;
    std::optional<BigInt> bound_;
};

// Smallest b with |n_a| <= b * multinomial(a) for all coefficients.
BigInt minimal_bound(const TruncatedSeries& s);

TruncatedSeries char_series(const PointSetExpr& x, const TruncationWindow& window);

TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries sub(const TruncatedSeries& s, const TruncatedSeries& t);
// Window of the product: same support, degree caps added.
TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t);

inline TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t) { return add(s, t); }
inline TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t) { return sub(s, t); }
inline TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t) { return mul(s, t); }

// Finite-support assignment of non-negative rationals to the variables.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::map<Natural, Rational> values);

    // x_F: 1 on f, 0 elsewhere.
    static Assignment indicator(const FiniteSupport& f);
    static Assignment constant(const FiniteSupport& f, const Rational& value);

    const std::map<Natural, Rational>& values() const noexcept { return values_; }
    Rational value(Natural variable) const;

private:
    std::map<Natural, Rational> values_;
};

Rational evaluate(const TruncatedSeries& s, const Assignment& v);

// S' = sum_F (sum_{supp(a)=F} n_a) t_F
TruncatedSeries squarefree(const TruncatedSeries& s);

using SubsetFunction = std::map<FiniteSupport, BigInt>;

// n_E = sum_{E' ⊆ E} (-1)^{|E \ E'|} g(E') for every E ⊆ f.
SubsetFunction mobius_invert(const SubsetFunction& g, const FiniteSupport& f,
                             std::size_t limit = kDefaultSubsetLimit);
// g(E) = sum_{E' ⊆ E} n(E'); inverse of mobius_invert.
SubsetFunction subset_sum(const SubsetFunction& n, const FiniteSupport& f,
                          std::size_t limit = kDefaultSubsetLimit);

// True iff s is the characteristic series of some set of tuples: every
// coefficient lies in [0, tuple_count_of_monomial]. A nonzero constant term
// is never characteristic since no tuple has length zero.
bool is_characteristic(const TruncatedSeries& s);

struct PositiveDecomposition {
    BigInt constant;
    std::vector<TruncatedSeries> layers;
};

// s = constant + sum(layers), each layer characteristic, at most bound() of
// them. Requires non-negative coefficients and a bound certificate.
PositiveDecomposition decompose_positive(const TruncatedSeries& s);

// Membership in the ideal generated by {t_n - 1 : n in window}, for s read as
// a polynomial: s vanishes at the all-ones point.
bool in_I0_poly(const TruncatedSeries& s);

// Membership in the kernel of the counting map at window scale: the
// squarefree projection vanishes, equivalently s(x_F) = 0 for all F in the
// window.
bool in_I1_window(const TruncatedSeries& s);

// Parses the canonical text form. Without a window, the smallest window
// holding every monomial is used (degree cap at least 1).
TruncatedSeries parse_series(std::string_view text,
                             std::optional<TruncationWindow> window = std::nullopt);

}  // namespace numerosity
