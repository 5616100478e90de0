#include "numerosity/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "numerosity/error.hpp"

namespace numerosity {

bool TruncationWindow::admits(const Monomial& m) const {
    for (const auto& [var, e] : m.exponents()) {
        if (e > degree_cap || !support.contains(var)) return false;
    }
    return true;
}

std::string TruncationWindow::to_string() const {
    return "(" + support.to_string() + ", cap " + std::to_string(degree_cap) + ")";
}

TruncationWindow window_for(const PointSetExpr& x, const FiniteSupport& f) {
    return TruncationWindow{f, static_cast<std::uint32_t>(std::max<std::size_t>(1, max_arity(x)))};
}

TruncatedSeries::TruncatedSeries(TruncationWindow window) : window_(std::move(window)) {}

TruncatedSeries::TruncatedSeries(TruncationWindow window, Coefficients coeffs,
                                 std::optional<BigInt> bound)
    : window_(std::move(window)), bound_(std::move(bound)) {
    for (auto& [m, c] : coeffs) {
        if (c == 0) continue;
        if (!window_.admits(m)) {
            throw PreconditionError("monomial " + m.to_string() + " lies outside window " +
                                    window_.to_string());
        }
        coeffs_.emplace(m, std::move(c));
    }
    if (bound_) {
        for (const auto& [m, c] : coeffs_) {
            if (abs(c) > *bound_ * multinomial(m)) {
                throw PreconditionError("coefficient of " + m.to_string() +
                                        " exceeds the bound b = " + bound_->str());
            }
        }
    }
}

BigInt TruncatedSeries::coefficient(const Monomial& m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

TruncatedSeries TruncatedSeries::with_bound(BigInt b) const {
    return TruncatedSeries(window_, coeffs_, std::move(b));
}

std::string TruncatedSeries::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : coeffs_) {
        BigInt magnitude = abs(c);
        if (c < 0) {
            out << '-';
        } else if (!first) {
            out << '+';
        }
        if (m.is_constant()) {
            out << magnitude;
        } else {
            if (magnitude != 1) out << magnitude << '*';
            out << m.to_string();
        }
        first = false;
    }
    return out.str();
}

BigInt minimal_bound(const TruncatedSeries& s) {
    BigInt best = 0;
    for (const auto& [m, c] : s.coefficients()) {
        BigInt cap = multinomial(m);
        BigInt need = (abs(c) + cap - 1) / cap;
        best = std::max(best, need);
    }
    return best;
}

TruncatedSeries char_series(const PointSetExpr& x, const TruncationWindow& window) {
    TruncatedSeries::Coefficients coeffs;
    for (const auto& t : restrict(x, window.support)) {
        Monomial m = monomial_of_tuple(t);
        if (window.admits(m)) coeffs[m] += 1;
    }
    return TruncatedSeries(window, std::move(coeffs), BigInt(1));
}

namespace {

void require_same_window(const TruncatedSeries& s, const TruncatedSeries& t) {
    if (!(s.window() == t.window())) {
        throw PreconditionError("window mismatch: " + s.window().to_string() + " vs " +
                                t.window().to_string());
    }
}

std::optional<BigInt> sum_bound(const TruncatedSeries& s, const TruncatedSeries& t) {
    if (s.bound() && t.bound()) return *s.bound() + *t.bound();
    return std::nullopt;
}

}  // namespace

TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_same_window(s, t);
    auto coeffs = s.coefficients();
    for (const auto& [m, c] : t.coefficients()) coeffs[m] += c;
    return TruncatedSeries(s.window(), std::move(coeffs), sum_bound(s, t));
}

TruncatedSeries sub(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_same_window(s, t);
    auto coeffs = s.coefficients();
    for (const auto& [m, c] : t.coefficients()) coeffs[m] -= c;
    return TruncatedSeries(s.window(), std::move(coeffs), sum_bound(s, t));
}

TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t) {
    if (!(s.window().support == t.window().support)) {
        throw PreconditionError("window mismatch: " + s.window().to_string() + " vs " +
                                t.window().to_string());
    }
    TruncationWindow window{s.window().support, s.window().degree_cap + t.window().degree_cap};
    TruncatedSeries::Coefficients coeffs;
    for (const auto& [ma, ca] : s.coefficients()) {
        for (const auto& [mb, cb] : t.coefficients()) coeffs[ma * mb] += ca * cb;
    }
    // Splitting a word of length k into a prefix and a suffix gives
    // sum_{a+c=e} multinomial(a) multinomial(c) = (k+1) multinomial(e).
    std::optional<BigInt> bound;
    if (s.bound() && t.bound()) {
        const BigInt max_degree = BigInt(window.support.size()) * window.degree_cap;
        bound = *s.bound() * *t.bound() * (max_degree + 1);
    }
    return TruncatedSeries(std::move(window), std::move(coeffs), std::move(bound));
}

Assignment::Assignment(std::map<Natural, Rational> values) {
    for (auto& [var, value] : values) {
        if (value < 0) {
            throw PreconditionError("assignment value for t" + std::to_string(var) +
                                    " is negative");
        }
        values_.emplace(var, std::move(value));
    }
}

Assignment Assignment::indicator(const FiniteSupport& f) { return constant(f, Rational(1)); }

Assignment Assignment::constant(const FiniteSupport& f, const Rational& value) {
    std::map<Natural, Rational> values;
    for (Natural n : f.elements()) values.emplace(n, value);
    return Assignment(std::move(values));
}

Rational Assignment::value(Natural variable) const {
    auto it = values_.find(variable);
    return it == values_.end() ? Rational(0) : it->second;
}

Rational evaluate(const TruncatedSeries& s, const Assignment& v) {
    for (const auto& [var, value] : v.values()) {
        if (!s.window().support.contains(var)) {
            throw PreconditionError("assignment mentions t" + std::to_string(var) +
                                    " outside window " + s.window().to_string());
        }
    }
    Rational total = 0;
    for (const auto& [m, c] : s.coefficients()) {
        Rational term = Rational(c);
        for (const auto& [var, e] : m.exponents()) {
            const Rational base = v.value(var);
            for (std::uint32_t i = 0; i < e; ++i) term *= base;
            if (term == 0) break;
        }
        total += term;
    }
    return total;
}

TruncatedSeries squarefree(const TruncatedSeries& s) {
    TruncatedSeries::Coefficients coeffs;
    for (const auto& [m, c] : s.coefficients()) coeffs[squarefree_of(m)] += c;
    return TruncatedSeries(TruncationWindow{s.window().support, 1}, std::move(coeffs));
}

namespace {

std::size_t mask_of(const FiniteSupport& e, const FiniteSupport& f) {
    std::size_t mask = 0;
    const auto& elems = f.elements();
    for (Natural x : e.elements()) {
        auto it = std::lower_bound(elems.begin(), elems.end(), x);
        mask |= std::size_t{1} << static_cast<std::size_t>(it - elems.begin());
    }
    return mask;
}

// Dense table indexed by bitmask over f; missing subsets are an error.
std::vector<BigInt> to_table(const SubsetFunction& g, const FiniteSupport& f, std::size_t limit) {
    const auto subsets = subsets_of(f, limit);
    std::vector<BigInt> table(subsets.size());
    for (const auto& e : subsets) {
        auto it = g.find(e);
        if (it == g.end()) {
            throw PreconditionError("missing value for subset " + e.to_string());
        }
        table[mask_of(e, f)] = it->second;
    }
    return table;
}

SubsetFunction from_table(const std::vector<BigInt>& table, const FiniteSupport& f,
                          std::size_t limit) {
    SubsetFunction out;
    for (auto& e : subsets_of(f, limit)) {
        const std::size_t mask = mask_of(e, f);
        out.emplace(std::move(e), table[mask]);
    }
    return out;
}

}  // namespace

SubsetFunction mobius_invert(const SubsetFunction& g, const FiniteSupport& f, std::size_t limit) {
    auto table = to_table(g, f, limit);
    for (std::size_t bit = 1; bit < table.size(); bit <<= 1) {
        for (std::size_t mask = 0; mask < table.size(); ++mask) {
            if (mask & bit) table[mask] -= table[mask ^ bit];
        }
    }
    return from_table(table, f, limit);
}

SubsetFunction subset_sum(const SubsetFunction& n, const FiniteSupport& f, std::size_t limit) {
    auto table = to_table(n, f, limit);
    for (std::size_t bit = 1; bit < table.size(); bit <<= 1) {
        for (std::size_t mask = 0; mask < table.size(); ++mask) {
            if (mask & bit) table[mask] += table[mask ^ bit];
        }
    }
    return from_table(table, f, limit);
}

bool is_characteristic(const TruncatedSeries& s) {
    for (const auto& [m, c] : s.coefficients()) {
        if (c < 0 || m.is_constant()) return false;
        if (c > tuple_count_of_monomial(m)) return false;
    }
    return true;
}

PositiveDecomposition decompose_positive(const TruncatedSeries& s) {
    if (!s.bound()) {
        throw PreconditionError("decompose_positive needs a bound certificate");
    }
    PositiveDecomposition out;
    TruncatedSeries::Coefficients remaining;
    BigInt layers_needed = 0;
    for (const auto& [m, c] : s.coefficients()) {
        if (c < 0) {
            throw PreconditionError("negative coefficient at " + m.to_string());
        }
        if (m.is_constant()) {
            out.constant = c;
            continue;
        }
        const BigInt cap = tuple_count_of_monomial(m);
        layers_needed = std::max(layers_needed, BigInt((c + cap - 1) / cap));
        remaining.emplace(m, c);
    }
    if (layers_needed > *s.bound()) {
        throw PreconditionError("coefficients need " + layers_needed.str() +
                                " layers but the bound is " + s.bound()->str());
    }
    while (!remaining.empty()) {
        TruncatedSeries::Coefficients layer;
        for (auto it = remaining.begin(); it != remaining.end();) {
            const BigInt cap = tuple_count_of_monomial(it->first);
            const BigInt take = std::min(it->second, cap);
            layer.emplace(it->first, take);
            it->second -= take;
            it = it->second == 0 ? remaining.erase(it) : std::next(it);
        }
        out.layers.emplace_back(s.window(), std::move(layer), BigInt(1));
    }
    return out;
}

bool in_I0_poly(const TruncatedSeries& s) {
    return evaluate(s, Assignment::constant(s.window().support, Rational(1))) == 0;
}

namespace {
constexpr std::size_t kKernelCrossCheckLimit = 12;
}

bool in_I1_window(const TruncatedSeries& s) {
    const bool projection_vanishes = squarefree(s).is_zero();
    if (s.window().support.size() <= kKernelCrossCheckLimit) {
        bool all_zero = true;
        for (const auto& f : subsets_of(s.window().support, kKernelCrossCheckLimit)) {
            if (evaluate(s, Assignment::indicator(f)) != 0) {
                all_zero = false;
                break;
            }
        }
        if (all_zero != projection_vanishes) {
            throw std::logic_error("kernel characterizations disagree for " + s.to_string());
        }
    }
    return projection_vanishes;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class SeriesParser {
public:
    explicit SeriesParser(std::string_view text) : text_(text) {}

    TruncatedSeries::Coefficients parse() {
        TruncatedSeries::Coefficients coeffs;
        skip_space();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        while (true) {
            auto [m, c] = term();
            coeffs[m] += negative ? BigInt(-c) : c;
            skip_space();
            if (at_end()) break;
            const char op = peek();
            if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", pos_);
            negative = op == '-';
            ++pos_;
        }
        return coeffs;
    }

private:
    std::pair<Monomial, BigInt> term() {
        skip_space();
        BigInt coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = BigInt(digits());
            skip_space();
            if (peek() != '*') return {Monomial{}, coeff};
            ++pos_;
            skip_space();
        }
        std::vector<Monomial::Entry> entries;
        while (true) {
            if (peek() != 't') throw ParseError("expected variable 't<index>'", pos_);
            ++pos_;
            const Natural var = std::stoull(digits());
            std::uint32_t exponent = 1;
            skip_space();
            if (peek() == '^') {
                ++pos_;
                skip_space();
                exponent = static_cast<std::uint32_t>(std::stoul(digits()));
            }
            entries.emplace_back(var, exponent);
            skip_space();
            if (peek() != '*') break;
            ++pos_;
            skip_space();
        }
        return {Monomial(std::move(entries)), coeff};
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected digits", pos_);
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

TruncatedSeries parse_series(std::string_view text, std::optional<TruncationWindow> window) {
    auto coeffs = SeriesParser(text).parse();
    if (!window) {
        std::vector<Natural> vars;
        std::uint32_t cap = 1;
        for (const auto& [m, c] : coeffs) {
            for (const auto& [var, e] : m.exponents()) {
                vars.push_back(var);
                cap = std::max(cap, e);
            }
        }
        window = TruncationWindow{FiniteSupport(std::move(vars)), cap};
    }
    return TruncatedSeries(std::move(*window), std::move(coeffs));
}

}  // namespace numerosity
