#include "numerosity/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "numerosity/error.hpp"

namespace numerosity {

Tuple::Tuple(std::initializer_list<Natural> entries) : Tuple(std::vector<Natural>(entries)) {}

Tuple::Tuple(std::vector<Natural> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw PreconditionError("no tuple has length zero");
    }
}

Natural Tuple::max_entry() const {
    return *std::max_element(entries_.begin(), entries_.end());
}

std::string Tuple::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i != 0) out << ',';
        out << entries_[i];
    }
    out << ')';
    return out.str();
}

std::strong_ordering operator<=>(const Tuple& a, const Tuple& b) {
    if (auto c = a.entries_.size() <=> b.entries_.size(); c != 0) return c;
    return a.entries_ <=> b.entries_;
}

Tuple concatenate(const Tuple& a, const Tuple& b) {
    std::vector<Natural> joined = a.entries();
    joined.insert(joined.end(), b.entries().begin(), b.entries().end());
    return Tuple(std::move(joined));
}

FiniteSupport::FiniteSupport(std::initializer_list<Natural> elements)
    : FiniteSupport(std::vector<Natural>(elements)) {}

FiniteSupport::FiniteSupport(std::vector<Natural> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

FiniteSupport FiniteSupport::interval(Natural lo, Natural hi) {
    std::vector<Natural> elements;
    for (Natural n = lo; n <= hi && hi >= lo; ++n) {
        elements.push_back(n);
        if (n == hi) break;
    }
    return FiniteSupport(std::move(elements));
}

bool FiniteSupport::contains(Natural n) const {
    return std::binary_search(elements_.begin(), elements_.end(), n);
}

bool FiniteSupport::contains_all(const Tuple& t) const {
    return std::all_of(t.entries().begin(), t.entries().end(),
                       [this](Natural n) { return contains(n); });
}

bool FiniteSupport::is_subset_of(const FiniteSupport& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                         elements_.end());
}

FiniteSupport FiniteSupport::with(Natural n) const {
    std::vector<Natural> elements = elements_;
    elements.push_back(n);
    return FiniteSupport(std::move(elements));
}

std::string FiniteSupport::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i != 0) out << ',';
        out << elements_[i];
    }
    out << '}';
    return out.str();
}

std::string FiniteSupport::to_csv_field() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i != 0) out << ' ';
        out << elements_[i];
    }
    out << '}';
    return out.str();
}

std::strong_ordering operator<=>(const FiniteSupport& a, const FiniteSupport& b) {
    if (auto c = a.elements_.size() <=> b.elements_.size(); c != 0) return c;
    return a.elements_ <=> b.elements_;
}

Monomial::Monomial(std::initializer_list<Entry> exponents)
    : Monomial(std::vector<Entry>(exponents)) {}

Monomial::Monomial(std::vector<Entry> exponents) {
    std::map<Natural, std::uint64_t> merged;
    for (const auto& [var, e] : exponents) merged[var] += e;
    for (const auto& [var, e] : merged) {
        if (e != 0) exponents_.emplace_back(var, static_cast<std::uint32_t>(e));
    }
}

Monomial Monomial::variable(Natural index, std::uint32_t exponent) {
    return Monomial({Entry{index, exponent}});
}

Monomial Monomial::squarefree(const FiniteSupport& support) {
    Monomial m;
    for (Natural n : support.elements()) m.exponents_.emplace_back(n, 1);
    return m;
}

std::uint32_t Monomial::exponent(Natural variable) const {
    auto it = std::lower_bound(exponents_.begin(), exponents_.end(), variable,
                               [](const Entry& e, Natural v) { return e.first < v; });
    return (it != exponents_.end() && it->first == variable) ? it->second : 0;
}

std::uint64_t Monomial::degree() const {
    std::uint64_t total = 0;
    for (const auto& e : exponents_) total += e.second;
    return total;
}

std::uint32_t Monomial::max_exponent() const {
    std::uint32_t best = 0;
    for (const auto& e : exponents_) best = std::max(best, e.second);
    return best;
}

bool Monomial::is_squarefree() const {
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [](const Entry& e) { return e.second == 1; });
}

FiniteSupport Monomial::support() const {
    std::vector<Natural> vars;
    vars.reserve(exponents_.size());
    for (const auto& e : exponents_) vars.push_back(e.first);
    return FiniteSupport(std::move(vars));
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    auto a = exponents_.begin();
    auto b = other.exponents_.begin();
    while (a != exponents_.end() || b != other.exponents_.end()) {
        if (b == other.exponents_.end() || (a != exponents_.end() && a->first < b->first)) {
            out.exponents_.push_back(*a++);
        } else if (a == exponents_.end() || b->first < a->first) {
            out.exponents_.push_back(*b++);
        } else {
            out.exponents_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return out;
}

std::string Monomial::to_string() const {
    if (exponents_.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (i != 0) out << '*';
        out << 't' << exponents_[i].first;
        if (exponents_[i].second != 1) out << '^' << exponents_[i].second;
    }
    return out.str();
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.support() <=> b.support(); c != 0) return c;
    return a.exponents_ <=> b.exponents_;
}

Monomial monomial_of_tuple(const Tuple& x) {
    std::vector<Monomial::Entry> entries;
    entries.reserve(x.length());
    for (Natural v : x.entries()) entries.emplace_back(v, 1);
    return Monomial(std::move(entries));
}

BigInt factorial(std::uint64_t n) {
    BigInt result = 1;
    for (std::uint64_t i = 2; i <= n; ++i) result *= i;
    return result;
}

BigInt multinomial(const Monomial& m) {
    BigInt result = factorial(m.degree());
    for (const auto& e : m.exponents()) result /= factorial(e.second);
    return result;
}

BigInt tuple_count_of_monomial(const Monomial& m) {
    if (m.is_constant()) {
        throw PreconditionError("no tuple has length zero");
    }
    return multinomial(m);
}

Monomial squarefree_of(const Monomial& m) { return Monomial::squarefree(m.support()); }

std::vector<FiniteSupport> subsets_of(const FiniteSupport& f, std::size_t limit) {
    if (f.size() > limit) {
        throw PreconditionError("support too large for subset enumeration (" +
                                std::to_string(f.size()) + " > " + std::to_string(limit) + ")");
    }
    const auto& elems = f.elements();
    const std::size_t n = elems.size();
    std::vector<FiniteSupport> out;
    out.reserve(std::size_t{1} << n);
    // Combinations of each size in lexicographic order of index vectors.
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::vector<Natural> chosen;
            chosen.reserve(k);
            for (std::size_t i : idx) chosen.push_back(elems[i]);
            out.emplace_back(std::move(chosen));
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

}  // namespace numerosity
