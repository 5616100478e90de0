#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace numerosity {

using Natural = std::uint64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kDefaultSubsetLimit = 20;

// A point of N^k, k >= 1. Ordered by length first, then lexicographically.
class Tuple {
public:
    Tuple(std::initializer_list<Natural> entries);
    explicit Tuple(std::vector<Natural> entries);

    const std::vector<Natural>& entries() const noexcept { return entries_; }
    std::size_t length() const noexcept { return entries_.size(); }
    Natural operator[](std::size_t i) const { return entries_[i]; }
    Natural max_entry() const;

    // "(1,2,3)"
    std::string to_string() const;

    friend bool operator==(const Tuple&, const Tuple&) = default;
    friend std::strong_ordering operator<=>(const Tuple& a, const Tuple& b);

private:
    std::vector<Natural> entries_;
};

Tuple concatenate(const Tuple& a, const Tuple& b);

// A finite subset of N, kept sorted and duplicate-free so that equality is
// structural. Ordered by size, then lexicographically (the enumeration order
// of subsets_of).
class FiniteSupport {
public:
    FiniteSupport() = default;
    FiniteSupport(std::initializer_list<Natural> elements);
    explicit FiniteSupport(std::vector<Natural> elements);

    // {lo, lo+1, ..., hi}; empty when hi < lo.
    static FiniteSupport interval(Natural lo, Natural hi);

    const std::vector<Natural>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    bool contains(Natural n) const;
    bool contains_all(const Tuple& t) const;
    bool is_subset_of(const FiniteSupport& other) const;
    FiniteSupport with(Natural n) const;

    // "{0,1,2}"
    std::string to_string() const;
    // "{0 1 2}", used where commas would clash with CSV.
    std::string to_csv_field() const;

    friend bool operator==(const FiniteSupport&, const FiniteSupport&) = default;
    friend std::strong_ordering operator<=>(const FiniteSupport& a, const FiniteSupport& b);

private:
    std::vector<Natural> elements_;
};

// t^a for an exponent vector a with finite support. Only nonzero exponents
// are stored, sorted by variable index; the empty monomial is the constant 1.
class Monomial {
public:
    using Entry = std::pair<Natural, std::uint32_t>;

    Monomial() = default;
    Monomial(std::initializer_list<Entry> exponents);
    explicit Monomial(std::vector<Entry> exponents);

    static Monomial variable(Natural index, std::uint32_t exponent = 1);
    // t_F = prod_{n in F} t_n
    static Monomial squarefree(const FiniteSupport& support);

    const std::vector<Entry>& exponents() const noexcept { return exponents_; }
    std::uint32_t exponent(Natural variable) const;
    std::uint64_t degree() const;
    std::uint32_t max_exponent() const;
    bool is_constant() const noexcept { return exponents_.empty(); }
    bool is_squarefree() const;
    FiniteSupport support() const;

    Monomial operator*(const Monomial& other) const;

    // "t0^2*t3", "1" for the constant monomial.
    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    // Canonical order: total degree, then support, then exponent vector.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<Entry> exponents_;
};

// a_i = number of positions j with x_j = i.
Monomial monomial_of_tuple(const Tuple& x);

// k! / prod a_i! with k = degree; defined as 1 for the constant monomial.
BigInt multinomial(const Monomial& m);

// Number of distinct tuples x with monomial_of_tuple(x) == m. Throws for the
// constant monomial since no tuple has length zero.
BigInt tuple_count_of_monomial(const Monomial& m);

Monomial squarefree_of(const Monomial& m);

BigInt factorial(std::uint64_t n);

// All subsets of f, ordered by size and then lexicographically.
std::vector<FiniteSupport> subsets_of(const FiniteSupport& f,
                                      std::size_t limit = kDefaultSubsetLimit);

}  // namespace numerosity
