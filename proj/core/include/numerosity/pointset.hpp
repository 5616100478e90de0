#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "numerosity/combinatorics.hpp"

namespace numerosity {

// Strictly increasing maps N -> N whose images are the infinite subsets of N
// the expression language can name directly.
class MonotoneMap {
public:
    enum class Kind { Affine, Square };

    static MonotoneMap affine(Natural slope, Natural offset);
    static MonotoneMap square();

    Kind kind() const noexcept { return kind_; }
    Natural slope() const noexcept { return slope_; }
    Natural offset() const noexcept { return offset_; }

    Natural apply(Natural n) const;
    bool in_image(Natural value) const;
    // "evens", "odds", "squares" or "affine(a,b)".
    std::string to_string() const;

    friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;

private:
    MonotoneMap(Kind kind, Natural slope, Natural offset)
        : kind_(kind), slope_(slope), offset_(offset) {}

    Kind kind_;
    Natural slope_;
    Natural offset_;
};

// A position permutation chosen per arity: the image of (a_0,...,a_{k-1}) is
// (a_{p[0]},...,a_{p[k-1]}) where p is the permutation registered for k.
// Arities without an entry are left unchanged, unless the spec reverses every
// arity.
class PermutationSpec {
public:
    static PermutationSpec identity();
    static PermutationSpec reversal();
    // Throws PreconditionError if some entry is not a bijection of 0..k-1.
    static PermutationSpec from_arities(std::map<std::size_t, std::vector<std::size_t>> perms);

    Tuple apply(const Tuple& t) const;
    Tuple apply_inverse(const Tuple& t) const;
    // "id", "rev" or "[1 0][0 2 1]".
    std::string to_string() const;

private:
    std::vector<std::size_t> permutation_for(std::size_t arity) const;

    bool reverse_all_ = false;
    std::map<std::size_t, std::vector<std::size_t>> perms_;
};

// A finite set of tuples in canonical (length, then lexicographic) order.
class FinitePointSet {
public:
    FinitePointSet() = default;
    explicit FinitePointSet(std::vector<Tuple> tuples);

    const std::vector<Tuple>& tuples() const noexcept { return tuples_; }
    std::size_t size() const noexcept { return tuples_.size(); }
    bool empty() const noexcept { return tuples_.empty(); }
    bool contains(const Tuple& t) const;
    bool is_subset_of(const FinitePointSet& other) const;

    auto begin() const { return tuples_.begin(); }
    auto end() const { return tuples_.end(); }

    friend FinitePointSet operator|(const FinitePointSet& a, const FinitePointSet& b);
    friend FinitePointSet operator&(const FinitePointSet& a, const FinitePointSet& b);
    friend FinitePointSet operator-(const FinitePointSet& a, const FinitePointSet& b);
    friend bool operator==(const FinitePointSet&, const FinitePointSet&) = default;

    std::string to_string() const;

private:
    std::vector<Tuple> tuples_;
};

struct PointSetNode;

// Immutable expression denoting a finitary point set. Infinite sets only
// enter through the closed constructor catalog below, each of which carries a
// structural bound on tuple length.
class PointSetExpr {
public:
    enum class Kind {
        ExplicitFinite,
        FullSpace,
        Diagonal,
        MonotoneImage,
        Union,
        Intersection,
        Difference,
        Product,
        Permute,
        ShiftedCopy,
    };

    static PointSetExpr empty();
    static PointSetExpr finite(std::vector<Tuple> tuples);
    static PointSetExpr full_space(std::size_t dimension);
    static PointSetExpr diagonal(std::size_t dimension);
    static PointSetExpr monotone_image(MonotoneMap map);
    static PointSetExpr naturals() { return full_space(1); }
    static PointSetExpr evens() { return monotone_image(MonotoneMap::affine(2, 0)); }
    static PointSetExpr odds() { return monotone_image(MonotoneMap::affine(2, 1)); }
    static PointSetExpr squares() { return monotone_image(MonotoneMap::square()); }

    Kind kind() const;
    const PointSetNode& node() const { return *node_; }

    // DSL text; parse_expr(to_string()) reproduces the expression.
    std::string to_string() const;

private:
    explicit PointSetExpr(std::shared_ptr<const PointSetNode> node) : node_(std::move(node)) {}

    friend PointSetExpr make_expr(PointSetNode node);

    std::shared_ptr<const PointSetNode> node_;
};

PointSetExpr set_union(PointSetExpr a, PointSetExpr b);
PointSetExpr set_intersection(PointSetExpr a, PointSetExpr b);
PointSetExpr set_difference(PointSetExpr a, PointSetExpr b);
// Concatenation product A x B.
PointSetExpr product(PointSetExpr a, PointSetExpr b);
PointSetExpr permute_transform(PointSetExpr a, PermutationSpec spec);
// A x {m}^h x {n}^k
PointSetExpr shifted_copy(PointSetExpr a, Natural m, Natural h, Natural n, Natural k);

struct ExplicitFiniteNode {
    FinitePointSet tuples;
};
struct FullSpaceNode {
    std::size_t dimension;
};
struct DiagonalNode {
    std::size_t dimension;
};
struct MonotoneImageNode {
    MonotoneMap map;
};
struct UnionNode {
    PointSetExpr lhs, rhs;
};
struct IntersectionNode {
    PointSetExpr lhs, rhs;
};
struct DifferenceNode {
    PointSetExpr lhs, rhs;
};
struct ProductNode {
    PointSetExpr lhs, rhs;
};
struct PermuteNode {
    PointSetExpr inner;
    PermutationSpec spec;
};
struct ShiftedCopyNode {
    PointSetExpr inner;
    Natural m, h, n, k;
};

// Alternative order matches PointSetExpr::Kind.
struct PointSetNode {
    std::variant<ExplicitFiniteNode, FullSpaceNode, DiagonalNode, MonotoneImageNode, UnionNode,
                 IntersectionNode, DifferenceNode, ProductNode, PermuteNode, ShiftedCopyNode>
        value;
};

struct ValidationResult {
    bool ok = true;
    std::string reason;
    // DSL text of the offending sub-expression when !ok.
    std::string subexpression;

    explicit operator bool() const noexcept { return ok; }
};

ValidationResult validate(const PointSetExpr& x);

// Structural certificate: x contains no tuple of length > finitary_bound(x, n)
// whose entries all lie in {0..n}.
std::size_t finitary_bound(const PointSetExpr& x, Natural n);

// Largest tuple length that can occur in x at all. Every constructor in the
// catalog has one.
std::size_t max_arity(const PointSetExpr& x);

// Common length of all tuples when it is decidable structurally that x has
// one; nullopt otherwise (including for the empty set).
std::optional<std::size_t> uniform_arity(const PointSetExpr& x);

// True when x is structurally the empty set (explicit {}).
bool is_structurally_empty(const PointSetExpr& x);

bool contains(const PointSetExpr& x, const Tuple& t);

// X_F: the tuples of x all of whose components lie in f.
FinitePointSet restrict(const PointSetExpr& x, const FiniteSupport& f);

struct Collision {
    Tuple concatenation;
    Tuple first_left, first_right;
    Tuple second_left, second_right;

    std::string to_string() const;
};

std::optional<Collision> find_collision(const PointSetExpr& x, const PointSetExpr& y,
                                        const FiniteSupport& f);

bool is_multipliable_on(const PointSetExpr& x, const PointSetExpr& y, const FiniteSupport& f);

struct Multipliability {
    enum class Status { True, False, Unknown };

    Status status = Status::Unknown;
    std::optional<Collision> witness;
    // Largest k for which {0..k} was checked when the answer came from sampling.
    std::size_t horizon = 0;
    bool structural = false;
};

inline constexpr std::size_t kDefaultMultipliableHorizon = 8;

Multipliability is_multipliable(const PointSetExpr& x, const PointSetExpr& y,
                                std::size_t horizon = kDefaultMultipliableHorizon);

}  // namespace numerosity
