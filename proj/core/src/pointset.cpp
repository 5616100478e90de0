#include "numerosity/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "numerosity/error.hpp"

namespace numerosity {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Natural isqrt(Natural v) {
    auto r = static_cast<Natural>(std::sqrt(static_cast<long double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// MonotoneMap

MonotoneMap MonotoneMap::affine(Natural slope, Natural offset) {
    return MonotoneMap(Kind::Affine, slope, offset);
}

MonotoneMap MonotoneMap::square() { return MonotoneMap(Kind::Square, 0, 0); }

Natural MonotoneMap::apply(Natural n) const {
    return kind_ == Kind::Square ? n * n : slope_ * n + offset_;
}

bool MonotoneMap::in_image(Natural value) const {
    if (kind_ == Kind::Square) {
        Natural r = isqrt(value);
        return r * r == value;
    }
    if (slope_ == 0) return value == offset_;
    return value >= offset_ && (value - offset_) % slope_ == 0;
}

std::string MonotoneMap::to_string() const {
    if (kind_ == Kind::Square) return "squares";
    if (slope_ == 2 && offset_ == 0) return "evens";
    if (slope_ == 2 && offset_ == 1) return "odds";
    return "affine(" + std::to_string(slope_) + "," + std::to_string(offset_) + ")";
}

// ---------------------------------------------------------------------------
// PermutationSpec

PermutationSpec PermutationSpec::identity() { return PermutationSpec{}; }

PermutationSpec PermutationSpec::reversal() {
    PermutationSpec spec;
    spec.reverse_all_ = true;
    return spec;
}

PermutationSpec PermutationSpec::from_arities(
    std::map<std::size_t, std::vector<std::size_t>> perms) {
    for (const auto& [arity, perm] : perms) {
        if (perm.size() != arity || arity == 0) {
            throw PreconditionError("permutation for arity " + std::to_string(arity) + " has " +
                                    std::to_string(perm.size()) + " entries");
        }
        std::vector<bool> seen(arity, false);
        for (std::size_t p : perm) {
            if (p >= arity || seen[p]) {
                throw PreconditionError("permutation for arity " + std::to_string(arity) +
                                        " is not a bijection");
            }
            seen[p] = true;
        }
    }
    PermutationSpec spec;
    spec.perms_ = std::move(perms);
    return spec;
}

std::vector<std::size_t> PermutationSpec::permutation_for(std::size_t arity) const {
    if (auto it = perms_.find(arity); it != perms_.end()) return it->second;
    std::vector<std::size_t> perm(arity);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    if (reverse_all_) std::reverse(perm.begin(), perm.end());
    return perm;
}

Tuple PermutationSpec::apply(const Tuple& t) const {
    const auto perm = permutation_for(t.length());
    std::vector<Natural> out(t.length());
    for (std::size_t i = 0; i < perm.size(); ++i) out[i] = t[perm[i]];
    return Tuple(std::move(out));
}

Tuple PermutationSpec::apply_inverse(const Tuple& t) const {
    const auto perm = permutation_for(t.length());
    std::vector<Natural> out(t.length());
    for (std::size_t i = 0; i < perm.size(); ++i) out[perm[i]] = t[i];
    return Tuple(std::move(out));
}

std::string PermutationSpec::to_string() const {
    if (perms_.empty()) return reverse_all_ ? "rev" : "id";
    std::ostringstream out;
    for (const auto& [arity, perm] : perms_) {
        out << '[';
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (i != 0) out << ' ';
            out << perm[i];
        }
        out << ']';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// FinitePointSet

FinitePointSet::FinitePointSet(std::vector<Tuple> tuples) : tuples_(std::move(tuples)) {
    std::sort(tuples_.begin(), tuples_.end());
    tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
}

bool FinitePointSet::contains(const Tuple& t) const {
    return std::binary_search(tuples_.begin(), tuples_.end(), t);
}

bool FinitePointSet::is_subset_of(const FinitePointSet& other) const {
    return std::includes(other.tuples_.begin(), other.tuples_.end(), tuples_.begin(),
                         tuples_.end());
}

FinitePointSet operator|(const FinitePointSet& a, const FinitePointSet& b) {
    FinitePointSet out;
    std::set_union(a.tuples_.begin(), a.tuples_.end(), b.tuples_.begin(), b.tuples_.end(),
                   std::back_inserter(out.tuples_));
    return out;
}

FinitePointSet operator&(const FinitePointSet& a, const FinitePointSet& b) {
    FinitePointSet out;
    std::set_intersection(a.tuples_.begin(), a.tuples_.end(), b.tuples_.begin(),
                          b.tuples_.end(), std::back_inserter(out.tuples_));
    return out;
}

FinitePointSet operator-(const FinitePointSet& a, const FinitePointSet& b) {
    FinitePointSet out;
    std::set_difference(a.tuples_.begin(), a.tuples_.end(), b.tuples_.begin(), b.tuples_.end(),
                        std::back_inserter(out.tuples_));
    return out;
}

std::string FinitePointSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < tuples_.size(); ++i) {
        if (i != 0) out += ',';
        out += tuples_[i].to_string();
    }
    return out + "}";
}

// ---------------------------------------------------------------------------
// PointSetExpr construction and printing

PointSetExpr make_expr(PointSetNode node) {
    return PointSetExpr(std::make_shared<const PointSetNode>(std::move(node)));
}

PointSetExpr PointSetExpr::empty() { return finite({}); }

PointSetExpr PointSetExpr::finite(std::vector<Tuple> tuples) {
    return make_expr({ExplicitFiniteNode{FinitePointSet(std::move(tuples))}});
}

PointSetExpr PointSetExpr::full_space(std::size_t dimension) {
    return make_expr({FullSpaceNode{dimension}});
}

PointSetExpr PointSetExpr::diagonal(std::size_t dimension) {
    return make_expr({DiagonalNode{dimension}});
}

PointSetExpr PointSetExpr::monotone_image(MonotoneMap map) {
    return make_expr({MonotoneImageNode{map}});
}

PointSetExpr::Kind PointSetExpr::kind() const {
    return static_cast<Kind>(node_->value.index());
}

PointSetExpr set_union(PointSetExpr a, PointSetExpr b) {
    return make_expr({UnionNode{std::move(a), std::move(b)}});
}

PointSetExpr set_intersection(PointSetExpr a, PointSetExpr b) {
    return make_expr({IntersectionNode{std::move(a), std::move(b)}});
}

PointSetExpr set_difference(PointSetExpr a, PointSetExpr b) {
    return make_expr({DifferenceNode{std::move(a), std::move(b)}});
}

PointSetExpr product(PointSetExpr a, PointSetExpr b) {
    return make_expr({ProductNode{std::move(a), std::move(b)}});
}

PointSetExpr permute_transform(PointSetExpr a, PermutationSpec spec) {
    return make_expr({PermuteNode{std::move(a), std::move(spec)}});
}

PointSetExpr shifted_copy(PointSetExpr a, Natural m, Natural h, Natural n, Natural k) {
    return make_expr({ShiftedCopyNode{std::move(a), m, h, n, k}});
}

namespace {

bool is_set_operation(const PointSetExpr& x) {
    auto k = x.kind();
    return k == PointSetExpr::Kind::Union || k == PointSetExpr::Kind::Intersection ||
           k == PointSetExpr::Kind::Difference;
}

std::string print_binary(const PointSetExpr& lhs, const PointSetExpr& rhs, char op) {
    // Set operations share one precedence level and associate to the left.
    std::string right = rhs.to_string();
    if (is_set_operation(rhs)) right = "(" + right + ")";
    return lhs.to_string() + " " + op + " " + right;
}

std::string print_factor(const PointSetExpr& x, bool right_operand) {
    std::string text = x.to_string();
    if (is_set_operation(x) || (right_operand && x.kind() == PointSetExpr::Kind::Product)) {
        return "(" + text + ")";
    }
    return text;
}

}  // namespace

std::string PointSetExpr::to_string() const {
    return std::visit(
        Overloaded{
            [](const ExplicitFiniteNode& n) { return n.tuples.to_string(); },
            [](const FullSpaceNode& n) { return "N^" + std::to_string(n.dimension); },
            [](const DiagonalNode& n) { return "diag(" + std::to_string(n.dimension) + ")"; },
            [](const MonotoneImageNode& n) { return n.map.to_string(); },
            [](const UnionNode& n) { return print_binary(n.lhs, n.rhs, '|'); },
            [](const IntersectionNode& n) { return print_binary(n.lhs, n.rhs, '&'); },
            [](const DifferenceNode& n) { return print_binary(n.lhs, n.rhs, '\\'); },
            [](const ProductNode& n) {
                return print_factor(n.lhs, false) + " * " + print_factor(n.rhs, true);
            },
            [](const PermuteNode& n) {
                return "perm(" + n.inner.to_string() + ", " + n.spec.to_string() + ")";
            },
            [](const ShiftedCopyNode& n) {
                return "copy(" + n.inner.to_string() + ", " + std::to_string(n.m) + ", " +
                       std::to_string(n.h) + ", " + std::to_string(n.n) + ", " +
                       std::to_string(n.k) + ")";
            },
        },
        node_->value);
}

// ---------------------------------------------------------------------------
// Certificates

ValidationResult validate(const PointSetExpr& x) {
    auto reject = [&x](std::string reason) {
        return ValidationResult{false, std::move(reason), x.to_string()};
    };
    return std::visit(
        Overloaded{
            [](const ExplicitFiniteNode&) { return ValidationResult{}; },
            [&](const FullSpaceNode& n) {
                return n.dimension == 0 ? reject("N^0 would contain the empty tuple")
                                        : ValidationResult{};
            },
            [&](const DiagonalNode& n) {
                return n.dimension == 0 ? reject("diag(0) would contain the empty tuple")
                                        : ValidationResult{};
            },
            [&](const MonotoneImageNode& n) {
                if (n.map.kind() == MonotoneMap::Kind::Affine && n.map.slope() == 0) {
                    return reject("affine map must be strictly increasing (slope >= 1)");
                }
                return ValidationResult{};
            },
            [](const auto& n) -> ValidationResult {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, PermuteNode> || std::is_same_v<T, ShiftedCopyNode>) {
                    return validate(n.inner);
                } else {
                    if (auto r = validate(n.lhs); !r) return r;
                    return validate(n.rhs);
                }
            },
        },
        x.node().value);
}

std::size_t finitary_bound(const PointSetExpr& x, Natural n) {
    return std::visit(
        Overloaded{
            [n](const ExplicitFiniteNode& node) {
                std::size_t best = 0;
                for (const auto& t : node.tuples) {
                    if (t.max_entry() <= n) best = std::max(best, t.length());
                }
                return best;
            },
            [](const FullSpaceNode& node) { return node.dimension; },
            [](const DiagonalNode& node) { return node.dimension; },
            [](const MonotoneImageNode&) { return std::size_t{1}; },
            [n](const UnionNode& node) {
                return std::max(finitary_bound(node.lhs, n), finitary_bound(node.rhs, n));
            },
            [n](const IntersectionNode& node) {
                return std::min(finitary_bound(node.lhs, n), finitary_bound(node.rhs, n));
            },
            [n](const DifferenceNode& node) { return finitary_bound(node.lhs, n); },
            [n](const ProductNode& node) {
                return finitary_bound(node.lhs, n) + finitary_bound(node.rhs, n);
            },
            [n](const PermuteNode& node) { return finitary_bound(node.inner, n); },
            [n](const ShiftedCopyNode& node) {
                return finitary_bound(node.inner, n) + static_cast<std::size_t>(node.h + node.k);
            },
        },
        x.node().value);
}

std::size_t max_arity(const PointSetExpr& x) {
    return std::visit(
        Overloaded{
            [](const ExplicitFiniteNode& node) {
                std::size_t best = 0;
                for (const auto& t : node.tuples) best = std::max(best, t.length());
                return best;
            },
            [](const FullSpaceNode& node) { return node.dimension; },
            [](const DiagonalNode& node) { return node.dimension; },
            [](const MonotoneImageNode&) { return std::size_t{1}; },
            [](const UnionNode& node) { return std::max(max_arity(node.lhs), max_arity(node.rhs)); },
            [](const IntersectionNode& node) {
                return std::min(max_arity(node.lhs), max_arity(node.rhs));
            },
            [](const DifferenceNode& node) { return max_arity(node.lhs); },
            [](const ProductNode& node) { return max_arity(node.lhs) + max_arity(node.rhs); },
            [](const PermuteNode& node) { return max_arity(node.inner); },
            [](const ShiftedCopyNode& node) {
                return max_arity(node.inner) + static_cast<std::size_t>(node.h + node.k);
            },
        },
        x.node().value);
}

std::optional<std::size_t> uniform_arity(const PointSetExpr& x) {
    using Result = std::optional<std::size_t>;
    return std::visit(
        Overloaded{
            [](const ExplicitFiniteNode& node) -> Result {
                if (node.tuples.empty()) return std::nullopt;
                std::size_t len = node.tuples.tuples().front().length();
                for (const auto& t : node.tuples) {
                    if (t.length() != len) return std::nullopt;
                }
                return len;
            },
            [](const FullSpaceNode& node) -> Result { return node.dimension; },
            [](const DiagonalNode& node) -> Result { return node.dimension; },
            [](const MonotoneImageNode&) -> Result { return 1; },
            [](const UnionNode& node) -> Result {
                auto a = uniform_arity(node.lhs);
                auto b = uniform_arity(node.rhs);
                if (a && b && *a == *b) return a;
                if (a && is_structurally_empty(node.rhs)) return a;
                if (b && is_structurally_empty(node.lhs)) return b;
                return std::nullopt;
            },
            [](const IntersectionNode& node) -> Result {
                if (auto a = uniform_arity(node.lhs)) return a;
                return uniform_arity(node.rhs);
            },
            [](const DifferenceNode& node) -> Result { return uniform_arity(node.lhs); },
            [](const ProductNode& node) -> Result {
                auto a = uniform_arity(node.lhs);
                auto b = uniform_arity(node.rhs);
                if (a && b) return *a + *b;
                return std::nullopt;
            },
            [](const PermuteNode& node) -> Result { return uniform_arity(node.inner); },
            [](const ShiftedCopyNode& node) -> Result {
                if (auto a = uniform_arity(node.inner)) {
                    return *a + static_cast<std::size_t>(node.h + node.k);
                }
                return std::nullopt;
            },
        },
        x.node().value);
}

bool is_structurally_empty(const PointSetExpr& x) {
    const auto* node = std::get_if<ExplicitFiniteNode>(&x.node().value);
    return node != nullptr && node->tuples.empty();
}

// ---------------------------------------------------------------------------
// Membership and restriction

namespace {

bool has_suffix(const Tuple& t, std::size_t prefix_len, Natural m, Natural h, Natural n,
                Natural k) {
    for (Natural i = 0; i < h; ++i) {
        if (t[prefix_len + i] != m) return false;
    }
    for (Natural i = 0; i < k; ++i) {
        if (t[prefix_len + h + i] != n) return false;
    }
    return true;
}

Tuple prefix(const Tuple& t, std::size_t len) {
    return Tuple(std::vector<Natural>(t.entries().begin(), t.entries().begin() + len));
}

Tuple suffix(const Tuple& t, std::size_t from) {
    return Tuple(std::vector<Natural>(t.entries().begin() + from, t.entries().end()));
}

}  // namespace

bool contains(const PointSetExpr& x, const Tuple& t) {
    return std::visit(
        Overloaded{
            [&t](const ExplicitFiniteNode& node) { return node.tuples.contains(t); },
            [&t](const FullSpaceNode& node) { return t.length() == node.dimension; },
            [&t](const DiagonalNode& node) {
                if (t.length() != node.dimension) return false;
                return std::all_of(t.entries().begin(), t.entries().end(),
                                   [&t](Natural v) { return v == t[0]; });
            },
            [&t](const MonotoneImageNode& node) {
                return t.length() == 1 && node.map.in_image(t[0]);
            },
            [&t](const UnionNode& node) { return contains(node.lhs, t) || contains(node.rhs, t); },
            [&t](const IntersectionNode& node) {
                return contains(node.lhs, t) && contains(node.rhs, t);
            },
            [&t](const DifferenceNode& node) {
                return contains(node.lhs, t) && !contains(node.rhs, t);
            },
            [&t](const ProductNode& node) {
                for (std::size_t split = 1; split < t.length(); ++split) {
                    if (contains(node.lhs, prefix(t, split)) && contains(node.rhs, suffix(t, split))) {
                        return true;
                    }
                }
                return false;
            },
            [&t](const PermuteNode& node) { return contains(node.inner, node.spec.apply_inverse(t)); },
            [&t](const ShiftedCopyNode& node) {
                const Natural tail = node.h + node.k;
                if (t.length() <= tail) return false;
                const std::size_t head = t.length() - static_cast<std::size_t>(tail);
                return has_suffix(t, head, node.m, node.h, node.n, node.k) &&
                       contains(node.inner, prefix(t, head));
            },
        },
        x.node().value);
}

namespace {

void append_powers(const std::vector<Natural>& alphabet, std::size_t dimension,
                   std::vector<Natural>& current, std::vector<Tuple>& out) {
    if (current.size() == dimension) {
        out.emplace_back(current);
        return;
    }
    for (Natural v : alphabet) {
        current.push_back(v);
        append_powers(alphabet, dimension, current, out);
        current.pop_back();
    }
}

}  // namespace

FinitePointSet restrict(const PointSetExpr& x, const FiniteSupport& f) {
    return std::visit(
        Overloaded{
            [&f](const ExplicitFiniteNode& node) {
                std::vector<Tuple> out;
                for (const auto& t : node.tuples) {
                    if (f.contains_all(t)) out.push_back(t);
                }
                return FinitePointSet(std::move(out));
            },
            [&f](const FullSpaceNode& node) {
                std::vector<Tuple> out;
                if (node.dimension == 0 || f.empty()) return FinitePointSet{};
                std::vector<Natural> current;
                append_powers(f.elements(), node.dimension, current, out);
                return FinitePointSet(std::move(out));
            },
            [&f](const DiagonalNode& node) {
                std::vector<Tuple> out;
                if (node.dimension == 0) return FinitePointSet{};
                for (Natural v : f.elements()) {
                    out.emplace_back(std::vector<Natural>(node.dimension, v));
                }
                return FinitePointSet(std::move(out));
            },
            [&f](const MonotoneImageNode& node) {
                std::vector<Tuple> out;
                for (Natural v : f.elements()) {
                    if (node.map.in_image(v)) out.push_back(Tuple{v});
                }
                return FinitePointSet(std::move(out));
            },
            [&f](const UnionNode& node) { return restrict(node.lhs, f) | restrict(node.rhs, f); },
            [&f](const IntersectionNode& node) {
                return restrict(node.lhs, f) & restrict(node.rhs, f);
            },
            [&f](const DifferenceNode& node) {
                return restrict(node.lhs, f) - restrict(node.rhs, f);
            },
            [&f](const ProductNode& node) {
                const auto left = restrict(node.lhs, f);
                const auto right = restrict(node.rhs, f);
                std::vector<Tuple> out;
                out.reserve(left.size() * right.size());
                for (const auto& a : left) {
                    for (const auto& b : right) out.push_back(concatenate(a, b));
                }
                return FinitePointSet(std::move(out));
            },
            [&f](const PermuteNode& node) {
                std::vector<Tuple> out;
                for (const auto& t : restrict(node.inner, f)) out.push_back(node.spec.apply(t));
                return FinitePointSet(std::move(out));
            },
            [&f](const ShiftedCopyNode& node) {
                if ((node.h > 0 && !f.contains(node.m)) || (node.k > 0 && !f.contains(node.n))) {
                    return FinitePointSet{};
                }
                std::vector<Natural> tail(static_cast<std::size_t>(node.h), node.m);
                tail.insert(tail.end(), static_cast<std::size_t>(node.k), node.n);
                std::vector<Tuple> out;
                for (const auto& t : restrict(node.inner, f)) {
                    std::vector<Natural> entries = t.entries();
                    entries.insert(entries.end(), tail.begin(), tail.end());
                    out.emplace_back(std::move(entries));
                }
                return FinitePointSet(std::move(out));
            },
        },
        x.node().value);
}

// ---------------------------------------------------------------------------
// Multipliability

std::string Collision::to_string() const {
    return concatenation.to_string() + " from " + first_left.to_string() + "*" +
           first_right.to_string() + " and " + second_left.to_string() + "*" +
           second_right.to_string();
}

std::optional<Collision> find_collision(const PointSetExpr& x, const PointSetExpr& y,
                                        const FiniteSupport& f) {
    const auto left = restrict(x, f);
    const auto right = restrict(y, f);
    std::map<Tuple, std::pair<const Tuple*, const Tuple*>> seen;
    for (const auto& a : left) {
        for (const auto& b : right) {
            auto joined = concatenate(a, b);
            auto [it, inserted] = seen.try_emplace(joined, &a, &b);
            if (!inserted) {
                return Collision{std::move(joined), *it->second.first, *it->second.second, a, b};
            }
        }
    }
    return std::nullopt;
}

bool is_multipliable_on(const PointSetExpr& x, const PointSetExpr& y, const FiniteSupport& f) {
    return !find_collision(x, y, f).has_value();
}

Multipliability is_multipliable(const PointSetExpr& x, const PointSetExpr& y,
                                std::size_t horizon) {
    Multipliability result;
    if (is_structurally_empty(x) || is_structurally_empty(y) || uniform_arity(x) ||
        uniform_arity(y)) {
        result.status = Multipliability::Status::True;
        result.structural = true;
        return result;
    }
    // Injectivity on X_F x Y_F implies injectivity on every X_E x Y_E, E ⊆ F,
    // so checking the largest window of the chain {0..k} suffices.
    result.horizon = horizon;
    if (auto witness = find_collision(x, y, FiniteSupport::interval(0, horizon))) {
        result.status = Multipliability::Status::False;
        result.witness = std::move(witness);
    } else {
        result.status = Multipliability::Status::Unknown;
    }
    return result;
}

}  // namespace numerosity
