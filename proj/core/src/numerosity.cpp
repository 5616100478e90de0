#include "numerosity/numerosity.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace numerosity {

namespace {

SignClass sign_of(const BigInt& v) {
    if (v < 0) return SignClass::Negative;
    if (v > 0) return SignClass::Positive;
    return SignClass::Zero;
}

// Eventual sign on the given (increasing) indices; `window_start` is the first
// index that must agree.
Classification eventual_sign(std::span<const BigInt> d, const std::vector<std::size_t>& indices,
                             std::size_t window_start) {
    std::optional<SignClass> sign;
    for (std::size_t k : indices) {
        if (k < window_start) continue;
        const SignClass s = sign_of(d[k]);
        if (sign && *sign != s) return {};
        sign = s;
    }
    if (!sign) return {};
    std::size_t tail = indices.back();
    for (auto it = indices.rbegin(); it != indices.rend() && sign_of(d[*it]) == *sign; ++it) {
        tail = *it;
    }
    return Classification{*sign, tail};
}

std::size_t window_start(std::size_t size, std::size_t window) {
    const std::size_t last = size - 1;
    return last >= window ? last - window : 0;
}

struct Registry {
    std::mutex mutex;
    std::map<std::string, OracleFactory, std::less<>> factories;

    Registry() {
        factories.emplace("eventual-sign", [](std::string_view arg, std::size_t window)
                                               -> std::shared_ptr<const UltrafilterOracle> {
            if (!arg.empty()) throw Error("eventual-sign takes no argument");
            return std::make_shared<EventualSignOracle>(window);
        });
        factories.emplace("eventual-sign-mod", [](std::string_view arg, std::size_t window)
                                                   -> std::shared_ptr<const UltrafilterOracle> {
            const auto colon = arg.find(':');
            if (colon == std::string_view::npos) {
                throw Error("eventual-sign-mod expects <modulus>:<residue>");
            }
            try {
                const auto modulus = std::stoull(std::string(arg.substr(0, colon)));
                const auto residue = std::stoull(std::string(arg.substr(colon + 1)));
                return std::make_shared<ResidueOracle>(modulus, residue, window);
            } catch (const std::logic_error&) {
                throw Error("eventual-sign-mod expects <modulus>:<residue>");
            }
        });
    }
};

Registry& registry() {
    static Registry instance;
    return instance;
}

}  // namespace

Classification EventualSignOracle::classify(std::span<const BigInt> d) const {
    if (d.empty()) return {};
    std::vector<std::size_t> indices(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) indices[k] = k;
    return eventual_sign(d, indices, window_start(d.size(), window_));
}

ResidueOracle::ResidueOracle(std::size_t modulus, std::size_t residue, std::size_t window)
    : modulus_(modulus), residue_(residue), window_(window) {
    if (modulus_ == 0 || residue_ >= modulus_) {
        throw PreconditionError("residue oracle needs 0 <= residue < modulus");
    }
}

std::string ResidueOracle::name() const {
    return "eventual-sign-mod:" + std::to_string(modulus_) + ":" + std::to_string(residue_);
}

Classification ResidueOracle::classify(std::span<const BigInt> d) const {
    std::vector<std::size_t> indices;
    for (std::size_t k = residue_; k < d.size(); k += modulus_) indices.push_back(k);
    if (indices.empty()) return {};
    return eventual_sign(d, indices, window_start(d.size(), window_));
}

std::shared_ptr<const UltrafilterOracle> make_oracle(std::string_view name, std::size_t window) {
    const auto colon = name.find(':');
    const std::string_view key = name.substr(0, colon);
    const std::string_view arg = colon == std::string_view::npos ? "" : name.substr(colon + 1);
    OracleFactory factory;
    {
        auto& reg = registry();
        std::lock_guard lock(reg.mutex);
        auto it = reg.factories.find(key);
        if (it == reg.factories.end()) throw Error("unknown oracle '" + std::string(name) + "'");
        factory = it->second;
    }
    return factory(arg, window);
}

void register_oracle(std::string name, OracleFactory factory) {
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    reg.factories.insert_or_assign(std::move(name), std::move(factory));
}

// ---------------------------------------------------------------------------
// Numerosity

Numerosity::Numerosity(std::vector<BigInt> sequence, Chain chain,
                       std::optional<PointSetExpr> source)
    : sequence_(std::move(sequence)), chain_(std::move(chain)), source_(std::move(source)) {
    if (sequence_.empty()) throw PreconditionError("a numerosity needs at least one stage");
}

Numerosity Numerosity::of(const PointSetExpr& x, const Chain& chain, std::size_t horizon) {
    const auto counts = counting_sequence(x, chain, horizon);
    return Numerosity(std::vector<BigInt>(counts.begin(), counts.end()), chain, x);
}

Numerosity Numerosity::from_sequence(std::vector<BigInt> sequence, Chain chain) {
    return Numerosity(std::move(sequence), std::move(chain), std::nullopt);
}

Numerosity Numerosity::zero(const Chain& chain, std::size_t horizon) {
    return of(PointSetExpr::empty(), chain, horizon);
}

Numerosity Numerosity::one(const Chain& chain, std::size_t horizon) {
    return of(PointSetExpr::finite({Tuple{chain.at(0)}}), chain, horizon);
}

bool Numerosity::is_well_formed() const {
    return std::is_sorted(sequence_.begin(), sequence_.end());
}

std::string_view to_string(Comparison c) {
    switch (c) {
        case Comparison::Less: return "LESS";
        case Comparison::Equal: return "EQUAL";
        case Comparison::Greater: return "GREATER";
        case Comparison::Undecided: return "UNDECIDED";
    }
    return "UNDECIDED";
}

std::string ComparisonResult::to_string() const {
    std::string out(numerosity::to_string(outcome));
    if (tail_index) out += " tail=" + std::to_string(*tail_index);
    return out;
}

namespace {

void require_compatible(const Numerosity& x, const Numerosity& y) {
    if (!(x.chain() == y.chain()) || x.horizon() != y.horizon()) {
        throw PreconditionError("numerosities use different chains or horizons (" +
                                x.chain().to_string() + "/" + std::to_string(x.horizon()) +
                                " vs " + y.chain().to_string() + "/" +
                                std::to_string(y.horizon()) + ")");
    }
}

}  // namespace

ComparisonResult compare(const Numerosity& x, const Numerosity& y, const UltrafilterOracle& oracle) {
    require_compatible(x, y);
    std::vector<BigInt> d(x.sequence().size());
    bool all_zero = true;
    for (std::size_t k = 0; k < d.size(); ++k) {
        d[k] = x.sequence()[k] - y.sequence()[k];
        all_zero = all_zero && d[k] == 0;
    }
    if (all_zero) return {Comparison::Equal, 0};
    const auto c = oracle.classify(d);
    switch (c.sign) {
        case SignClass::Negative: return {Comparison::Less, c.tail_index};
        case SignClass::Zero: return {Comparison::Equal, c.tail_index};
        case SignClass::Positive: return {Comparison::Greater, c.tail_index};
        case SignClass::Undecided: break;
    }
    return {Comparison::Undecided, std::nullopt};
}

NotMultipliableError::NotMultipliableError(Collision witness)
    : PreconditionError("sets are not multipliable: " + witness.to_string()),
      witness_(std::move(witness)) {}

Numerosity add(const Numerosity& x, const Numerosity& y) {
    require_compatible(x, y);
    std::vector<BigInt> sum(x.sequence().size());
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = x.sequence()[k] + y.sequence()[k];
    if (!x.source() || !y.source()) return Numerosity::from_sequence(std::move(sum), x.chain());

    const PointSetExpr& a = *x.source();
    const PointSetExpr& b = *y.source();
    const auto top = x.chain().stage(x.horizon());
    // Restriction is monotone, so disjointness on the last stage covers all
    // earlier ones.
    std::optional<PointSetExpr> realized;
    if ((restrict(a, top) & restrict(b, top)).empty()) {
        realized = set_union(a, b);
    } else {
        // B x {pi(0)}^h with h past the longest tuple of A: disjoint from A and
        // counted like B on every stage, since pi(0) lies in every stage.
        const Natural anchor = x.chain().at(0);
        const auto h = static_cast<Natural>(max_arity(a) + 1);
        realized = set_union(a, shifted_copy(b, anchor, h, anchor, 0));
    }
    auto result = Numerosity::of(*realized, x.chain(), x.horizon());
    if (result.sequence() != sum) {
        throw std::logic_error("realized sum " + realized->to_string() +
                               " does not count as the pointwise sum");
    }
    return result;
}

Numerosity mul(const Numerosity& x, const Numerosity& y) {
    require_compatible(x, y);
    std::vector<BigInt> prod(x.sequence().size());
    for (std::size_t k = 0; k < prod.size(); ++k) prod[k] = x.sequence()[k] * y.sequence()[k];
    if (!x.source() || !y.source()) return Numerosity::from_sequence(std::move(prod), x.chain());

    const PointSetExpr& a = *x.source();
    const PointSetExpr& b = *y.source();
    const auto verdict = is_multipliable(a, b);
    if (verdict.status == Multipliability::Status::False) {
        throw NotMultipliableError(*verdict.witness);
    }
    if (verdict.status == Multipliability::Status::Unknown) {
        if (auto witness = find_collision(a, b, x.chain().stage(x.horizon()))) {
            throw NotMultipliableError(std::move(*witness));
        }
    }
    auto result = Numerosity::of(product(a, b), x.chain(), x.horizon());
    if (result.sequence() != prod) {
        throw std::logic_error("product of multipliable sets does not count multiplicatively");
    }
    return result;
}

Numerosity sub_partial(const Numerosity& c, const Numerosity& a) {
    require_compatible(c, a);
    if (c.source() && a.source()) {
        const auto top = c.chain().stage(c.horizon());
        if (!restrict(*a.source(), top).is_subset_of(restrict(*c.source(), top))) {
            throw PreconditionError(a.source()->to_string() + " is not a subset of " +
                                    c.source()->to_string() + " on " + top.to_string());
        }
    }
    std::vector<BigInt> diff(c.sequence().size());
    for (std::size_t k = 0; k < diff.size(); ++k) {
        diff[k] = c.sequence()[k] - a.sequence()[k];
        if (diff[k] < 0) {
            throw PreconditionError("negative difference at stage " + std::to_string(k) +
                                    ": subtrahend is not a subset");
        }
    }
    if (!c.source() || !a.source()) return Numerosity::from_sequence(std::move(diff), c.chain());
    return Numerosity::of(set_difference(*c.source(), *a.source()), c.chain(), c.horizon());
}

FapResult fap_check(const PointSetExpr& x, const PointSetExpr& y, std::size_t horizon) {
    FapResult result;
    CountingFunction cx(x);
    CountingFunction cy(y);
    for (const auto& f : subsets_of(FiniteSupport::interval(0, horizon))) {
        ++result.subsets_checked;
        if (cx(f) > cy(f)) {
            result.holds = false;
            result.witness = f;
            return result;
        }
    }
    return result;
}

CountMismatchError::CountMismatchError(std::size_t stage, std::uint64_t x_count,
                                       std::uint64_t y_count)
    : PreconditionError("counts differ at k=" + std::to_string(stage) + " (" +
                        std::to_string(x_count) + " vs " + std::to_string(y_count) + ")"),
      stage_(stage) {}

std::optional<Tuple> Congruence::image(const Tuple& x) const {
    for (const auto& [from, to] : pairs) {
        if (from == x) return to;
    }
    return std::nullopt;
}

Congruence build_congruence(const PointSetExpr& x, const PointSetExpr& y, const Chain& chain,
                            std::size_t horizon) {
    Congruence tau;
    FinitePointSet prev_x;
    FinitePointSet prev_y;
    for (std::size_t k = 0; k <= horizon; ++k) {
        const auto stage = chain.stage(k);
        auto xs = restrict(x, stage);
        auto ys = restrict(y, stage);
        if (xs.size() != ys.size()) throw CountMismatchError(k, xs.size(), ys.size());
        const auto new_x = xs - prev_x;
        const auto new_y = ys - prev_y;
        for (std::size_t i = 0; i < new_x.size(); ++i) {
            tau.pairs.emplace_back(new_x.tuples()[i], new_y.tuples()[i]);
            tau.layer.push_back(k);
        }
        prev_x = std::move(xs);
        prev_y = std::move(ys);
    }
    return tau;
}

bool verify_congruence(const Congruence& tau, const PointSetExpr& x, const PointSetExpr& y,
                       const Chain& chain, std::size_t horizon) {
    std::map<Tuple, Tuple> table;
    std::vector<Tuple> images;
    for (const auto& [from, to] : tau.pairs) {
        if (!table.emplace(from, to).second) return false;
        images.push_back(to);
    }
    if (FinitePointSet(images).size() != images.size()) return false;
    for (std::size_t k = 0; k <= horizon; ++k) {
        const auto stage = chain.stage(k);
        std::vector<Tuple> mapped;
        for (const auto& t : restrict(x, stage)) {
            auto it = table.find(t);
            if (it == table.end()) return false;
            mapped.push_back(it->second);
        }
        if (!(FinitePointSet(std::move(mapped)) == restrict(y, stage))) return false;
    }
    return true;
}

}  // namespace numerosity
