#include "numerosity/dsl.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <string>
#include <vector>

#include "numerosity/error.hpp"

namespace numerosity {

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    PointSetExpr parse_all() {
        auto result = expr();
        skip_space();
        if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
        return result;
    }

    PermutationSpec parse_spec_all() {
        auto result = spec();
        skip_space();
        if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
        return result;
    }

private:
    PointSetExpr expr() {
        auto lhs = term();
        while (true) {
            skip_space();
            const char op = peek();
            if (op != '|' && op != '&' && op != '\\') return lhs;
            ++pos_;
            auto rhs = term();
            if (op == '|') {
                lhs = set_union(std::move(lhs), std::move(rhs));
            } else if (op == '&') {
                lhs = set_intersection(std::move(lhs), std::move(rhs));
            } else {
                lhs = set_difference(std::move(lhs), std::move(rhs));
            }
        }
    }

    PointSetExpr term() {
        auto lhs = atom();
        while (true) {
            skip_space();
            if (peek() != '*') return lhs;
            ++pos_;
            lhs = product(std::move(lhs), atom());
        }
    }

    PointSetExpr atom() {
        skip_space();
        if (peek() == '{') return explicit_set();
        if (peek() == '(') {
            ++pos_;
            auto inner = expr();
            expect(')');
            return inner;
        }
        if (accept_word("N")) {
            expect('^');
            return PointSetExpr::full_space(static_cast<std::size_t>(integer()));
        }
        if (accept_word("diag")) {
            expect('(');
            const auto d = integer();
            expect(')');
            return PointSetExpr::diagonal(static_cast<std::size_t>(d));
        }
        if (accept_word("evens")) return PointSetExpr::evens();
        if (accept_word("odds")) return PointSetExpr::odds();
        if (accept_word("squares")) return PointSetExpr::squares();
        if (accept_word("affine")) {
            expect('(');
            const auto a = integer();
            expect(',');
            const auto b = integer();
            expect(')');
            return PointSetExpr::monotone_image(MonotoneMap::affine(a, b));
        }
        if (accept_word("perm")) {
            expect('(');
            auto inner = expr();
            expect(',');
            auto s = spec();
            expect(')');
            return permute_transform(std::move(inner), std::move(s));
        }
        if (accept_word("copy")) {
            expect('(');
            auto inner = expr();
            Natural args[4];
            for (auto& arg : args) {
                expect(',');
                arg = integer();
            }
            expect(')');
            return shifted_copy(std::move(inner), args[0], args[1], args[2], args[3]);
        }
        fail(at_end() ? "unexpected end of input" : "expected a set expression");
    }

    PointSetExpr explicit_set() {
        expect('{');
        std::vector<Tuple> tuples;
        skip_space();
        if (peek() == '}') {
            ++pos_;
            return PointSetExpr::finite({});
        }
        while (true) {
            tuples.push_back(tuple());
            skip_space();
            if (peek() == '}') {
                ++pos_;
                return PointSetExpr::finite(std::move(tuples));
            }
            expect(',');
        }
    }

    Tuple tuple() {
        expect('(');
        std::vector<Natural> entries{integer()};
        while (true) {
            skip_space();
            if (peek() == ')') {
                ++pos_;
                return Tuple(std::move(entries));
            }
            expect(',');
            entries.push_back(integer());
        }
    }

    PermutationSpec spec() {
        skip_space();
        if (accept_word("id")) return PermutationSpec::identity();
        if (accept_word("rev")) return PermutationSpec::reversal();
        if (peek() != '[') fail("expected 'id', 'rev' or '[...]'");
        std::map<std::size_t, std::vector<std::size_t>> perms;
        while (true) {
            skip_space();
            if (peek() != '[') break;
            const std::size_t start = pos_;
            ++pos_;
            std::vector<std::size_t> perm;
            while (true) {
                skip_space();
                if (peek() == ']') {
                    ++pos_;
                    break;
                }
                perm.push_back(static_cast<std::size_t>(integer()));
            }
            const std::size_t arity = perm.size();
            if (!perms.emplace(arity, std::move(perm)).second) {
                throw ParseError("two permutations given for arity " + std::to_string(arity), start);
            }
        }
        try {
            return PermutationSpec::from_arities(std::move(perms));
        } catch (const PreconditionError& e) {
            throw ParseError(e.what(), pos_);
        }
    }

    Natural integer() {
        skip_space();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        Natural value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc{}) throw ParseError("integer out of range", start);
        return value;
    }

    bool accept_word(std::string_view word) {
        skip_space();
        if (text_.substr(pos_, word.size()) != word) return false;
        const std::size_t end = pos_ + word.size();
        if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
        pos_ = end;
        return true;
    }

    void expect(char c) {
        skip_space();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

PointSetExpr parse_expr(std::string_view text) {
    auto x = ExprParser(text).parse_all();
    if (auto v = validate(x); !v) {
        throw Error("invalid expression: " + v.reason + " in '" + v.subexpression + "'");
    }
    return x;
}

PermutationSpec parse_permutation_spec(std::string_view text) {
    return ExprParser(text).parse_spec_all();
}

}  // namespace numerosity
