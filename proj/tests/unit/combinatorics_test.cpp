#include <gtest/gtest.h>

#include <algorithm>

#include "numerosity/combinatorics.hpp"
#include "numerosity/error.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace numerosity;

TEST(Tuple, RejectsEmpty) {
    EXPECT_THROW(Tuple(std::vector<Natural>{}), PreconditionError);
}

TEST(Tuple, OrdersByLengthThenLexicographically) {
    EXPECT_LT(Tuple({5}), Tuple({0, 0}));
    EXPECT_LT(Tuple({0, 1}), Tuple({1, 0}));
    EXPECT_EQ(Tuple({1, 2}).to_string(), "(1,2)");
    EXPECT_EQ(concatenate(Tuple{1, 2}, Tuple{3}), (Tuple{1, 2, 3}));
}

TEST(FiniteSupport, CanonicalForm) {
    FiniteSupport f{3, 1, 3, 0};
    EXPECT_EQ(f.elements(), (std::vector<Natural>{0, 1, 3}));
    EXPECT_EQ(f.to_string(), "{0,1,3}");
    EXPECT_EQ(f.to_csv_field(), "{0 1 3}");
    EXPECT_TRUE(FiniteSupport({1}).is_subset_of(f));
    EXPECT_TRUE(FiniteSupport::interval(3, 2).empty());
    EXPECT_EQ(f.with(2), FiniteSupport::interval(0, 3));
}

TEST(MonomialOfTuple, Examples) {
    EXPECT_EQ(monomial_of_tuple({1, 2}), (Monomial{{1, 1}, {2, 1}}));
    EXPECT_EQ(monomial_of_tuple({2, 1}), (Monomial{{1, 1}, {2, 1}}));
    EXPECT_EQ(monomial_of_tuple({0, 0, 3}), (Monomial{{0, 2}, {3, 1}}));
    EXPECT_EQ(monomial_of_tuple({0, 0, 3}).degree(), 3u);
}

TEST(Monomial, DropsZeroExponentsAndPrints) {
    EXPECT_EQ((Monomial{{0, 2}, {1, 0}, {3, 1}}), (Monomial{{0, 2}, {3, 1}}));
    EXPECT_EQ((Monomial{{0, 2}, {3, 1}}).to_string(), "t0^2*t3");
    EXPECT_EQ(Monomial{}.to_string(), "1");
    EXPECT_EQ(Monomial::variable(1) * Monomial::variable(1), Monomial::variable(1, 2));
}

TEST(TupleCount, Examples) {
    EXPECT_EQ(tuple_count_of_monomial(Monomial{{1, 1}, {2, 1}}), 2);
    EXPECT_EQ(tuple_count_of_monomial(Monomial{{0, 2}}), 1);
    EXPECT_EQ(tuple_count_of_monomial(Monomial{{0, 1}, {1, 1}, {2, 1}}), 6);
    try {
        tuple_count_of_monomial(Monomial{});
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("no tuple has length zero"), std::string::npos);
    }
}

TEST(TupleCount, AgreesWithEnumerationUpToDegreeSeven) {
    // All monomials over {0..5} with degree <= 7 is a large family; walk the
    // ones with support size <= 3, which covers every exponent pattern.
    TruncationWindow w{FiniteSupport::interval(0, 5), 7};
    std::size_t checked = 0;
    for (const auto& m : gen::monomials(w, 7)) {
        if (m.is_constant() || m.support().size() > 3) continue;
        ASSERT_EQ(tuple_count_of_monomial(m), oracle::tuples_with_monomial(m)) << m.to_string();
        ++checked;
    }
    EXPECT_GT(checked, 500u);
}

TEST(TupleCount, LargeDegreeIsExact) {
    // 30!/(10!)^3 does not fit in 64 bits.
    const Monomial m{{0, 10}, {1, 10}, {2, 10}};
    EXPECT_EQ(tuple_count_of_monomial(m), BigInt("5550996791340"));
    EXPECT_EQ(factorial(25), BigInt("15511210043330985984000000"));
}

TEST(MonomialOfTuple, PermutationInvariant) {
    gen::Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        auto t = gen::tuple(rng, 6, 4);
        auto entries = t.entries();
        std::shuffle(entries.begin(), entries.end(), rng);
        EXPECT_EQ(monomial_of_tuple(t), monomial_of_tuple(Tuple(entries)));
        EXPECT_EQ(monomial_of_tuple(t).degree(), t.length());
    }
}

TEST(SquarefreeOf, Examples) {
    EXPECT_EQ(squarefree_of(Monomial{{0, 2}, {3, 1}}), (Monomial{{0, 1}, {3, 1}}));
    EXPECT_EQ(squarefree_of(Monomial{{1, 1}}), (Monomial{{1, 1}}));
    EXPECT_EQ(squarefree_of(Monomial{}), Monomial{});
}

TEST(SquarefreeOf, IdempotentAndSupportPreserving) {
    TruncationWindow w{FiniteSupport::interval(0, 3), 3};
    for (const auto& m : gen::monomials(w, 12)) {
        const auto s = squarefree_of(m);
        EXPECT_EQ(squarefree_of(s), s);
        EXPECT_EQ(s.support(), m.support());
        EXPECT_TRUE(s.is_squarefree());
    }
}

TEST(SubsetsOf, Examples) {
    EXPECT_EQ(subsets_of(FiniteSupport{0, 1}),
              (std::vector<FiniteSupport>{{}, {0}, {1}, {0, 1}}));
    EXPECT_EQ(subsets_of(FiniteSupport{}), (std::vector<FiniteSupport>{{}}));
    EXPECT_EQ(subsets_of(FiniteSupport{2}), (std::vector<FiniteSupport>{{}, {2}}));
}

TEST(SubsetsOf, OrderAndCompleteness) {
    const auto all = subsets_of(FiniteSupport::interval(0, 6));
    ASSERT_EQ(all.size(), 128u);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
    EXPECT_EQ(all[8], (FiniteSupport{0, 1}));
}

TEST(SubsetsOf, RefusesLargeSupport) {
    try {
        subsets_of(FiniteSupport::interval(0, 20));
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("support too large for subset enumeration"), std::string::npos);
    }
    EXPECT_EQ(subsets_of(FiniteSupport::interval(0, 2), 3).size(), 8u);
}
