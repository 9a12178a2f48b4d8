#include <gtest/gtest.h>

#include <stdexcept>

#include "otype/error.hpp"
#include "otype/random.hpp"
#include "otype/wpo_term.hpp"

using namespace otype;

namespace {

Ordinal O(const char* s) { return Ordinal::parse(s); }
WpoTerm T(const char* s) { return WpoTerm::parse(s); }
WpoTerm chain(std::size_t n) { return WpoTerm::fin(FinitePoset::chain(n)); }
WpoTerm antichain(std::size_t n) { return WpoTerm::fin(FinitePoset::antichain(n)); }

// Random finite term, small enough to expand and count exactly.
WpoTerm finite_term(Rng& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 4);
    switch (pick(rng)) {
        case 0:
            return WpoTerm::fin(gen::poset(rng, 0, 3));
        case 1:
            return WpoTerm::ord(Ordinal(std::uniform_int_distribution<int>(0, 3)(rng)));
        case 2:
            return WpoTerm::disjoint_union(finite_term(rng, depth - 1), finite_term(rng, depth - 1));
        case 3:
            return WpoTerm::lex_sum(finite_term(rng, depth - 1), finite_term(rng, depth - 1));
        default:
            return WpoTerm::lex_product(finite_term(rng, depth - 1), finite_term(rng, depth - 1));
    }
}

}  // namespace

TEST(OrderType, Leaves) {
    EXPECT_EQ(o_of(WpoTerm()), Ordinal(0));
    EXPECT_EQ(o_of(chain(3)), Ordinal(3));
    EXPECT_EQ(o_of(antichain(4)), Ordinal(4));
    EXPECT_EQ(o_of(WpoTerm::ord(O("w^2+3"))), O("w^2+3"));
}

TEST(OrderType, SumAndUnion) {
    const auto w = WpoTerm::ord(Ordinal::omega());
    EXPECT_EQ(o_of(WpoTerm::disjoint_union(w, chain(1))), O("w+1"));
    EXPECT_EQ(o_of(WpoTerm::disjoint_union(chain(1), w)), O("w+1"));
    EXPECT_EQ(o_of(WpoTerm::lex_sum(chain(1), w)), O("w"));
    EXPECT_EQ(o_of(WpoTerm::lex_sum(w, chain(3))), O("w+3"));
    EXPECT_EQ(o_of(T("ord(w) (+) ord(w^2)")), O("w^2+w"));
}

TEST(OrderType, Products) {
    EXPECT_EQ(o_of(T("ord(w+1) . antichain(2)")), O("w*2+2"));
    EXPECT_EQ(o_of(T("ord(w) . antichain(3)")), O("w*3"));
    EXPECT_EQ(o_of(T("ord(w) . ord(w)")), O("w^2"));
    EXPECT_EQ(o_of(T("chain(3) . chain(2)")), Ordinal(6));
    EXPECT_EQ(o_of(T("antichain(2) . ord(w)")), O("w"));
    // N-shaped index: delta = 0, m = 4, k = 2
    EXPECT_EQ(o_of(T("ord(w+1) . poset(4; 0<2, 1<2, 1<3)")), O("w*4+2"));
}

TEST(OrderType, ProductBeatsNaiveProduct) {
    const Ordinal base = O("w+1");
    const Ordinal real = o_of(T("ord(w+1) . antichain(2)"));
    EXPECT_GT(real, base * Ordinal(2));
    EXPECT_EQ(base * Ordinal(2), O("w*2+1"));
}

TEST(MaxCount, Examples) {
    EXPECT_EQ(max_count(WpoTerm()), 0);
    EXPECT_EQ(max_count(antichain(3)), 3);
    EXPECT_EQ(max_count(WpoTerm::ord(O("w"))), 0);
    EXPECT_EQ(max_count(WpoTerm::ord(O("w+2"))), 1);
    EXPECT_EQ(max_count(T("ord(w) + chain(3)")), 1);
    EXPECT_EQ(max_count(T("chain(2) + ord(w)")), 0);
    EXPECT_EQ(max_count(T("antichain(2) + ord(0)")), 2);
    EXPECT_EQ(max_count(T("antichain(2) (+) ord(w+1)")), 3);
    EXPECT_EQ(max_count(T("antichain(2) . antichain(3)")), 6);
}

TEST(DeltaMK, Examples) {
    EXPECT_EQ(delta_mk(T("ord(w) + chain(3)")), (DeltaMK{O("w"), 3, 1}));
    EXPECT_EQ(delta_mk(T("ord(w) (+) chain(1)")), (DeltaMK{O("w"), 1, 1}));
    EXPECT_EQ(delta_mk(T("antichain(3)")), (DeltaMK{Ordinal(0), 3, 3}));
    EXPECT_EQ(delta_mk(T("ord(w^2)")), (DeltaMK{O("w^2"), 0, 0}));
    EXPECT_EQ(delta_mk(WpoTerm()), (DeltaMK{Ordinal(0), 0, 0}));
}

TEST(DeltaMK, Validity) {
    EXPECT_TRUE((DeltaMK{O("w"), 3, 1}).valid());
    EXPECT_TRUE((DeltaMK{Ordinal(0), 0, 0}).valid());
    EXPECT_FALSE((DeltaMK{O("w+1"), 1, 1}).valid());
    EXPECT_FALSE((DeltaMK{Ordinal(0), 1, 2}).valid());
    EXPECT_FALSE((DeltaMK{Ordinal(0), 2, 0}).valid());
    EXPECT_FALSE((DeltaMK{Ordinal(0), 0, 1}).valid());
}

TEST(DeltaMK, HoldsOnRandomTerms) {
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        const auto t = gen::term(rng);
        const auto d = delta_mk(t);
        EXPECT_TRUE(d.valid()) << t.str();
        EXPECT_EQ(d.order_type(), o_of(t)) << t.str();
    }
}

TEST(Vialard, Examples) {
    EXPECT_EQ(vialard(Ordinal(3), {Ordinal(0), 2, 1}), Ordinal(6));
    EXPECT_EQ(vialard(O("w+1"), {Ordinal(0), 2, 2}), O("w*2+2"));
    EXPECT_EQ(vialard(O("w"), {O("w"), 0, 0}), O("w^2"));
    EXPECT_EQ(vialard(Ordinal(0), {O("w"), 3, 1}), Ordinal(0));
    EXPECT_EQ(vialard(O("w"), {Ordinal(0), 0, 0}), Ordinal(0));
}

TEST(Vialard, ExpandedExamples) {
    EXPECT_EQ(vialard_expanded(O("w^2*2+w"), {O("w"), 1, 1}), O("w^3+w^2*2+w"));
    EXPECT_EQ(vialard(O("w^2*2+w"), {O("w"), 1, 1}), O("w^3+w^2*2+w"));
    EXPECT_EQ(vialard_expanded(Ordinal(5), {Ordinal(0), 3, 2}), Ordinal(15));
    EXPECT_EQ(vialard(Ordinal(5), {Ordinal(0), 3, 2}), Ordinal(15));
}

TEST(Vialard, RejectsInvalidIndex) {
    EXPECT_THROW(vialard(O("w"), {O("w+1"), 1, 1}), DomainError);
    EXPECT_THROW(vialard(O("w"), {Ordinal(0), 1, 2}), DomainError);
    EXPECT_THROW(vialard_expanded(O("w"), {Ordinal(0), 2, 0}), DomainError);
}

TEST(Vialard, FormsAgree) {
    Rng rng(12);
    for (int i = 0; i < 1000; ++i) {
        const Ordinal base = gen::ordinal(rng);
        const DeltaMK d = gen::delta_mk(rng);
        EXPECT_EQ(vialard(base, d), vialard_expanded(base, d)) << base << " " << d.delta;
    }
}

TEST(FiniteTerms, OrderTypeIsCardinality) {
    Rng rng(13);
    for (int i = 0; i < 400; ++i) {
        const auto t = finite_term(rng, 3);
        ASSERT_TRUE(is_finite_term(t));
        const FinitePoset p = expand_finite(t);
        EXPECT_EQ(o_of(t), Ordinal(p.size())) << t.str();
        EXPECT_EQ(max_count(t), maximal_elements(p).size()) << t.str();
    }
}

TEST(FiniteTerms, ExpandExamples) {
    EXPECT_EQ(expand_finite(T("chain(2) + chain(2)")), FinitePoset::chain(4));
    EXPECT_EQ(expand_finite(T("chain(2) (+) chain(1)")), FinitePoset::from_edges(3, {{0, 1}}));
    EXPECT_EQ(expand_finite(T("ord(3)")), FinitePoset::chain(3));
    EXPECT_EQ(expand_finite(T("chain(2) . antichain(2)")),
              lex_product(FinitePoset::chain(2), FinitePoset::antichain(2)));
    EXPECT_FALSE(is_finite_term(T("chain(2) + ord(w)")));
    EXPECT_THROW(expand_finite(T("ord(w)")), DomainError);
    EXPECT_THROW(expand_finite(T("antichain(100) . antichain(100)")), ResourceError);
}

TEST(ProofTrace, Examples) {
    const FinitePoset n = FinitePoset::from_edges(4, {{0, 2}, {1, 2}, {1, 3}});
    const auto tr = proof_trace(O("w+1"), n);
    EXPECT_EQ(tr.rule, ProofTrace::Rule::MaxSplit);
    EXPECT_EQ(tr.size, 4u);
    EXPECT_EQ(tr.k, 2u);
    EXPECT_EQ(tr.value, O("w*4+2"));
    ASSERT_EQ(tr.children.size(), 2u);

    const auto c = proof_trace(O("w"), FinitePoset::chain(2));
    EXPECT_EQ(c.rule, ProofTrace::Rule::TopSplit);
    EXPECT_EQ(c.value, O("w*2"));

    const auto e = proof_trace(O("w"), FinitePoset());
    EXPECT_EQ(e.rule, ProofTrace::Rule::Empty);
    EXPECT_EQ(e.value, Ordinal(0));

    EXPECT_EQ(proof_trace_o(O("w+1"), FinitePoset::antichain(2)), O("w*2+2"));
    const std::string text = tr.render();
    EXPECT_NE(text.find("max split"), std::string::npos);
    EXPECT_NE(text.find("top split"), std::string::npos);
}

TEST(ProofTrace, MatchesFormula) {
    Rng rng(14);
    for (int i = 0; i < 300; ++i) {
        const Ordinal base = gen::ordinal(rng);
        const FinitePoset q = gen::poset(rng, 0, 7);
        const auto index = WpoTerm::fin(q);
        EXPECT_EQ(proof_trace_o(base, q), vialard(base, delta_mk(index))) << base << " " << q.str();
    }
}

TEST(Text, RoundTrips) {
    Rng rng(15);
    for (int i = 0; i < 300; ++i) {
        const auto t = gen::term(rng);
        const auto back = WpoTerm::parse(t.str());
        EXPECT_EQ(back.str(), t.str());
        EXPECT_EQ(o_of(back), o_of(t));
    }
}

TEST(Accessors, WrongKindThrows) {
    const auto t = T("chain(2)");
    EXPECT_EQ(t.kind(), WpoTerm::Kind::Fin);
    EXPECT_ANY_THROW(t.ordinal());
    EXPECT_ANY_THROW(t.left());
    EXPECT_EQ(T("ord(w)").kind(), WpoTerm::Kind::Ord);
    EXPECT_ANY_THROW(T("ord(w)").poset());
}
