#include <gtest/gtest.h>

#include "otype/error.hpp"
#include "otype/wpo_term.hpp"

using namespace otype;

namespace {

std::size_t error_position(const std::string& text) {
    try {
        WpoTerm::parse(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    ADD_FAILURE() << "no ParseError for " << text;
    return 0;
}

}  // namespace

TEST(TermParser, Atoms) {
    EXPECT_EQ(WpoTerm::parse("chain(3)").poset(), FinitePoset::chain(3));
    EXPECT_EQ(WpoTerm::parse("antichain(2)").poset(), FinitePoset::antichain(2));
    EXPECT_EQ(WpoTerm::parse("ord(w^2+1)").ordinal(), Ordinal::parse("w^2+1"));
    EXPECT_EQ(WpoTerm::parse("poset(3; 0<1<2)").poset(), FinitePoset::chain(3));
    EXPECT_EQ(WpoTerm::parse("poset(4; 0<2, 1<2, 1<3)").poset(),
              FinitePoset::from_edges(4, {{0, 2}, {1, 2}, {1, 3}}));
    EXPECT_EQ(WpoTerm::parse("poset(2)").poset(), FinitePoset::antichain(2));
    EXPECT_EQ(WpoTerm::parse("chain(0)").poset().size(), 0u);
}

TEST(TermParser, PrecedenceAndAssociativity) {
    const auto t = WpoTerm::parse("chain(1) + chain(2) . chain(3)");
    ASSERT_EQ(t.kind(), WpoTerm::Kind::Sum);
    EXPECT_EQ(t.right().kind(), WpoTerm::Kind::Prod);

    const auto u = WpoTerm::parse("chain(1) (+) chain(2) + chain(3)");
    ASSERT_EQ(u.kind(), WpoTerm::Kind::Sum);
    EXPECT_EQ(u.left().kind(), WpoTerm::Kind::Union);

    const auto p = WpoTerm::parse("chain(1) . chain(2) . chain(3)");
    ASSERT_EQ(p.kind(), WpoTerm::Kind::Prod);
    EXPECT_EQ(p.left().kind(), WpoTerm::Kind::Prod);
    EXPECT_EQ(p.right().poset(), FinitePoset::chain(3));

    const auto g = WpoTerm::parse("chain(1) . (chain(2) + chain(3))");
    EXPECT_EQ(g.right().kind(), WpoTerm::Kind::Sum);
}

TEST(TermParser, WhitespaceIsIgnored) {
    EXPECT_EQ(WpoTerm::parse("  ord( w + 1 ) .antichain( 2 )  ").str(),
              WpoTerm::parse("ord(w+1).antichain(2)").str());
}

TEST(TermParser, CanonicalText) {
    EXPECT_EQ(WpoTerm::parse("ord(w+1) . antichain(2)").str(), "ord(w+1) . antichain(2)");
    EXPECT_EQ(WpoTerm::parse("poset(3;0<1,0<2,1<2)").str(), "chain(3)");
    for (const char* s : {"chain(1) + chain(2) . chain(3)", "(chain(1) + chain(2)) . chain(3)",
                          "chain(1) . (chain(2) . chain(3))", "chain(1) (+) (chain(2) + chain(3))",
                          "poset(4; 0<2, 1<2, 1<3) (+) ord(w^(w+1)*2)"}) {
        const auto t = WpoTerm::parse(s);
        EXPECT_EQ(WpoTerm::parse(t.str()).str(), t.str()) << s;
        EXPECT_EQ(o_of(WpoTerm::parse(t.str())), o_of(t)) << s;
    }
}

TEST(TermParser, ErrorPositions) {
    EXPECT_EQ(error_position(""), 0u);
    EXPECT_EQ(error_position("chain(2) + foo(1)"), 11u);
    EXPECT_EQ(error_position("chain("), 6u);
    EXPECT_EQ(error_position("chain(2"), 7u);
    EXPECT_EQ(error_position("chain(2) chain(3)"), 9u);
    EXPECT_EQ(error_position("ord(w+*)"), 6u);
    EXPECT_EQ(error_position("ord(w"), 5u);
    EXPECT_EQ(error_position("poset(3; 0<3)"), 11u);
    EXPECT_EQ(error_position("poset(3; 0 1)"), 11u);
    EXPECT_EQ(error_position("chain(2) +"), 10u);
    EXPECT_EQ(error_position("ord(w*0)"), 6u);
}

TEST(TermParser, CyclesAreParseErrors) {
    EXPECT_THROW(WpoTerm::parse("poset(2; 0<1, 1<0)"), ParseError);
    EXPECT_THROW(WpoTerm::parse("poset(1; 0<0)"), ParseError);
}

TEST(TermParser, ResourceLimits) {
    EXPECT_THROW(WpoTerm::parse("chain(5000)"), ResourceError);
    EXPECT_NO_THROW(WpoTerm::parse("antichain(4096)"));
    std::string deep = "chain(1)";
    for (int i = 0; i < 300; ++i) {
        deep = "(" + deep + ")";
    }
    EXPECT_THROW(WpoTerm::parse(deep), ResourceError);
}
