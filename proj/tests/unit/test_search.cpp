#include "doctest.h"
#include "eqs/checker.hpp"
#include "eqs/parse.hpp"
#include "eqs/search.hpp"
#include "eqs/system.hpp"

using namespace eqs;

namespace {

Sequent S(const std::string &s) { return parse_sequent(s); }
SystemSpec Y(const std::string &s) { return parse_system(s); }

SearchBudget budget(std::size_t depth, std::size_t cap = 3) {
    SearchBudget b;
    b.max_depth = depth;
    b.multiplicity_cap = cap;
    return b;
}

}  // namespace

TEST_CASE("reflexivity closes at depth one") {
    auto r = prove(S("=> f(a) = f(a)"), Y("cf.EQ"), budget(1));
    REQUIRE(r.found());
    CHECK(r.derivation->rule() == Rule::Refl);
}

TEST_CASE("found derivations for the displayed sequents") {
    struct Case {
        const char *goal, *sys;
    } cases[] = {
        {"a = c, b = c => a = b", "cf.EQ"},    {"a = c, b = c => a = b", "cf.EQ12"},
        {"c = b, c = a => a = b", "cf.EQ"},    {"c = b, c = a => a = b", "cf.EQ1"},
        {"a = b => f(a) = f(b)", "cf.EQ"},     {"a = b => f(a) = f(b)", "cf.EQ12"},
        {"a = b => b = a", "cf.EQ2"},
    };
    for (const auto &c : cases) {
        CAPTURE(c.goal);
        CAPTURE(c.sys);
        auto r = prove(S(c.goal), Y(c.sys), budget(8));
        REQUIRE(r.found());
        CHECK(r.derivation->conclusion() == S(c.goal));
        CHECK(check(*r.derivation, Y(c.sys)).ok);
    }
}

TEST_CASE("restricted rule sets are exhausted") {
    struct Case {
        const char *goal, *sys;
    } cases[] = {
        {"a = c, b = c => a = b", "cf.{eq1,eq2l}"},
        {"c = b, c = a => a = b", "cf.{eq2,eq1l}"},
        {"a = b => f(a) = f(b)", "cf.{eq1l,eq2l}"},
    };
    for (const auto &c : cases) {
        CAPTURE(c.goal);
        auto cert = certify_underivable(S(c.goal), Y(c.sys), budget(8));
        CHECK(cert.exhausted);
        CHECK(!cert.visited.empty());
        CHECK(cert.stats.expanded > 0);
    }
}

TEST_CASE("visited classes of the first counterexample stay in the closed family") {
    auto cert = certify_underivable(S("a = c, b = c => a = b"), Y("cf.{eq1,eq2l}"), budget(8));
    REQUIRE(cert.exhausted);
    const Formula allowed[] = {parse_formula("c = c"), parse_formula("a = c"), parse_formula("b = c")};
    for (const auto &s : cert.visited) {
        CHECK(s.succ == std::vector<Formula>{parse_formula("a = b")});
        for (const auto &f : s.ante) CHECK(std::find(std::begin(allowed), std::end(allowed), f) != std::end(allowed));
    }
}

TEST_CASE("left symmetry is not derivable in cf.EQ1 or cf.EQ2 from the hypothesis") {
    for (const char *sys : {"cf.EQ1", "cf.EQ2"}) {
        CAPTURE(sys);
        auto cert = check_nonderivable_symmetry(Y(sys), budget(8));
        CHECK(cert.exhausted);
        CHECK(!cert.invariant.empty());
        CHECK_MESSAGE(cert.invariant_failures.empty(), cert.text());
    }
    // Hypothesis leaf, Eq1L, Eq2L and two contractions: five sequents.
    auto full = check_nonderivable_symmetry(Y("cf.EQ12"), budget(5));
    REQUIRE(!full.exhausted);
    REQUIRE(full.witness);
    CHECK(full.witness->rule() != Rule::Hyp);
    CHECK(check_nonderivable_symmetry(Y("cf.EQ12"), budget(4)).exhausted);
}

TEST_CASE("a larger budget keeps a found goal found") {
    for (std::size_t d = 2; d <= 6; ++d) CHECK(prove(S("a = b => f(a) = f(b)"), Y("cf.EQ"), budget(d)).found());
}

TEST_CASE("budget and system errors") {
    CHECK_THROWS_AS(prove(S("=> a = a"), Y("cf.EQ"), budget(0)), BudgetInvalid);
    CHECK_THROWS_AS(prove(S("=> a = a"), Y("cf.EQ"), budget(3, 0)), BudgetInvalid);
    CHECK_THROWS_AS(prove(S("=> a = a"), Y("EQ"), budget(3)), SearchUnsupported);
    CHECK_THROWS_AS(prove(S("=> a = a"), Y("cf.LK="), budget(3)), SearchUnsupported);
}

TEST_CASE("order restriction prunes non-shortening Eq1L") {
    const Sequent goal = S("f(a) = a, P(a) => P(f(a))");
    auto plain = prove(goal, Y("cf.EQ1"), budget(6));
    REQUIRE(plain.found());
    CHECK(!prove(goal, Y("cf.EQ1@semishort(size)"), budget(6)).found());
    auto ok = prove(S("a = f(a), P(f(a)) => P(a)"), Y("cf.EQ1@semishort(size)"), budget(6));
    REQUIRE(ok.found());
    CHECK(check(*ok.derivation, Y("cf.EQ1@semishort(size)")).ok);
}
