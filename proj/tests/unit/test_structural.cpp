#include "doctest.h"
#include "eqs/checker.hpp"
#include "eqs/parse.hpp"
#include "eqs/structural.hpp"
#include "eqs/system.hpp"

using namespace eqs;

namespace {

Formula F(const std::string &s) { return parse_formula(s); }
Term T(const std::string &s) { return parse_term(s); }
Sequent S(const std::string &s) { return parse_sequent(s); }

bool valid(const Derivation &d, const char *sys = "LK12=") { return check(d, parse_system(sys)).ok; }

}  // namespace

TEST_CASE("rearrange contracts, weakens and permutes") {
    Derivation d = mk::weak_l(mk::weak_l(mk::ax(F("P")), F("Q")), F("P"));  // P, Q, P => P
    Sequent target = S("R, Q, P => P, R");
    Derivation r = rearrange(d, target);
    CHECK(r.conclusion() == target);
    CHECK(valid(r));
    Derivation twice = mk::weak_l(mk::weak_l(mk::ax(F("P")), F("Q")), F("P"));
    Derivation c = rearrange(twice, S("Q, P => P"));
    CHECK(c.conclusion() == S("Q, P => P"));
    CHECK(valid(c));
    CHECK_THROWS_AS(rearrange(d, S("P => P")), ProofError);
}

TEST_CASE("ancestors through contraction and cut") {
    Derivation d = mk::contr_l(mk::weak_l(mk::ax(F("P")), F("P")), 0);
    auto a = ancestors(d, 0);
    REQUIRE(a.ante.size() == 1);
    CHECK(a.ante[0] == std::vector<std::size_t>{0, 1});

    Derivation left = mk::weak_l(mk::ax(F("P")), F("Q"));   // P, Q => P
    Derivation right = mk::weak_l(mk::ax(F("R")), F("P"));  // R, P => R
    Derivation cut = mk::cut(left, right);                   // P, Q, R => R
    CHECK(cut.conclusion() == S("P, Q, R => R"));
    CHECK(premiss_occurrences(cut, 0, {{0, 2}, {}}).ante == std::vector<std::size_t>{0});
    CHECK(premiss_occurrences(cut, 1, {{0, 2}, {0}}).ante == std::vector<std::size_t>{0});
    CHECK(introduced_occurrences(cut, {{1}, {0}}).empty());
}

TEST_CASE("reapply carries extra context through a logical rule") {
    Derivation d = mk::and_l1(mk::ax(F("P")), F("P & Q"));  // P & Q => P
    Derivation grown = mk::weak_l(mk::weak_r(mk::ax(F("P")), F("R")), F("S"));  // P, S => P, R
    Derivation r = reapply(d, {grown});
    CHECK(valid(r));
    CHECK(r.conclusion() == S("S, P & Q => P, R"));

    Derivation e = mk::eq1l(mk::weak_l(mk::ax(F("P(a)")), F("Q")), Abstraction{F("P(v)"), "v"}, T("a"), T("b"), 0);
    CHECK(e.conclusion() == S("P(b), Q, a = b => P(a)"));
    Derivation r2 = reapply(e, {mk::weak_l(e.premiss(0), F("R"))});
    CHECK(valid(r2));
    CHECK(r2.conclusion() == S("Q, R, P(b), a = b => P(a)"));
}

TEST_CASE("reapply unifies additive contexts") {
    Derivation d = mk::and_r(mk::weak_l(mk::ax(F("P")), F("Q")), mk::exch_l(mk::weak_l(mk::ax(F("Q")), F("P")), 0));
    Derivation r = reapply(d, {mk::weak_l(d.premiss(0), F("A")), mk::weak_l(d.premiss(1), F("B"))});
    CHECK(valid(r));
    CHECK(r.conclusion().succ == std::vector<Formula>{F("P & Q")});
    CHECK(r.conclusion().ante.size() == 4);
}

TEST_CASE("substitute renames clashing eigenvariables") {
    // P(u) => P(u) ; forall x. P(x) => forall x. P(x)
    Derivation inner = mk::forall_l(mk::ax(F("P(u)")), F("forall x. P(x)"), T("u"));
    Derivation d = mk::weak_l(mk::forall_r(inner, F("forall x. P(x)"), "u"), F("Q(w)"));
    Derivation s = substitute(d, "w", T("f(u)"));
    CHECK(valid(s));
    CHECK(s.conclusion() == S("forall x. P(x), Q(f(u)) => forall x. P(x)"));
    // the subtree without w is shared
    CHECK(s.premiss(0).same_node(d.premiss(0)));

    Derivation e = mk::eq1(mk::ax(F("P(w)")), Abstraction{F("P(v)"), "v"}, T("w"), T("b"));
    Derivation es = substitute(e, "w", T("g(v)"));
    CHECK(valid(es));
    CHECK(es.conclusion() == S("P(g(v)), g(v) = b => P(b)"));
}

TEST_CASE("freshen_eigenvariable keeps the endsequent") {
    Derivation inner = mk::forall_l(mk::ax(F("P(u)")), F("forall x. P(x)"), T("u"));
    Derivation d = mk::forall_r(inner, F("forall x. P(x)"), "u");
    Derivation f = freshen_eigenvariable(d, {"u"});
    CHECK(f.app().u != "u");
    CHECK(f.conclusion() == d.conclusion());
    CHECK(valid(f));
}
