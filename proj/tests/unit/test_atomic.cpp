#include "doctest.h"
#include "eqs/checker.hpp"
#include "eqs/parse.hpp"
#include "eqs/transform.hpp"

using namespace eqs;

namespace {

Formula F(const std::string &s) { return parse_formula(s); }
Term T(const std::string &s) { return parse_term(s); }
Sequent S(const std::string &s) { return parse_sequent(s); }

CheckReport run(const Derivation &d, const char *sys) { return check(d, parse_system(sys)); }

}  // namespace

TEST_CASE("basic_atomic covers every connective in both directions") {
    const char *forms[] = {"P(v)", "~P(v)", "P(v) & Q(v, w)", "P(v) | Q(v)", "P(v) -> Q(v)",
                           "forall x. R(x, v)", "exists x. R(v, x) & ~R(x, v)", "~(P(v) -> forall y. R(y, v))"};
    for (const char *txt : forms) {
        for (EqDir dir : {EqDir::One, EqDir::Two}) {
            CAPTURE(txt);
            Formula f = F(txt);
            TransformTrace tr;
            Derivation d = basic_atomic(f, "v", T("f(a)"), T("b"), dir, &tr);
            Formula op = dir == EqDir::One ? F("f(a) = b") : F("b = f(a)");
            CHECK(d.conclusion() == Sequent{{subst(f, "v", T("f(a)")), op}, {subst(f, "v", T("b"))}});
            auto rep = run(d, "LK=@atomic");
            CHECK_MESSAGE(rep.ok, rep.text());
            CHECK(rep.census.cut_count == 0);
            CHECK(tr.first_violation() == nullptr);
        }
    }
}

TEST_CASE("basic_atomic on a negated atom stacks NotL, NotR over one equality") {
    Derivation d = basic_atomic(F("~P(v)"), "v", T("a"), T("b"), EqDir::One);
    CHECK(d.rule() == Rule::NotR);
    CHECK(run(d, "LK=").census.eq_count == 1);
}

TEST_CASE("atomize_equalities replaces a non-atomic Eq1 by a cut") {
    Abstraction ab{F("~P(v)"), "v"};
    Derivation d = mk::eq1(mk::weak_l(mk::ax(F("~P(a)")), F("Q")), ab, T("a"), T("b"));
    Derivation out = atomize_equalities(d);
    CHECK(out.conclusion() == d.conclusion());
    CHECK(out.rule() == Rule::Cut);
    auto rep = run(out, "LK=");
    CHECK_MESSAGE(rep.ok, rep.text());
    CHECK(rep.census.non_atomic_eq_count == 0);

    Derivation atomic = mk::eq2(mk::ax(F("P(a)")), Abstraction{F("P(v)"), "v"}, T("a"), T("b"));
    CHECK(atomize_equalities(atomic).same_node(atomic));
}

TEST_CASE("join on a conjunction introduced on both sides") {
    Derivation d = mk::and_r(mk::weak_l(mk::ax(F("P")), F("Q")), rearrange(mk::ax(F("Q")), S("P, Q => Q")));
    Derivation e = mk::and_l1(mk::ax(F("P")), F("P & Q"));
    TransformTrace tr;
    Derivation j = join_with_atomic_cut(d, e, F("P & Q"), JoinSpec::ends(d, e), &tr);
    CHECK(j.conclusion() == S("P, Q => P"));
    CHECK(run(j, "cf.LK=").ok);
    REQUIRE(tr.count("join_with_atomic_cut") >= 1);
    CHECK(tr.entries[0].child[0] == 0);
    CHECK(tr.first_violation() == nullptr);
}

TEST_CASE("join without extra occurrences only weakens") {
    Derivation d = mk::ax(F("P"));
    Derivation e = mk::ax(F("Q & R"));
    Derivation j = join_with_atomic_cut(d, e, F("Q & R"), {{}, {0}});
    CHECK(j.conclusion() == S("P => P, Q & R"));
}

TEST_CASE("to_atomic discharges a cut on a negation") {
    Derivation left = mk::not_r(mk::ax(F("P")));                // => P, ~P
    Derivation right = mk::not_l(mk::ax(F("P")));               // P, ~P =>
    Derivation d = mk::cut(left, right);                        // P => P
    TransformTrace tr;
    Derivation out = to_atomic(d, &tr);
    CHECK(out.conclusion() == d.conclusion());
    auto rep = run(out, "LK=@atomic");
    CHECK_MESSAGE(rep.ok, rep.text());
    CHECK(rep.census.non_atomic_cut_count == 0);
    CHECK(tr.first_violation() == nullptr);
}

TEST_CASE("to_atomic with a contracted cut formula on the left") {
    Derivation pq = mk::and_r(mk::weak_l(mk::ax(F("P")), F("Q")), rearrange(mk::ax(F("Q")), S("P, Q => Q")));
    Derivation d = rearrange(pq, S("P, Q => P & Q, R, P & Q"));
    d = mk::contr_r(rearrange(d, S("P, Q => R, P & Q, P & Q")), 1);  // P, Q => R, P & Q
    Derivation e = mk::and_l2(mk::ax(F("Q")), F("P & Q"));           // P & Q => Q
    e = rearrange(e, S("S, P & Q => Q"));
    Derivation cut = mk::cut(d, e);
    TransformTrace tr;
    Derivation out = to_atomic(cut, &tr);
    CHECK(out.conclusion() == cut.conclusion());
    auto rep = run(out, "LK=@atomic");
    CHECK_MESSAGE(rep.ok, rep.text());
    CHECK(tr.first_violation() == nullptr);
}
