#include <algorithm>
#include <random>

#include "doctest.h"
#include "eqs/checker.hpp"
#include "eqs/parse.hpp"
#include "eqs/system.hpp"
#include "eqs/transform.hpp"
#include "gen.hpp"

using namespace eqs;
using testgen::Family;

namespace {

Formula F(const std::string &s) { return parse_formula(s); }
Term T(const std::string &s) { return parse_term(s); }
Sequent S(const std::string &s) { return parse_sequent(s); }

CheckReport run(const Derivation &d, const std::string &sys) { return check(d, parse_system(sys)); }

std::size_t count_rule(const Derivation &d, Rule r) {
    std::size_t n = d.rule() == r ? 1 : 0;
    for (const auto &p : d.premisses()) n += count_rule(p, r);
    return n;
}

}  // namespace

TEST_CASE("singletonize splits a k-hole inference into k steps and k-1 contractions") {
    for (std::size_t k : {2u, 3u, 4u}) {
        std::string body = "v";
        for (std::size_t j = 1; j < k; ++j) body = "g(v, " + body + ")";
        Abstraction ab{F("P(" + body + ")"), "v"};
        for (Rule rule : {Rule::Eq1, Rule::Eq2, Rule::Eq1L, Rule::Eq2L}) {
            CAPTURE(k);
            Derivation base = mk::ax(ab.apply(T("a")));
            Derivation d;
            switch (rule) {
                case Rule::Eq1: d = mk::eq1(base, ab, T("a"), T("b")); break;
                case Rule::Eq2: d = mk::eq2(base, ab, T("a"), T("b")); break;
                case Rule::Eq1L: d = mk::eq1l(base, ab, T("a"), T("b"), 0); break;
                default: d = mk::eq2l(base, ab, T("a"), T("b"), 0); break;
            }
            Derivation out = singletonize(d);
            CHECK(out.conclusion() == d.conclusion());
            CHECK(count_rule(out, rule) == k);
            CHECK(count_rule(out, Rule::ContrL) == k - 1);
            auto rep = run(out, "EQ12@singleton");
            CHECK_MESSAGE(rep.ok, rep.text());
        }
    }
}

TEST_CASE("g_transform fast paths follow the order") {
    const TermOrder &o = size_order();
    Abstraction ab{F("P(v)"), "v"};
    // Rewriting a to f(a) lengthens nothing either way: both are direct.
    for (EqDir dir : {EqDir::One, EqDir::Two}) {
        TransformTrace tr;
        Derivation x = g_transform(mk::ax(F("P(a)")), ab, T("a"), T("f(a)"), dir, o, &tr);
        CHECK(x.rule() == (dir == EqDir::One ? Rule::Eq1 : Rule::Eq2));
        CHECK(tr.count_note("g_transform dir=" + std::string(dir == EqDir::One ? "1" : "2") + " fast") == 1);
    }
    // f(a) to a: neither Eq1 nor Eq2 may be used, the axiom becomes a left rule.
    for (EqDir dir : {EqDir::One, EqDir::Two}) {
        TransformTrace tr;
        Derivation x = g_transform(mk::ax(F("P(f(a))")), ab, T("f(a)"), T("a"), dir, o, &tr);
        CHECK(x.conclusion() == S(dir == EqDir::One ? "P(f(a)), f(a) = a => P(a)" : "P(f(a)), a = f(a) => P(a)"));
        CHECK(x.rule() == (dir == EqDir::One ? Rule::Eq2L : Rule::Eq1L));
        CHECK(tr.count_note("g_transform dir=" + std::string(dir == EqDir::One ? "1" : "2") + " slow") == 1);
        auto rep = run(x, "cf.EQ12@semishort(size)");
        CHECK_MESSAGE(rep.ok, rep.text());
    }
}

TEST_CASE("g_transform over every abstraction of a nested equation") {
    const TermOrder &o = size_order();
    Derivation d = mk::refl(T("g(a, f(b))"));
    d = mk::eq1(d, {F("g(a, f(b)) = g(a, f(v))"), "v"}, T("b"), T("f(c)"));  // lengthening
    Derivation semi = semishorten(d, o);
    REQUIRE(run(semi, "cf.EQ12@semishort(size)").ok);
    const Formula goal = semi.conclusion().succ[0];
    for (const char *r : {"a", "b", "f(b)", "f(f(c))", "g(a, f(b))"}) {
        for (const Abstraction &ab : enumerate_abstractions(goal, T(r))) {
            for (const char *s : {"c", "f(f(f(c)))"}) {
                for (EqDir dir : {EqDir::One, EqDir::Two}) {
                    CAPTURE(ab.skeleton.str());
                    CAPTURE(s);
                    TransformTrace tr;
                    Derivation x = g_transform(semi, ab, T(r), T(s), dir, o, &tr);
                    auto rep = run(x, "cf.EQ12@semishort(size)");
                    CHECK_MESSAGE(rep.ok, rep.text());
                    CHECK(tr.first_violation() == nullptr);
                }
            }
        }
    }
}

TEST_CASE("transpose_eq on generated EQ derivations") {
    std::mt19937 rng(23);
    testgen::Config cfg;
    cfg.family = Family::EQ;
    for (int k = 0; k < 100; ++k) {
        Derivation d = eliminate_cuts_eq(testgen::random_derivation(cfg, rng));
        for (EqTarget t : {EqTarget::Eq1, EqTarget::Eq2}) {
            TransformTrace tr;
            Derivation out = transpose_eq(d, t, &tr);
            CHECK(out.conclusion() == d.conclusion());
            auto rep = run(out, t == EqTarget::Eq1 ? "cf.EQ1" : "cf.EQ2");
            REQUIRE_MESSAGE(rep.ok, rep.text());
            CHECK(tr.first_violation() == nullptr);
        }
    }
}

TEST_CASE("semishorten on generated EQ12 derivations") {
    std::mt19937 rng(29);
    testgen::Config cfg;
    cfg.family = Family::EQ12;
    std::size_t slow = 0;
    for (int k = 0; k < 200; ++k) {
        Derivation d = testgen::random_derivation(cfg, rng);
        TransformTrace tr;
        Derivation out = semishorten(d, size_order(), &tr);
        CHECK(out.conclusion() == d.conclusion());
        auto rep = run(out, "cf.EQ12@semishort(size)");
        REQUIRE_MESSAGE(rep.ok, rep.text());
        CHECK(tr.first_violation() == nullptr);
        slow += tr.count_note("g_transform dir=1 slow") + tr.count_note("g_transform dir=2 slow");
    }
    CHECK(slow > 0);
}

TEST_CASE("left_symmetry in each cut-free equational system") {
    Derivation d = mk::eq1(mk::refl(T("a")), {F("v = a"), "v"}, T("a"), T("b"));  // a=b => b=a
    d = mk::weak_l(d, F("P(c)"));
    for (const char *sys : {"cf.EQ12", "cf.EQ", "cf.EQ1", "cf.EQ2"}) {
        CAPTURE(sys);
        Derivation x = left_symmetry(d, 0, parse_system(sys));
        CHECK(x.conclusion() == S("b = a, P(c) => b = a"));
        auto rep = run(x, sys);
        CHECK_MESSAGE(rep.ok, rep.text());
    }
}

TEST_CASE("project_intuitionistic keeps one succedent formula") {
    // P => P, Q by weakening, then a cut against P, R => P.
    Derivation left = mk::weak_r(mk::ax(F("P")), F("Q"));
    left = rearrange(left, S("P => Q, P"));
    Derivation right = rearrange(mk::ax(F("P")), S("R, P => P"));
    Derivation d = mk::cut(left, right);
    Derivation x = project_intuitionistic(d);
    CHECK(x.conclusion().ante == d.conclusion().ante);
    REQUIRE(x.conclusion().succ.size() == 1);
    const auto &succ = d.conclusion().succ;
    CHECK(std::find(succ.begin(), succ.end(), x.conclusion().succ[0]) != succ.end());
    CHECK(run(x, "LJ=").ok);
}
