#include <random>

#include "doctest.h"
#include "eqs/order.hpp"
#include "eqs/parse.hpp"
#include "eqs/syntax.hpp"

using namespace eqs;

namespace {

Formula F(const std::string &s) { return parse_formula(s); }
Term T(const std::string &s) { return parse_term(s); }

}  // namespace

TEST_CASE("subst replaces free occurrences only") {
    CHECK(subst(F("P(v)"), "v", T("f(a)")) == F("P(f(a))"));
    CHECK(subst(F("v = b"), "v", T("a")) == F("a = b"));
    CHECK(subst(F("forall x. P(x,v)"), "v", T("a")) == F("forall x. P(x,a)"));
    CHECK(subst(F("Q"), "v", T("a")) == F("Q"));
}

TEST_CASE("bound variables compare up to renaming") {
    CHECK(F("forall x. P(x)") == F("forall y. P(y)"));
    CHECK(F("forall x. exists y. R(x,y)") != F("forall x. exists y. R(y,x)"));
    CHECK(F("forall x. P(x)") != F("forall x. P(a)"));
}

TEST_CASE("printing re-parses to the same formula") {
    for (const char *s : {"a = b", "~P(a) & Q", "(P -> Q) -> R", "P -> Q -> R", "P | Q & R", "(P | Q) & R",
                          "forall x. P(x) -> Q", "(forall x. P(x)) -> Q", "forall x. exists y. R(x,y,f(c()))",
                          "~(forall x. x = x)", "forall x. ~forall y. x = y", "forall x. P(x,x1,x2)"}) {
        Formula f = F(s);
        INFO(s << " printed " << f.str());
        CHECK(F(f.str()) == f);
    }
}

TEST_CASE("printer avoids capturing free variables") {
    Formula f = Formula::forall("x", Formula::atom("P", {Term::bound(0, "x"), Term::var("x")}));
    CHECK(F(f.str()) == f);
    CHECK(f.str() == "forall x1. P(x1,x)");
}

TEST_CASE("instantiate and forall_over are inverse") {
    Formula body = F("P(u) & exists y. R(u,y)");
    Formula q = Formula::forall_over("u", body);
    CHECK(q == F("forall x. P(x) & exists y. R(x,y)"));
    CHECK(instantiate(q, Term::var("u")) == body);
    CHECK(instantiate(q, T("f(a)")) == F("P(f(a)) & exists y. R(f(a),y)"));
}

TEST_CASE("renaming identity for substitution") {
    Formula f = F("forall x. R(v, f(v, x)) | v = c()");
    Formula renamed = subst(f, "v", Term::var("w"));
    for (const char *r : {"a", "g(a,b)", "c()"}) CHECK(subst(renamed, "w", T(r)) == subst(f, "v", T(r)));
}

TEST_CASE("degree") {
    CHECK(degree(F("a = b")) == 0);
    CHECK(degree(F("~a = b")) == 1);
    CHECK(degree(F("forall x. P(x) -> Q(x)")) == 2);
    CHECK(degree(subst(F("forall x. P(x, v) -> Q(v)"), "v", T("f(f(a))"))) == 2);
}

TEST_CASE("fresh_var") {
    CHECK(fresh_var({"v0"}) == "v1");
    CHECK(fresh_var({}) == "v0");
    CHECK(fresh_var({"v0", "v1", "v2"}) == "v3");
}

TEST_CASE("abstract_occurrences") {
    Formula f = F("f(a) = f(a)");
    auto occ = occurrences(f, T("a"));
    REQUIRE(occ.size() == 2);
    CHECK(abstract_occurrences(f, T("a"), occ, "v").skeleton == F("f(v) = f(v)"));
    CHECK(abstract_occurrences(f, T("a"), {occ[0]}, "v").skeleton == F("f(v) = f(a)"));
    auto triv = abstract_occurrences(F("a = b"), T("c"), {}, "v");
    CHECK(triv.skeleton == F("a = b"));
    CHECK(triv.trivial());
    CHECK_THROWS_AS(abstract_occurrences(f, T("b"), {occ[0]}, "v"), PathMismatch);
    CHECK_THROWS_AS(abstract_occurrences(F("P(v, a)"), T("a"), {}, "v"), ProofError);
}

TEST_CASE("enumerate_abstractions counts and re-substitutes") {
    auto check_all = [](const Formula &f, const Term &t, std::size_t expected) {
        auto abs = enumerate_abstractions(f, t);
        CHECK(abs.size() == expected);
        for (const auto &ab : abs) CHECK(ab.apply(t) == f);
        for (std::size_t i = 0; i < abs.size(); ++i)
            for (std::size_t j = i + 1; j < abs.size(); ++j) CHECK(!(abs[i].skeleton == abs[j].skeleton));
    };
    check_all(F("f(a) = f(a)"), T("a"), 4);
    check_all(F("a = b"), T("c"), 1);
    check_all(F("P(a)"), T("a"), 2);
    check_all(F("forall x. R(x, g(a), a) & a = a"), T("a"), 16);
    auto abs = enumerate_abstractions(F("f(a) = f(a)"), T("a"));
    CHECK(abs.front().trivial());
    // lexicographic on position sets: {}, {0}, {0,1}, {1}
    CHECK(abs[2].hole_count() == 2);
    CHECK(abs[3].skeleton == F("f(a) = f(v0)"));
}

TEST_CASE("size order is irreflexive and antisymmetric on samples") {
    const auto &o = size_order();
    auto ts = probe_terms(200, 11);
    for (const auto &a : ts) {
        CHECK_FALSE(o.less(a, a));
        for (const auto &b : ts)
            if (o.less(a, b)) CHECK_FALSE(o.less(b, a));
    }
    CHECK(o.less(T("a"), T("f(a)")));
    CHECK_FALSE(o.less(T("a"), T("b")));
}

TEST_CASE("register_order rejects reflexive relations") {
    CHECK_THROWS_AS(register_order({"bad", [](const Term &, const Term &) { return true; }}), ProofError);
    register_order({"rev-size", [](const Term &a, const Term &b) { return a.size() > b.size(); }});
    CHECK(find_order("rev-size").less(T("f(a)"), T("a")));
    CHECK_THROWS_AS(find_order("nope"), ProofError);
}

TEST_CASE("parse errors carry positions") {
    Signature sig;
    parse_formula("P(f(a))", &sig);
    try {
        parse_formula("Q(f(a,b))", &sig, 3, 5);
        FAIL("expected arity error");
    } catch (const ParseError &e) {
        CHECK(e.line == 3);
        CHECK(e.col == 7);
    }
    CHECK_THROWS_AS(parse_formula(""), ParseError);
    CHECK_THROWS_AS(parse_formula("P(a"), ParseError);
    CHECK_THROWS_AS(parse_formula("a"), ParseError);
    CHECK_THROWS_AS(parse_sequent("P, Q"), ParseError);
    CHECK(parse_sequent("=> a = a").succ.size() == 1);
    CHECK(parse_sequent("P(a), a = b => ").ante.size() == 2);
}
