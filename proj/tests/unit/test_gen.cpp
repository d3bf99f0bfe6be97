#include <map>
#include <random>

#include "doctest.h"
#include "eqs/checker.hpp"
#include "eqs/system.hpp"
#include "eqs/transform.hpp"
#include "gen.hpp"

using namespace eqs;
using testgen::Family;

namespace {

const char *system_of(Family f) {
    switch (f) {
        case Family::LK: return "LK=";
        case Family::LJ: return "LJ=";
        case Family::EQ: return "EQ";
        case Family::EQ12: return "EQ12";
    }
    return "";
}

}  // namespace

TEST_CASE("generated derivations check in their family") {
    for (Family fam : {Family::LK, Family::LJ, Family::EQ, Family::EQ12}) {
        std::mt19937 rng(7);
        testgen::Config cfg;
        cfg.family = fam;
        cfg.min_cuts = 1;
        std::size_t cuts = 0;
        for (int k = 0; k < 100; ++k) {
            Derivation d = testgen::random_derivation(cfg, rng);
            auto rep = check(d, parse_system(system_of(fam)));
            CAPTURE(system_of(fam));
            REQUIRE_MESSAGE(rep.ok, rep.text());
            CHECK(d.node_count() <= 25);
            cuts += testgen::cut_count(d);
        }
        CHECK(cuts >= 100);
    }
}

TEST_CASE("to_atomic on generated LK= and LJ= derivations") {
    for (Family fam : {Family::LK, Family::LJ}) {
        std::mt19937 rng(11);
        testgen::Config cfg;
        cfg.family = fam;
        cfg.min_cuts = 1;
        std::size_t compound = 0, joins = 0;
        for (int k = 0; k < 200; ++k) {
            Derivation d = testgen::random_derivation(cfg, rng);
            compound += analyze(d, size_order()).non_atomic_cut_count;
            TransformTrace tr;
            Derivation out = to_atomic(d, &tr);
            CHECK(out.conclusion() == d.conclusion());
            auto rep = check(out, parse_system(std::string(system_of(fam)) + "@atomic"));
            REQUIRE_MESSAGE(rep.ok, rep.text());
            CHECK(rep.census.non_atomic_cut_count == 0);
            CHECK(tr.first_violation() == nullptr);
            joins += tr.count("join_with_atomic_cut");
        }
        CHECK(compound > 0);
        CHECK(joins >= compound);
        CHECK(compound >= 50);
    }
}

TEST_CASE("separate and eliminate_cuts_full on generated LK= and LJ= derivations") {
    std::map<std::string, std::size_t> passes;
    for (Family fam : {Family::LK, Family::LJ}) {
        std::mt19937 rng(13);
        testgen::Config cfg;
        cfg.family = fam;
        cfg.min_cuts = 1;
        const std::string sys = system_of(fam);
        for (int k = 0; k < 200; ++k) {
            Derivation d = testgen::random_derivation(cfg, rng);
            CAPTURE(k);
            Derivation sep = separate(d);
            CHECK(is_separated(sep));
            auto rs = check(sep, parse_system(sys));
            REQUIRE_MESSAGE(rs.ok, rs.text());
            CHECK(sep.conclusion() == d.conclusion());

            TransformTrace tr;
            Derivation cf = eliminate_cuts_full(d, parse_system(sys), &tr);
            auto rep = check(cf, parse_system("cf." + sys));
            REQUIRE_MESSAGE(rep.ok, rep.text());
            CHECK(cf.conclusion() == d.conclusion());
            CHECK(tr.first_violation() == nullptr);

            Derivation emb = embed_pure(cf);
            auto re = check(emb, parse_system(fam == Family::LK ? "cf.LK1=" : "cf.LJ1="));
            REQUIRE_MESSAGE(re.ok, re.text());
            CHECK(emb.conclusion() == d.conclusion());
            for (const auto &e : tr.entries) ++passes[e.pass];
        }
    }
    for (const char *pass : {"join_with_atomic_cut", "sep_eq_step", "sep_cut_step", "cng_cut_join", "admit_cng"})
        CHECK_MESSAGE(passes[pass] > 0, pass);
}

TEST_CASE("eliminate_cuts_eq on generated EQ and EQ12 derivations") {
    std::map<std::string, std::size_t> passes;
    for (Family fam : {Family::EQ, Family::EQ12}) {
        std::mt19937 rng(17);
        testgen::Config cfg;
        cfg.family = fam;
        cfg.min_cuts = 1;
        for (int k = 0; k < 200; ++k) {
            Derivation d = testgen::random_derivation(cfg, rng);
            CAPTURE(k);
            TransformTrace tr;
            Derivation cf = eliminate_cuts_eq(d, &tr);
            auto rep = check(cf, parse_system("cf.EQ"));
            REQUIRE_MESSAGE(rep.ok, rep.text());
            CHECK(cf.conclusion() == d.conclusion());
            CHECK(tr.first_violation() == nullptr);
            for (const auto &e : tr.entries) ++passes[e.pass];
        }
    }
    for (const char *pass : {"cng_cut_join", "admit_cng"}) CHECK_MESSAGE(passes[pass] > 0, pass);
}
