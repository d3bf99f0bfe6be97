#include "doctest.h"
#include "eqs/checker.hpp"
#include "eqs/document.hpp"

using namespace eqs;

namespace {

const char *kFaFb = R"(format: 1
system: cf.EQ12
# a=c, b=c => a=b
eq2 hole=v skel="a = v" r="c" s="b" |- a = c, b = c => a = b
  ax f="a = c" |- a = c => a = c
)";

std::size_t error_line(const std::string &text) {
    try {
        parse_document(text);
    } catch (const ParseError &e) {
        return e.line;
    }
    return 0;
}

}  // namespace

TEST_CASE("documents parse, check and round-trip") {
    DerivationDocument doc = parse_document(kFaFb);
    CHECK(doc.system == "cf.EQ12");
    CHECK(doc.derivation.rule() == Rule::Eq2);
    auto rep = check(doc.derivation, doc.spec());
    CHECK_MESSAGE(rep.ok, rep.text());
    const std::string printed = print_document(doc);
    DerivationDocument again = parse_document(printed);
    CHECK(print_document(again) == printed);
    CHECK(again.derivation.conclusion() == doc.derivation.conclusion());
}

TEST_CASE("abbreviations, hypotheses and order survive a round trip") {
    const char *text = R"(format: 1
system: cf.EQ1@semishort(size)
order: size
hypothesis: a = b => c = d
term t = f(a)
formula E = $t = a

hyp |- a = b => c = d
)";
    DerivationDocument doc = parse_document(text);
    CHECK(doc.order == "size");
    REQUIRE(doc.abbreviations.size() == 2);
    CHECK(check(doc.derivation, doc.spec()).ok);
    DerivationDocument again = parse_document(print_document(doc));
    CHECK(again.hypotheses == doc.hypotheses);
    CHECK(again.abbreviations.size() == 2);
}

TEST_CASE("malformed documents report a position") {
    CHECK_THROWS_AS(parse_document(""), ParseError);
    CHECK_THROWS_AS(parse_document("# nothing\n\n"), ParseError);
    CHECK(error_line("format: 1\nsystem: cf.EQ\nfrob |- => a = a\n") == 3);
    CHECK(error_line("format: 1\nsystem: cf.EQ\nrefl t=\"a\" bogus=1 |- => a = a\n") == 3);
    // f used with one argument, then with two.
    CHECK(error_line("format: 1\nsystem: LK=\nterm t = f(a)\nax f=\"P(f(a, b))\" |- P(f(a, b)) => P(f(a, b))\n") == 4);
    // ax takes no premisses.
    CHECK(error_line("format: 1\nsystem: LK\nax f=\"P\" |- P => P\n  ax f=\"P\" |- P => P\n") == 3);
    CHECK(error_line("format: 1\nsystem: LK\nax f=\"P\" |- P => P\nax f=\"P\" |- P => P\n") == 4);
    CHECK(error_line("format: 1\nsystem: nonsense\nax f=\"P\" |- P => P\n") == 2);
    CHECK(error_line("system: LK\nax f=\"P\" |- P => P\n") == 1);
}
