#pragma once

// Derivation documents: a small header, optional abbreviations, and one
// derivation tree written one inference per line, children indented two
// spaces under their parent:
//
//   format: 1
//   system: cf.EQ12
//   order: size                      (optional)
//   hypothesis: a = b => c = d       (optional, repeatable; for hyp leaves)
//   term t = f(a)                    (abbreviation, used as $t)
//   formula F = P($t) & Q            (abbreviation, used as $F)
//
//   eq2 hole=v skel="a = v" r="c" s="b" |- a = c, b = c => a = b
//     ax f="a = c" |- a = c => a = c
//
// Lines starting with '#' and blank lines are ignored. Annotation keys are
// those printed by RuleApp::str(): f, t, u, i, hole, skel, r, s, la, ls.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eqs/calculus.hpp"
#include "eqs/parse.hpp"
#include "eqs/system.hpp"

namespace eqs {

struct DerivationDocument {
    int format = 1;
    std::string system;
    std::string order;  // empty when absent
    std::vector<Sequent> hypotheses;
    std::vector<std::pair<std::string, std::variant<Term, Formula>>> abbreviations;
    Derivation derivation;

    // parse_system(system) with the hypotheses attached.
    SystemSpec spec() const;
};

// Throws ParseError with the line and column of the first problem.
DerivationDocument parse_document(const std::string &text);
std::string print_document(const DerivationDocument &doc);

// File wrappers; an unreadable file is a ParseError at 0:0.
DerivationDocument read_document(const std::string &path);
void write_document(const DerivationDocument &doc, const std::string &path);

}  // namespace eqs
