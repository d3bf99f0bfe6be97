#pragma once

// Text syntax for terms, formulas and sequents.
//
//   term     x | f(t1,...,tn) | c()        lowercase identifiers; x is a free
//                                           variable unless bound in scope
//   atom     P | P(t1,...,tn) | t = u      predicates start uppercase
//   formula  ~F | F & G | F | G | F -> G | forall x. F | exists x. F | (F)
//   sequent  F1, ..., Fn => G1, ..., Gm
//
// & and | bind tighter than ->; all three associate to the right. A
// quantifier body extends as far right as possible.

#include <map>
#include <string>
#include <variant>

#include "eqs/syntax.hpp"

namespace eqs {

struct ParseError : ProofError {
    std::size_t line, col;
    ParseError(std::size_t line, std::size_t col, const std::string &msg);
};

// Symbol arities fixed by first use, plus named abbreviations usable as $name.
struct Signature {
    std::map<std::string, std::size_t> functions;
    std::map<std::string, std::size_t> predicates;
    std::map<std::string, std::variant<Term, Formula>> abbreviations;
};

// `line` and `col` locate the text inside a larger document for diagnostics.
Term parse_term(const std::string &text, Signature *sig = nullptr, std::size_t line = 1, std::size_t col = 1);
Formula parse_formula(const std::string &text, Signature *sig = nullptr, std::size_t line = 1, std::size_t col = 1);
Sequent parse_sequent(const std::string &text, Signature *sig = nullptr, std::size_t line = 1, std::size_t col = 1);

// Records the symbols of an already built value; throws ParseError(0,0,...)
// on an arity clash.
void record_symbols(const Formula &f, Signature &sig);

}  // namespace eqs
