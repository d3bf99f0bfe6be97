#pragma once

// Named calculi.
//
//   LJ, LK            Gentzen's systems (axioms, weak structural rules, cut, logic)
//   LJ=, LK=          + reflexivity, eq1, eq2
//   LJ1=, LK1=        + reflexivity, eqelim
//   LJN=, LKN=        + reflexivity, cng
//   LJ=_1, LK=_1      + reflexivity, eq1, eq1l     (=_2 variants likewise)
//   LJ12=, LK12=      + reflexivity, eq1, eq2, eq1l, eq2l
//   EQ, EQN, EQ1, EQ2, EQ12
//                     single-succedent equational systems: axioms, reflexivity,
//                     left weakening/exchange/contraction, cut, and
//                     {eq1,eq2}, {cng}, {eq1,eq1l}, {eq2,eq2l}, all four
//   {r1,r2,...}       EQ with the listed equality rules
//
// Modifiers: prefix "cf." removes cut; suffixes "@atomic", "@singleton",
// "@nonlength(order)", "@semishort(order)" add restrictions.

#include <optional>
#include <set>
#include <string>

#include "eqs/calculus.hpp"

namespace eqs {

enum class OrderRestriction : std::uint8_t { None, Nonlengthening, Semishortening };

struct SystemSpec {
    std::string name;
    std::set<Rule> rules;
    // Maximum succedent length; nullopt means unbounded.
    std::optional<std::size_t> succedent_bound;
    // Equational systems require exactly one succedent formula everywhere.
    bool exact_one_succedent = false;
    bool atomic_eq_only = false;
    bool singleton_eq_only = false;
    OrderRestriction restriction = OrderRestriction::None;
    std::string order;
    // Extra axiom sequents, closed by Hyp leaves.
    std::vector<Sequent> hypotheses;

    bool allows(Rule r) const { return rules.count(r) != 0; }
    bool cut_free() const { return !allows(Rule::Cut); }
    bool intuitionistic() const { return succedent_bound && *succedent_bound == 1; }
};

struct UnknownSystem : ProofError {
    using ProofError::ProofError;
};

// Throws UnknownSystem on malformed names or unknown orders.
SystemSpec parse_system(const std::string &name);

}  // namespace eqs
