#pragma once

// Bounded backward proof search for the cut-free equational systems over a
// finite term universe, and exhaustion certificates for underivability.
//
// Sequents are searched up to the order of the antecedent. Weakening is only
// used at the leaves (an axiom closes any goal whose antecedent contains it),
// so a backward step never drops material: equality rules consume their
// operating equality and contraction duplicates a formula up to the cap.

#include <optional>
#include <string>
#include <vector>

#include "eqs/calculus.hpp"
#include "eqs/system.hpp"

namespace eqs {

struct BudgetInvalid : ProofError {
    using ProofError::ProofError;
};

// The system is outside what the search handles.
struct SearchUnsupported : ProofError {
    using ProofError::ProofError;
};

struct SearchBudget {
    // Sequents on the longest branch: an axiom alone has depth 1.
    std::size_t max_depth = 8;
    // Copies of one formula allowed in an antecedent.
    std::size_t multiplicity_cap = 3;
    // Terms allowed in visited sequents; nullopt means the subterms of the goal.
    std::optional<std::vector<Term>> universe;
};

struct SearchStats {
    std::size_t expanded = 0;
    std::size_t memo_hits = 0;
};

struct SearchResult {
    std::optional<Derivation> derivation;  // set iff Found
    SearchStats stats;

    bool found() const { return derivation.has_value(); }
};

struct ExhaustionCertificate {
    Sequent goal;
    std::string system;
    std::size_t max_depth = 0;
    std::size_t multiplicity_cap = 0;
    std::vector<Term> universe;  // sorted
    bool exhausted = false;
    // Every sequent class reached, antecedents sorted, the list sorted by text.
    std::vector<Sequent> visited;
    SearchStats stats;
    // Set when the goal turned out derivable.
    std::optional<Derivation> witness;
    // Optional invariant checked along every backward step, and its failures.
    std::string invariant;
    std::vector<std::string> invariant_failures;

    std::string text() const;
};

// Subterms of every term in the sequent, sorted.
std::vector<Term> subterm_closure(const Sequent &s);

// Iterative deepening up to the budget's depth. Throws BudgetInvalid for a
// zero depth or cap, and SearchUnsupported for systems with cut, Cng or
// EqElim, non-equational systems, or a goal without exactly one succedent
// formula. A found derivation re-checks in `sys`.
SearchResult prove(const Sequent &goal, const SystemSpec &sys, const SearchBudget &budget = {});

ExhaustionCertificate certify_underivable(const Sequent &goal, const SystemSpec &sys,
                                          const SearchBudget &budget = {});

// b=a => c=d from the extra axiom a=b => c=d. In a system with Eq1 and Eq1L
// but no Eq2 / Eq2L the invariant "some a=t in the antecedent" is checked on
// every step (forward: if the premiss has one, so does the conclusion); with
// Eq2 and Eq2L only, "some t=b". Other systems get no invariant.
ExhaustionCertificate check_nonderivable_symmetry(const SystemSpec &sys, const SearchBudget &budget = {});

}  // namespace eqs
