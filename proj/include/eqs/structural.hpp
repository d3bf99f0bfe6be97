#pragma once

// Bookkeeping shared by the transformations: weak structural rearrangement,
// ancestor tracking through a rule, rule re-application over grown
// premisses, and substitution over whole derivations.

#include <string>
#include <vector>

#include "eqs/calculus.hpp"

namespace eqs {

// Positions of selected formula occurrences in a sequent.
struct Occurrences {
    std::vector<std::size_t> ante;
    std::vector<std::size_t> succ;

    bool empty() const { return ante.empty() && succ.empty(); }
};

// Derives `target` from the endsequent of d by contraction, weakening and
// adjacent exchanges. Every formula of d's endsequent must occur in the
// corresponding side of `target`; throws ProofError otherwise.
Derivation rearrange(const Derivation &d, const Sequent &target);

// For every position of d's conclusion, the positions in premiss k that it
// descends from (two for a contracted formula, none for a formula the rule
// introduces).
struct AncestorMap {
    std::vector<std::vector<std::size_t>> ante;
    std::vector<std::vector<std::size_t>> succ;
};
AncestorMap ancestors(const Derivation &d, std::size_t k);

// The occurrences in premiss k that the selected conclusion occurrences
// descend from.
Occurrences premiss_occurrences(const Derivation &d, std::size_t k, const Occurrences &sel);

// True if some selected occurrence is not introduced by d's last rule.
bool has_context_occurrences(const Derivation &d, const Occurrences &sel);

// Selected occurrences that d's last rule introduces.
Occurrences introduced_occurrences(const Derivation &d, const Occurrences &sel);

// Re-applies d's last (non-structural) rule to new premisses. New premiss k
// must contain the formulas the rule consumes from premiss k of d; anything
// else it contains is treated as context. The conclusion is whatever the
// rule yields; callers rearrange it. Structural rules return premisses[0].
Derivation reapply(const Derivation &d, const std::vector<Derivation> &premisses);

// Sequent minus the selected occurrences, in order.
Sequent remove_occurrences(const Sequent &s, const Occurrences &sel);

// All free variables of all sequents and annotations in d.
VarSet derivation_vars(const Derivation &d);

// Replaces the free variable u by t throughout d. Eigenvariables and holes
// that would clash with t are renamed first; subtrees whose endsequent lacks
// u are shared unchanged.
Derivation substitute(const Derivation &d, const std::string &u, const Term &t);

// If d ends with ForallR / ExistsL whose eigenvariable is in `avoid`, renames
// it to a fresh variable. The endsequent is unchanged.
Derivation freshen_eigenvariable(const Derivation &d, const VarSet &avoid);

// Only axioms, reflexivity, left weakening/exchange/contraction, cut and the
// six equality rules, with exactly one succedent formula everywhere.
bool is_pure_equational(const Derivation &d);

}  // namespace eqs
