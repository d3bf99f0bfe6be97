#pragma once

// Helpers shared by the transform_*.cpp files.

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eqs/transform.hpp"

namespace eqs::detail {

void record(TransformTrace *trace, const char *pass, const char *step, const Measure &parent, const Measure &child);
void note(TransformTrace *trace, std::string text);

// Throws ProofError unless d ends with `expected`.
const Derivation &ensure_end(const Derivation &d, const Sequent &expected, const char *who);

std::vector<Formula> without(const std::vector<Formula> &v, const std::vector<std::size_t> &positions);
std::vector<Formula> concat(std::vector<Formula> a, const std::vector<Formula> &b);
std::vector<Formula> plus(std::vector<Formula> a, const Formula &f);
bool contains(const std::vector<Formula> &v, const Formula &f);
std::vector<std::size_t> positions_of(const std::vector<Formula> &v, const Formula &f);

VarSet vars_of(const Sequent &s);
VarSet vars_of(const std::vector<Formula> &fs);
// A variable occurring in none of the given terms and formulas.
std::string fresh_for(const std::vector<Term> &terms, const std::vector<Formula> &formulas = {});

// Pushes a join through the last rule of d. `cont` is called on every
// premiss holding some of the selected occurrences, with their positions
// there, and must return a derivation of that premiss's sequent minus those
// occurrences plus the fixed extra formulas the caller is adding. Premisses
// without selected occurrences are kept. If d ends with ForallR / ExistsL its
// eigenvariable is first renamed away from `avoid`. The result is the
// re-applied rule (or cont's result for a structural rule), not yet
// rearranged.
using Cont = std::function<Derivation(const Derivation &, const Occurrences &)>;
Derivation push_through(const Derivation &d, const Occurrences &sel, const Cont &cont, const VarSet &avoid);

// Rebuilds d bottom-up. `fn` receives a node and its already rebuilt
// premisses and returns the replacement; shared subtrees are rebuilt once.
using NodeFn = std::function<Derivation(const Derivation &, const std::vector<Derivation> &)>;
Derivation rebuild(const Derivation &d, const NodeFn &fn);

// Same node with new premisses proving the same sequents.
Derivation same_rule(const Derivation &node, const std::vector<Derivation> &premisses);

bool is_eq12(Rule r);  // Eq1, Eq2, Eq1L, Eq2L
bool has_rule(const Derivation &d, const std::function<bool(const Derivation &)> &pred);
bool atomic_cuts_and_eqs(const Derivation &d);

// Formula with the subterm at `at` replaced by the variable w.
Formula hole_at(const Formula &f, const Path &at, const std::string &w);

}  // namespace eqs::detail
