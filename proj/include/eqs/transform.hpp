#pragma once

// Derivation-to-derivation transformations: atomization, separation, cut
// elimination for the equational calculi and their logical extensions, the
// singleton and transposition constructions, and semishortening.
//
// Every function returns a derivation whose endsequent is the input's (or
// the one stated next to the function) and throws ProofError if that fails
// to hold, so a wrong result is never returned silently.

#include <string>
#include <vector>

#include "eqs/calculus.hpp"
#include "eqs/structural.hpp"
#include "eqs/system.hpp"

namespace eqs {

struct PreconditionViolation : ProofError {
    using ProofError::ProofError;
};

using Measure = std::vector<std::size_t>;

// Lexicographic.
bool measure_less(const Measure &a, const Measure &b);
std::string measure_str(const Measure &m);

// One recursive call: the measure of the caller and of the callee.
struct TraceEntry {
    std::string pass;
    std::string step;
    Measure parent;
    Measure child;
};

struct TransformTrace {
    std::vector<TraceEntry> entries;
    std::vector<std::string> notes;  // non-recursive events, e.g. fast paths taken

    // First entry whose child measure is not below its parent's, if any.
    const TraceEntry *first_violation() const;
    std::size_t count(const std::string &pass) const;
    std::size_t count_note(const std::string &prefix) const;
};

// Extra occurrences of the cut formula: positions in the succedent of the
// left derivation and in the antecedent of the right one.
struct JoinSpec {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;

    // The last succedent formula of d and the last antecedent formula of e.
    static JoinSpec ends(const Derivation &d, const Derivation &e);
};

// Which equality rule a construction imitates: One for r=s / Eq1, Two for
// s=r / Eq2.
enum class EqDir { One, Two };

// F{v/r}, r=s => F{v/s} (One) or F{v/r}, s=r => F{v/s} (Two), cut-free, with
// atomic equality inferences only. Recursion on the degree of F.
Derivation basic_atomic(const Formula &f, const std::string &v, const Term &r, const Term &s, EqDir dir,
                        TransformTrace *trace = nullptr);

// Replaces each non-atomic Eq1/Eq2 inference by a cut against basic_atomic.
Derivation atomize_equalities(const Derivation &d, TransformTrace *trace = nullptr);

// From D of Γ => Δ♯F and E of Λ♯F => Θ, both with atomic equality and cut
// inferences only, a derivation of Γ, Λ => Δ, Θ of the same kind. Δ and Λ are
// the sides minus the positions in `spec`.
Derivation join_with_atomic_cut(const Derivation &d, const Derivation &e, const Formula &f, const JoinSpec &spec,
                                TransformTrace *trace = nullptr);

// atomize_equalities, then every non-atomic cut discharged by
// join_with_atomic_cut, topmost first.
Derivation to_atomic(const Derivation &d, TransformTrace *trace = nullptr);

// From a separated D of Γ => Δ♯A{v/r} (A atomic; `extras` are the succedent
// positions of A{v/r} not in Δ), a separated derivation of Γ, r=s => Δ, A{v/s}
// (One) or Γ, s=r => Δ, A{v/s} (Two).
Derivation sep_eq_step(const Derivation &d, const Abstraction &ab, const Term &r, const Term &s, EqDir dir,
                       const std::vector<std::size_t> &extras, TransformTrace *trace = nullptr);

// From separated D of Γ => Δ♯A and E of Λ♯A => Θ, a separated derivation of
// Γ, Λ => Δ, Θ.
Derivation sep_cut_step(const Derivation &d, const Derivation &e, const Formula &a, const JoinSpec &spec,
                        TransformTrace *trace = nullptr);

// Every cut and equality inference sits inside a purely equational
// subderivation.
bool is_separated(const Derivation &d);

// to_atomic, then separation bottom-up.
Derivation separate(const Derivation &d, TransformTrace *trace = nullptr);

enum class CngDirection { ToEqn, ToEq };

// ToEqn: Eq1 and Eq2 become Cng inferences. ToEq: Cng becomes Eq1 plus an
// atomic cut on the operating equality. Other rules are kept.
Derivation eq_cng_interderive(const Derivation &d, CngDirection dir);

// From cut-free D of Γ => F and E of Λ♯F => G, a cut-free derivation of
// Γ, Λ => G. `extras` are antecedent positions of E.
Derivation cng_cut_join(const Derivation &d, const Derivation &e, const Formula &f,
                        const std::vector<std::size_t> &extras, TransformTrace *trace = nullptr);

// Cut elimination in the Cng calculus, topmost cut first.
Derivation eliminate_cuts_eqn(const Derivation &d, TransformTrace *trace = nullptr);

// From cut-free EQ derivations D of Γ => F{v/r} and E of Λ => r=s, a cut-free
// EQ derivation of Γ, Λ => F{v/s}. `ab` is (F, v).
Derivation admit_cng(const Derivation &d, const Derivation &e, const Abstraction &ab, const Term &r,
                     const Term &s, TransformTrace *trace = nullptr);

// Eq1L / Eq2L inferences rewritten with Eq1 / Eq2 and an atomic cut.
Derivation eq12_to_eq(const Derivation &d);

// Cut elimination for the equational calculus: to Cng form, eliminate cuts
// there, then replay every Cng through admit_cng. Eq1L / Eq2L inputs are
// first rewritten by eq12_to_eq.
Derivation eliminate_cuts_eq(const Derivation &d, TransformTrace *trace = nullptr);

// Cut elimination for LJ=/LK= (and the Cng variants): separate, then
// eliminate cuts inside each purely equational subderivation. For the =_1 and
// =_2 variants those subderivations are then transposed into EQ1 / EQ2.
Derivation eliminate_cuts_full(const Derivation &d, const SystemSpec &sys, TransformTrace *trace = nullptr);

// Cut-free LJ=/LK= derivation (Eq1, Eq2, Eq1L, Eq2L) rewritten with EqElim and
// reflexivity axioms only.
Derivation embed_pure(const Derivation &d);

// Every equality inference (Eq1, Eq2, Eq1L, Eq2L) with k > 1 hole
// occurrences replaced by k singleton inferences and k-1 contractions.
Derivation singletonize(const Derivation &d);

enum class EqTarget { Eq1, Eq2 };

// Cut-free EQ derivation rewritten into cut-free EQ_1 (Eq1, Eq1L) or EQ_2
// (Eq2, Eq2L), by admissibility of the missing rule.
Derivation transpose_eq(const Derivation &d, EqTarget target, TransformTrace *trace = nullptr);

// The operations G1 (dir One) and G2 (dir Two): from a semishortening
// cut-free EQ_12 derivation of Γ => F{v/r}, one of Γ, r=s => F{v/s} or
// Γ, s=r => F{v/s}, again semishortening.
Derivation g_transform(const Derivation &d, const Abstraction &ab, const Term &r, const Term &s, EqDir dir,
                       const TermOrder &order, TransformTrace *trace = nullptr);

// A cut-free semishortening EQ_12 derivation of the endsequent of an EQ_12
// derivation.
Derivation semishorten(const Derivation &d, const TermOrder &order, TransformTrace *trace = nullptr);

// From D of Γ, r=s => Δ (r=s at antecedent position `index`), a derivation of
// the same sequent with s=r at that position, in the cut-free system `sys`
// (cf.EQ, cf.EQ1, cf.EQ2 or cf.EQ12).
Derivation left_symmetry(const Derivation &d, std::size_t index, const SystemSpec &sys,
                         TransformTrace *trace = nullptr);

// For D in LK= without logical rules, a derivation of Γ => F for some F of Δ
// whose sequents all have one succedent formula.
Derivation project_intuitionistic(const Derivation &d);

}  // namespace eqs
