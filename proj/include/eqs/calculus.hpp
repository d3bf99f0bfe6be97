#pragma once

// Rule schemas and derivation trees.
//
// Sequents are ordered. Rules act on the end of each side: principal and
// active formulas are the last antecedent / last succedent formulas, except
// for exchange and contraction (explicit index) and the left equality rules
// (explicit index of the changed antecedent formula; the operating equality
// is still appended last).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqs/order.hpp"
#include "eqs/syntax.hpp"

namespace eqs {

struct SchemaMismatch : ProofError {
    using ProofError::ProofError;
};

enum class Rule : std::uint8_t {
    Ax,
    Refl,
    Hyp,  // leaf proving one of the system's extra axiom sequents
    WeakL,
    WeakR,
    ExchL,
    ExchR,
    ContrL,
    ContrR,
    Cut,
    AndL1,
    AndL2,
    AndR,
    OrL,
    OrR1,
    OrR2,
    ImpL,
    ImpR,
    NotL,
    NotR,
    ForallL,
    ForallR,
    ExistsL,
    ExistsR,
    Eq1,
    Eq2,
    Eq1L,
    Eq2L,
    EqElim,
    Cng,
};

inline constexpr int kRuleCount = static_cast<int>(Rule::Cng) + 1;

// Short lowercase names used by the document format: ax, refl, wl, ...
const char *rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string &name);

std::size_t premiss_count(Rule r);
bool is_axiom(Rule r);
bool is_structural(Rule r);  // weakening, exchange, contraction
bool is_logical(Rule r);
bool is_equality(Rule r);    // Eq1, Eq2, Eq1L, Eq2L, EqElim, Cng
bool is_left_eq(Rule r);     // Eq1L, Eq2L

// One record for every rule; each rule reads only its own fields.
//   f      axiom formula, weakened formula, cut formula, or principal formula
//   t      reflexivity term, instance term of ForallL / ExistsR
//   u      eigenvariable of ForallR / ExistsL
//   i      exchange / contraction position, target index of Eq1L / Eq2L
//   ab,r,s equality witness: premiss holds ab{r}, conclusion ab{s}
//   la,ls  antecedent / succedent length of the first premiss's context
//          (Cut, ImpL, EqElim, Cng)
struct RuleApp {
    Rule rule = Rule::Ax;
    Formula f;
    Term t;
    std::string u;
    std::size_t i = 0;
    Abstraction ab;
    Term r, s;
    std::size_t la = 0, ls = 0;

    // The operating equality of an equality rule: r=s for Eq1, Eq1L, EqElim
    // and Cng's right premiss; s=r for Eq2, Eq2L.
    Formula operating_equality() const;
    std::string str() const;
};

class Derivation {
public:
    Derivation() = default;

    // Unchecked constructor; see apply() for the checked forward builder.
    static Derivation make(Sequent conclusion, RuleApp app, std::vector<Derivation> premisses);

    bool null() const { return !node_; }
    const Sequent &conclusion() const { return node_->conclusion; }
    const RuleApp &app() const { return node_->app; }
    Rule rule() const { return node_->app.rule; }
    const std::vector<Derivation> &premisses() const { return node_->premisses; }
    const Derivation &premiss(std::size_t i) const { return node_->premisses.at(i); }

    // Axioms have height 0.
    std::size_t height() const { return node_->height; }
    std::size_t node_count() const { return node_->nodes; }
    // Only axioms, reflexivity, left weakening/exchange/contraction, cut and
    // equality rules, with exactly one succedent formula everywhere.
    bool pure_equational() const { return node_->pure_eq; }

    bool same_node(const Derivation &o) const { return node_ == o.node_; }
    // Identity of the shared node; equal ids imply equal trees.
    const void *id() const { return node_.get(); }
    friend bool operator==(const Derivation &a, const Derivation &b);

private:
    struct Node {
        Sequent conclusion;
        RuleApp app;
        std::vector<Derivation> premisses;
        std::size_t height;
        std::size_t nodes;
        bool pure_eq;
    };
    explicit Derivation(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// The premisses forced by the rule and the conclusion. Throws SchemaMismatch.
std::vector<Sequent> premiss_schema(const RuleApp &app, const Sequent &conclusion);

// The conclusion forced by the rule and the premisses. Throws SchemaMismatch.
Sequent conclusion_schema(const RuleApp &app, const std::vector<Sequent> &premisses);

// Builds the node after computing its conclusion from the premisses.
Derivation apply(const RuleApp &app, std::vector<Derivation> premisses);

// For ForallR / ExistsL: the eigenvariable does not occur in the conclusion.
// Other rules trivially satisfy it.
bool eigen_condition(const RuleApp &app, const Sequent &conclusion);

enum class OrderClass { NotEquality, Lengthening, Nonlengthening, Shortening };
const char *order_class_name(OrderClass c);

// Eq1, Eq2, Eq1L, Eq2L: shortening iff r<s, otherwise nonlengthening iff not
// s<r, otherwise lengthening. Every other rule is NotEquality.
OrderClass order_predicate(const RuleApp &app, const TermOrder &order);

// Builders. Each computes its conclusion from the premisses and throws
// SchemaMismatch when the premisses have the wrong shape.
namespace mk {

Derivation ax(const Formula &f);
Derivation refl(const Term &t);
Derivation hyp(const Sequent &s);
Derivation weak_l(const Derivation &d, const Formula &f);
Derivation weak_r(const Derivation &d, const Formula &f);
Derivation exch_l(const Derivation &d, std::size_t i);
Derivation exch_r(const Derivation &d, std::size_t i);
Derivation contr_l(const Derivation &d, std::size_t i);
Derivation contr_r(const Derivation &d, std::size_t i);
// Cut formula is the last succedent formula of d and the last antecedent formula of e.
Derivation cut(const Derivation &d, const Derivation &e);
Derivation and_l1(const Derivation &d, const Formula &principal);
Derivation and_l2(const Derivation &d, const Formula &principal);
Derivation and_r(const Derivation &d, const Derivation &e);
Derivation or_l(const Derivation &d, const Derivation &e);
Derivation or_r1(const Derivation &d, const Formula &principal);
Derivation or_r2(const Derivation &d, const Formula &principal);
Derivation imp_l(const Derivation &d, const Derivation &e);
Derivation imp_r(const Derivation &d);
Derivation not_l(const Derivation &d);
Derivation not_r(const Derivation &d);
Derivation forall_l(const Derivation &d, const Formula &principal, const Term &t);
Derivation forall_r(const Derivation &d, const Formula &principal, const std::string &u);
Derivation exists_l(const Derivation &d, const Formula &principal, const std::string &u);
Derivation exists_r(const Derivation &d, const Formula &principal, const Term &t);
Derivation eq1(const Derivation &d, const Abstraction &ab, const Term &r, const Term &s);
Derivation eq2(const Derivation &d, const Abstraction &ab, const Term &r, const Term &s);
Derivation eq1l(const Derivation &d, const Abstraction &ab, const Term &r, const Term &s, std::size_t idx);
Derivation eq2l(const Derivation &d, const Abstraction &ab, const Term &r, const Term &s, std::size_t idx);
Derivation eq_elim(const Derivation &d, const Derivation &e, const Abstraction &ab, const Term &r, const Term &s);
Derivation cng(const Derivation &d, const Derivation &e, const Abstraction &ab, const Term &r, const Term &s);

}  // namespace mk

}  // namespace eqs
