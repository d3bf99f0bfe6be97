#pragma once

// First-order terms, formulas and sequents.
//
// Free variables and bound variables live in disjoint syntactic classes:
// a free variable never sits under a binder that could capture it, so
// substituting a term for a free variable is capture-free by construction.
// Bound variables are de Bruijn indices carrying a display name; equality
// ignores the display name, so alpha-equivalent formulas compare equal.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqs {

struct ProofError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PathMismatch : ProofError {
    using ProofError::ProofError;
};

class Term {
public:
    enum class Kind : std::uint8_t { Free, Bound, Fun };

    Term() = default;

    static Term var(std::string name);
    static Term bound(std::uint32_t index, std::string hint);
    static Term fun(std::string symbol, std::vector<Term> args = {});

    bool null() const { return !node_; }
    Kind kind() const { return node_->kind; }
    bool is_var() const { return node_->kind == Kind::Free; }
    bool is_bound() const { return node_->kind == Kind::Bound; }
    bool is_fun() const { return node_->kind == Kind::Fun; }
    const std::string &name() const { return node_->name; }
    std::uint32_t index() const { return node_->index; }
    const std::vector<Term> &args() const { return node_->args; }

    // Number of symbols (function symbols and variables).
    std::size_t size() const { return node_->size; }
    std::size_t hash() const { return node_->hash; }

    std::string str() const;

    friend bool operator==(const Term &a, const Term &b);
    friend std::strong_ordering operator<=>(const Term &a, const Term &b);

private:
    struct Node {
        Kind kind;
        std::string name;
        std::uint32_t index;
        std::vector<Term> args;
        std::size_t hash;
        std::size_t size;
    };
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Term make(Kind k, std::string name, std::uint32_t index, std::vector<Term> args);
    std::shared_ptr<const Node> node_;
};

class Formula {
public:
    enum class Kind : std::uint8_t { Atom, Not, And, Or, Imp, Forall, Exists };

    Formula() = default;

    static Formula atom(std::string pred, std::vector<Term> args = {});
    static Formula eq(Term lhs, Term rhs);
    static Formula neg(Formula f);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula imp(Formula a, Formula b);
    // `body` refers to the new binder through Term::bound(0, ...).
    static Formula forall(std::string hint, Formula body);
    static Formula exists(std::string hint, Formula body);
    // Binds every occurrence of the free variable `var` in `body`.
    static Formula forall_over(const std::string &var, const Formula &body, std::string hint = "x");
    static Formula exists_over(const std::string &var, const Formula &body, std::string hint = "x");

    bool null() const { return !node_; }
    Kind kind() const { return node_->kind; }
    bool is_atom() const { return node_->kind == Kind::Atom; }
    bool is_eq() const { return is_atom() && node_->name == "=" && node_->terms.size() == 2; }
    bool is_quantifier() const { return node_->kind == Kind::Forall || node_->kind == Kind::Exists; }

    // Predicate symbol for atoms, display name of the binder for quantifiers.
    const std::string &name() const { return node_->name; }
    const std::vector<Term> &terms() const { return node_->terms; }
    const std::vector<Formula> &children() const { return node_->children; }
    const Formula &child(std::size_t i) const { return node_->children.at(i); }
    const Term &lhs() const { return node_->terms.at(0); }
    const Term &rhs() const { return node_->terms.at(1); }

    std::size_t hash() const { return node_->hash; }
    std::string str() const;

    friend bool operator==(const Formula &a, const Formula &b);
    friend std::strong_ordering operator<=>(const Formula &a, const Formula &b);

private:
    struct Node {
        Kind kind;
        std::string name;
        std::vector<Term> terms;
        std::vector<Formula> children;
        std::size_t hash;
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Formula make(Kind k, std::string name, std::vector<Term> terms, std::vector<Formula> children);
    std::shared_ptr<const Node> node_;
};

struct Sequent {
    std::vector<Formula> ante;
    std::vector<Formula> succ;

    std::string str() const;
    friend bool operator==(const Sequent &, const Sequent &) = default;
};

using VarSet = std::set<std::string>;

// Root-to-leaf path: formula child indices, then the argument index inside
// an atom, then argument indices inside terms.
using Path = std::vector<std::uint32_t>;

Term subst(const Term &t, const std::string &var, const Term &r);
Formula subst(const Formula &f, const std::string &var, const Term &r);
Sequent subst(const Sequent &s, const std::string &var, const Term &r);

// For a quantifier `q`, its body with the outermost bound variable replaced by `t`.
Formula instantiate(const Formula &q, const Term &t);

bool occurs(const std::string &var, const Term &t);
bool occurs(const std::string &var, const Formula &f);
bool occurs(const std::string &var, const Sequent &s);
void collect_vars(const Term &t, VarSet &out);
void collect_vars(const Formula &f, VarSet &out);
void collect_vars(const Sequent &s, VarSet &out);
std::size_t count_occurrences(const std::string &var, const Formula &f);

// Connective and quantifier count; 0 iff atomic.
std::size_t degree(const Formula &f);
std::size_t max_term_size(const Formula &f);

// Smallest identifier v0, v1, ... not in `avoid`.
std::string fresh_var(const VarSet &avoid);

std::vector<Path> occurrences(const Formula &f, const Term &target);
std::vector<Path> var_occurrences(const Formula &f, const std::string &var);
Term term_at(const Formula &f, const Path &p);
Formula replace_at(const Formula &f, const Path &p, const Term &replacement);

bool is_prefix(const Path &prefix, const Path &p);

// The pair (skeleton, hole) read as skeleton{hole/t}.
struct Abstraction {
    Formula skeleton;
    std::string hole;

    Formula apply(const Term &t) const { return subst(skeleton, hole, t); }
    std::size_t hole_count() const { return count_occurrences(hole, skeleton); }
    bool trivial() const { return hole_count() == 0; }
    bool singleton() const { return hole_count() == 1; }
    std::string str() const;

    friend bool operator==(const Abstraction &, const Abstraction &) = default;
};

// Abstracts the occurrences of `target` at `positions`, which must each
// address `target`; `fresh` must not occur in `f`.
Abstraction abstract_occurrences(const Formula &f, const Term &target, const std::vector<Path> &positions,
                                 const std::string &fresh);

// All 2^k abstractions of the k occurrences of `target`, ordered
// lexicographically on the chosen position sets (empty set first).
std::vector<Abstraction> enumerate_abstractions(const Formula &f, const Term &target);

std::string str(const std::vector<Formula> &fs);

}  // namespace eqs

template <>
struct std::hash<eqs::Term> {
    std::size_t operator()(const eqs::Term &t) const noexcept { return t.hash(); }
};
template <>
struct std::hash<eqs::Formula> {
    std::size_t operator()(const eqs::Formula &f) const noexcept { return f.hash(); }
};
