#include "eqs/syntax.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace eqs {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// ---------------------------------------------------------------------------
// Term

Term Term::make(Kind k, std::string name, std::uint32_t index, std::vector<Term> args) {
    std::size_t h = std::hash<int>{}(static_cast<int>(k));
    std::size_t size = 1;
    if (k == Kind::Bound)
        h = mix(h, index);
    else
        h = mix(h, std::hash<std::string>{}(name));
    for (const auto &a : args) {
        h = mix(h, a.hash());
        size += a.size();
    }
    return Term(std::make_shared<const Node>(Node{k, std::move(name), index, std::move(args), h, size}));
}

Term Term::var(std::string name) { return make(Kind::Free, std::move(name), 0, {}); }

Term Term::bound(std::uint32_t index, std::string hint) { return make(Kind::Bound, std::move(hint), index, {}); }

Term Term::fun(std::string symbol, std::vector<Term> args) {
    return make(Kind::Fun, std::move(symbol), 0, std::move(args));
}

bool operator==(const Term &a, const Term &b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
    if (a.is_bound()) return a.index() == b.index();
    if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
    for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!(a.args()[i] == b.args()[i])) return false;
    return true;
}

std::strong_ordering operator<=>(const Term &a, const Term &b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (!a.node_) return std::strong_ordering::less;
    if (!b.node_) return std::strong_ordering::greater;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    if (a.is_bound()) return a.index() <=> b.index();
    if (auto c = a.name() <=> b.name(); c != 0) return c;
    if (auto c = a.args().size() <=> b.args().size(); c != 0) return c;
    for (std::size_t i = 0; i < a.args().size(); ++i)
        if (auto c = a.args()[i] <=> b.args()[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

namespace {

void print_term(std::ostream &os, const Term &t, const std::vector<std::string> &scope) {
    switch (t.kind()) {
        case Term::Kind::Free:
            os << t.name();
            return;
        case Term::Kind::Bound:
            if (t.index() < scope.size())
                os << scope[scope.size() - 1 - t.index()];
            else
                os << t.name();
            return;
        case Term::Kind::Fun:
            os << t.name() << '(';
            for (std::size_t i = 0; i < t.args().size(); ++i) {
                if (i) os << ',';
                print_term(os, t.args()[i], scope);
            }
            os << ')';
            return;
    }
}

}  // namespace

std::string Term::str() const {
    if (null()) return "<null>";
    std::ostringstream os;
    print_term(os, *this, {});
    return os.str();
}

// ---------------------------------------------------------------------------
// Formula

Formula Formula::make(Kind k, std::string name, std::vector<Term> terms, std::vector<Formula> children) {
    std::size_t h = std::hash<int>{}(static_cast<int>(k) + 17);
    if (k == Kind::Atom) h = mix(h, std::hash<std::string>{}(name));
    for (const auto &t : terms) h = mix(h, t.hash());
    for (const auto &c : children) h = mix(h, c.hash());
    return Formula(
        std::make_shared<const Node>(Node{k, std::move(name), std::move(terms), std::move(children), h}));
}

Formula Formula::atom(std::string pred, std::vector<Term> args) {
    return make(Kind::Atom, std::move(pred), std::move(args), {});
}
Formula Formula::eq(Term lhs, Term rhs) { return atom("=", {std::move(lhs), std::move(rhs)}); }
Formula Formula::neg(Formula f) { return make(Kind::Not, "", {}, {std::move(f)}); }
Formula Formula::conj(Formula a, Formula b) { return make(Kind::And, "", {}, {std::move(a), std::move(b)}); }
Formula Formula::disj(Formula a, Formula b) { return make(Kind::Or, "", {}, {std::move(a), std::move(b)}); }
Formula Formula::imp(Formula a, Formula b) { return make(Kind::Imp, "", {}, {std::move(a), std::move(b)}); }
Formula Formula::forall(std::string hint, Formula body) {
    return make(Kind::Forall, std::move(hint), {}, {std::move(body)});
}
Formula Formula::exists(std::string hint, Formula body) {
    return make(Kind::Exists, std::move(hint), {}, {std::move(body)});
}

namespace {

Term bind_term(const Term &t, const std::string &var, std::uint32_t depth, const std::string &hint) {
    switch (t.kind()) {
        case Term::Kind::Free:
            return t.name() == var ? Term::bound(depth, hint) : t;
        case Term::Kind::Bound:
            return t;
        case Term::Kind::Fun: {
            std::vector<Term> args;
            args.reserve(t.args().size());
            for (const auto &a : t.args()) args.push_back(bind_term(a, var, depth, hint));
            return Term::fun(t.name(), std::move(args));
        }
    }
    return t;
}

Formula bind_var(const Formula &f, const std::string &var, std::uint32_t depth, const std::string &hint) {
    if (f.is_atom()) {
        std::vector<Term> ts;
        for (const auto &t : f.terms()) ts.push_back(bind_term(t, var, depth, hint));
        return Formula::atom(f.name(), std::move(ts));
    }
    switch (f.kind()) {
        case Formula::Kind::Not:
            return Formula::neg(bind_var(f.child(0), var, depth, hint));
        case Formula::Kind::And:
            return Formula::conj(bind_var(f.child(0), var, depth, hint), bind_var(f.child(1), var, depth, hint));
        case Formula::Kind::Or:
            return Formula::disj(bind_var(f.child(0), var, depth, hint), bind_var(f.child(1), var, depth, hint));
        case Formula::Kind::Imp:
            return Formula::imp(bind_var(f.child(0), var, depth, hint), bind_var(f.child(1), var, depth, hint));
        case Formula::Kind::Forall:
            return Formula::forall(f.name(), bind_var(f.child(0), var, depth + 1, hint));
        case Formula::Kind::Exists:
            return Formula::exists(f.name(), bind_var(f.child(0), var, depth + 1, hint));
        default:
            return f;
    }
}

}  // namespace

Formula Formula::forall_over(const std::string &var, const Formula &body, std::string hint) {
    return forall(hint, bind_var(body, var, 0, hint));
}

Formula Formula::exists_over(const std::string &var, const Formula &body, std::string hint) {
    return exists(hint, bind_var(body, var, 0, hint));
}

bool operator==(const Formula &a, const Formula &b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
    if (a.is_atom() && a.name() != b.name()) return false;
    if (a.terms() != b.terms() || a.children().size() != b.children().size()) return false;
    for (std::size_t i = 0; i < a.children().size(); ++i)
        if (!(a.children()[i] == b.children()[i])) return false;
    return true;
}

std::strong_ordering operator<=>(const Formula &a, const Formula &b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (!a.node_) return std::strong_ordering::less;
    if (!b.node_) return std::strong_ordering::greater;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    if (a.is_atom()) {
        if (auto c = a.name() <=> b.name(); c != 0) return c;
        if (auto c = a.terms().size() <=> b.terms().size(); c != 0) return c;
        for (std::size_t i = 0; i < a.terms().size(); ++i)
            if (auto c = a.terms()[i] <=> b.terms()[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
    for (std::size_t i = 0; i < a.children().size(); ++i)
        if (auto c = a.children()[i] <=> b.children()[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

namespace {

// Binder display names avoid the body's free variables and every enclosing
// display name, so the printed text re-parses to the same formula.
std::string display_name(const Formula &q, const std::vector<std::string> &scope) {
    VarSet avoid;
    collect_vars(q.child(0), avoid);
    avoid.insert(scope.begin(), scope.end());
    std::string base = q.name().empty() ? "x" : q.name();
    if (!avoid.count(base)) return base;
    for (int i = 1;; ++i) {
        std::string cand = base + std::to_string(i);
        if (!avoid.count(cand)) return cand;
    }
}

int precedence(const Formula &f) {
    switch (f.kind()) {
        case Formula::Kind::Imp:
            return 1;
        case Formula::Kind::Or:
            return 2;
        case Formula::Kind::And:
            return 3;
        case Formula::Kind::Not:
            return 4;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            return 0;
        default:
            return 5;
    }
}

void print_formula(std::ostream &os, const Formula &f, std::vector<std::string> &scope, int ctx) {
    bool paren = precedence(f) < ctx || (precedence(f) == 0 && ctx > 0);
    if (paren) os << '(';
    switch (f.kind()) {
        case Formula::Kind::Atom:
            if (f.is_eq()) {
                print_term(os, f.lhs(), scope);
                os << " = ";
                print_term(os, f.rhs(), scope);
            } else {
                os << f.name();
                if (!f.terms().empty()) {
                    os << '(';
                    for (std::size_t i = 0; i < f.terms().size(); ++i) {
                        if (i) os << ',';
                        print_term(os, f.terms()[i], scope);
                    }
                    os << ')';
                }
            }
            break;
        case Formula::Kind::Not:
            os << '~';
            print_formula(os, f.child(0), scope, 4);
            break;
        case Formula::Kind::And:
            print_formula(os, f.child(0), scope, 4);
            os << " & ";
            print_formula(os, f.child(1), scope, 3);
            break;
        case Formula::Kind::Or:
            print_formula(os, f.child(0), scope, 3);
            os << " | ";
            print_formula(os, f.child(1), scope, 2);
            break;
        case Formula::Kind::Imp:
            print_formula(os, f.child(0), scope, 2);
            os << " -> ";
            print_formula(os, f.child(1), scope, 1);
            break;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            std::string name = display_name(f, scope);
            os << (f.kind() == Formula::Kind::Forall ? "forall " : "exists ") << name << ". ";
            scope.push_back(name);
            print_formula(os, f.child(0), scope, 0);
            scope.pop_back();
            break;
        }
    }
    if (paren) os << ')';
}

}  // namespace

std::string Formula::str() const {
    if (null()) return "<null>";
    std::ostringstream os;
    std::vector<std::string> scope;
    print_formula(os, *this, scope, 0);
    return os.str();
}

std::string str(const std::vector<Formula> &fs) {
    std::string out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) out += ", ";
        out += fs[i].str();
    }
    return out;
}

std::string Sequent::str() const {
    std::string a = eqs::str(ante), s = eqs::str(succ);
    std::string out = a;
    if (!a.empty()) out += ' ';
    out += "=>";
    if (!s.empty()) out += ' ' + s;
    return out;
}

std::string Abstraction::str() const { return "(" + skeleton.str() + ", " + hole + ")"; }

// ---------------------------------------------------------------------------
// Substitution and variable queries

Term subst(const Term &t, const std::string &var, const Term &r) {
    switch (t.kind()) {
        case Term::Kind::Free:
            return t.name() == var ? r : t;
        case Term::Kind::Bound:
            return t;
        case Term::Kind::Fun: {
            bool changed = false;
            std::vector<Term> args;
            args.reserve(t.args().size());
            for (const auto &a : t.args()) {
                args.push_back(subst(a, var, r));
                changed = changed || !(args.back() == a);
            }
            return changed ? Term::fun(t.name(), std::move(args)) : t;
        }
    }
    return t;
}

namespace {

template <class TermFn>
Formula map_terms(const Formula &f, const TermFn &fn, std::uint32_t depth) {
    switch (f.kind()) {
        case Formula::Kind::Atom: {
            std::vector<Term> ts;
            ts.reserve(f.terms().size());
            for (const auto &t : f.terms()) ts.push_back(fn(t, depth));
            if (ts == f.terms()) return f;
            return Formula::atom(f.name(), std::move(ts));
        }
        case Formula::Kind::Not:
            return Formula::neg(map_terms(f.child(0), fn, depth));
        case Formula::Kind::And:
            return Formula::conj(map_terms(f.child(0), fn, depth), map_terms(f.child(1), fn, depth));
        case Formula::Kind::Or:
            return Formula::disj(map_terms(f.child(0), fn, depth), map_terms(f.child(1), fn, depth));
        case Formula::Kind::Imp:
            return Formula::imp(map_terms(f.child(0), fn, depth), map_terms(f.child(1), fn, depth));
        case Formula::Kind::Forall:
            return Formula::forall(f.name(), map_terms(f.child(0), fn, depth + 1));
        case Formula::Kind::Exists:
            return Formula::exists(f.name(), map_terms(f.child(0), fn, depth + 1));
    }
    return f;
}

Term replace_bound(const Term &t, std::uint32_t depth, const Term &r) {
    switch (t.kind()) {
        case Term::Kind::Bound:
            return t.index() == depth ? r : t;
        case Term::Kind::Free:
            return t;
        case Term::Kind::Fun: {
            std::vector<Term> args;
            for (const auto &a : t.args()) args.push_back(replace_bound(a, depth, r));
            return Term::fun(t.name(), std::move(args));
        }
    }
    return t;
}

}  // namespace

Formula subst(const Formula &f, const std::string &var, const Term &r) {
    if (!occurs(var, f)) return f;
    return map_terms(f, [&](const Term &t, std::uint32_t) { return subst(t, var, r); }, 0);
}

Sequent subst(const Sequent &s, const std::string &var, const Term &r) {
    Sequent out;
    for (const auto &f : s.ante) out.ante.push_back(subst(f, var, r));
    for (const auto &f : s.succ) out.succ.push_back(subst(f, var, r));
    return out;
}

Formula instantiate(const Formula &q, const Term &t) {
    if (!q.is_quantifier()) throw ProofError("instantiate: not a quantifier: " + q.str());
    return map_terms(q.child(0), [&](const Term &u, std::uint32_t depth) { return replace_bound(u, depth, t); }, 0);
}

bool occurs(const std::string &var, const Term &t) {
    if (t.is_var()) return t.name() == var;
    for (const auto &a : t.args())
        if (occurs(var, a)) return true;
    return false;
}

bool occurs(const std::string &var, const Formula &f) {
    for (const auto &t : f.terms())
        if (occurs(var, t)) return true;
    for (const auto &c : f.children())
        if (occurs(var, c)) return true;
    return false;
}

bool occurs(const std::string &var, const Sequent &s) {
    for (const auto &f : s.ante)
        if (occurs(var, f)) return true;
    for (const auto &f : s.succ)
        if (occurs(var, f)) return true;
    return false;
}

void collect_vars(const Term &t, VarSet &out) {
    if (t.is_var()) out.insert(t.name());
    for (const auto &a : t.args()) collect_vars(a, out);
}

void collect_vars(const Formula &f, VarSet &out) {
    for (const auto &t : f.terms()) collect_vars(t, out);
    for (const auto &c : f.children()) collect_vars(c, out);
}

void collect_vars(const Sequent &s, VarSet &out) {
    for (const auto &f : s.ante) collect_vars(f, out);
    for (const auto &f : s.succ) collect_vars(f, out);
}

namespace {

std::size_t count_in_term(const std::string &var, const Term &t) {
    if (t.is_var()) return t.name() == var ? 1 : 0;
    std::size_t n = 0;
    for (const auto &a : t.args()) n += count_in_term(var, a);
    return n;
}

std::size_t max_size(const Term &t) { return t.size(); }

}  // namespace

std::size_t count_occurrences(const std::string &var, const Formula &f) {
    std::size_t n = 0;
    for (const auto &t : f.terms()) n += count_in_term(var, t);
    for (const auto &c : f.children()) n += count_occurrences(var, c);
    return n;
}

std::size_t degree(const Formula &f) {
    if (f.is_atom()) return 0;
    std::size_t d = 1;
    for (const auto &c : f.children()) d += degree(c);
    return d;
}

std::size_t max_term_size(const Formula &f) {
    std::size_t m = 0;
    for (const auto &t : f.terms()) m = std::max(m, max_size(t));
    for (const auto &c : f.children()) m = std::max(m, max_term_size(c));
    return m;
}

std::string fresh_var(const VarSet &avoid) {
    for (std::size_t i = 0;; ++i) {
        std::string cand = "v" + std::to_string(i);
        if (!avoid.count(cand)) return cand;
    }
}

// ---------------------------------------------------------------------------
// Occurrence paths

namespace {

void term_occurrences(const Term &t, const std::function<bool(const Term &)> &pred, Path &cur,
                      std::vector<Path> &out) {
    if (pred(t)) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t i = 0; i < t.args().size(); ++i) {
        cur.push_back(i);
        term_occurrences(t.args()[i], pred, cur, out);
        cur.pop_back();
    }
}

void formula_occurrences(const Formula &f, const std::function<bool(const Term &)> &pred, Path &cur,
                         std::vector<Path> &out) {
    if (f.is_atom()) {
        for (std::uint32_t i = 0; i < f.terms().size(); ++i) {
            cur.push_back(i);
            term_occurrences(f.terms()[i], pred, cur, out);
            cur.pop_back();
        }
        return;
    }
    for (std::uint32_t i = 0; i < f.children().size(); ++i) {
        cur.push_back(i);
        formula_occurrences(f.children()[i], pred, cur, out);
        cur.pop_back();
    }
}

Term replace_in_term(const Term &t, const Path &p, std::size_t at, const Term &repl) {
    if (at == p.size()) return repl;
    if (!t.is_fun() || p[at] >= t.args().size()) throw PathMismatch("path leaves term " + t.str());
    std::vector<Term> args = t.args();
    args[p[at]] = replace_in_term(args[p[at]], p, at + 1, repl);
    return Term::fun(t.name(), std::move(args));
}

const Term &term_in_term(const Term &t, const Path &p, std::size_t at) {
    if (at == p.size()) return t;
    if (!t.is_fun() || p[at] >= t.args().size()) throw PathMismatch("path leaves term " + t.str());
    return term_in_term(t.args()[p[at]], p, at + 1);
}

}  // namespace

std::vector<Path> occurrences(const Formula &f, const Term &target) {
    std::vector<Path> out;
    Path cur;
    formula_occurrences(f, [&](const Term &t) { return t == target; }, cur, out);
    return out;
}

std::vector<Path> var_occurrences(const Formula &f, const std::string &var) {
    return occurrences(f, Term::var(var));
}

Term term_at(const Formula &f, const Path &p) {
    const Formula *cur = &f;
    std::size_t i = 0;
    while (!cur->is_atom()) {
        if (i >= p.size() || p[i] >= cur->children().size())
            throw PathMismatch("path does not reach an atom in " + f.str());
        cur = &cur->children()[p[i++]];
    }
    if (i >= p.size() || p[i] >= cur->terms().size()) throw PathMismatch("path does not reach a term in " + f.str());
    return term_in_term(cur->terms()[p[i]], p, i + 1);
}

Formula replace_at(const Formula &f, const Path &p, const Term &replacement) {
    std::function<Formula(const Formula &, std::size_t)> go = [&](const Formula &g, std::size_t i) -> Formula {
        if (g.is_atom()) {
            if (i >= p.size() || p[i] >= g.terms().size()) throw PathMismatch("path does not reach a term");
            std::vector<Term> ts = g.terms();
            ts[p[i]] = replace_in_term(ts[p[i]], p, i + 1, replacement);
            return Formula::atom(g.name(), std::move(ts));
        }
        if (i >= p.size() || p[i] >= g.children().size()) throw PathMismatch("path does not reach an atom");
        std::vector<Formula> cs = g.children();
        cs[p[i]] = go(cs[p[i]], i + 1);
        switch (g.kind()) {
            case Formula::Kind::Not:
                return Formula::neg(cs[0]);
            case Formula::Kind::And:
                return Formula::conj(cs[0], cs[1]);
            case Formula::Kind::Or:
                return Formula::disj(cs[0], cs[1]);
            case Formula::Kind::Imp:
                return Formula::imp(cs[0], cs[1]);
            case Formula::Kind::Forall:
                return Formula::forall(g.name(), cs[0]);
            case Formula::Kind::Exists:
                return Formula::exists(g.name(), cs[0]);
            default:
                return g;
        }
    };
    return go(f, 0);
}

bool is_prefix(const Path &prefix, const Path &p) {
    return prefix.size() <= p.size() && std::equal(prefix.begin(), prefix.end(), p.begin());
}

Abstraction abstract_occurrences(const Formula &f, const Term &target, const std::vector<Path> &positions,
                                 const std::string &fresh) {
    if (occurs(fresh, f)) throw ProofError("abstraction hole " + fresh + " already occurs in " + f.str());
    Formula skel = f;
    Term hole = Term::var(fresh);
    for (const auto &p : positions) {
        if (!(term_at(f, p) == target))
            throw PathMismatch("position does not address " + target.str() + " in " + f.str());
        skel = replace_at(skel, p, hole);
    }
    return Abstraction{skel, fresh};
}

std::vector<Abstraction> enumerate_abstractions(const Formula &f, const Term &target) {
    VarSet avoid;
    collect_vars(f, avoid);
    collect_vars(target, avoid);
    std::string hole = fresh_var(avoid);
    auto occ = occurrences(f, target);
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        subsets.push_back(cur);
        for (std::size_t i = from; i < occ.size(); ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::vector<Abstraction> out;
    out.reserve(subsets.size());
    for (const auto &sub : subsets) {
        std::vector<Path> ps;
        for (auto i : sub) ps.push_back(occ[i]);
        out.push_back(abstract_occurrences(f, target, ps, hole));
    }
    return out;
}

}  // namespace eqs
