#include "transform_util.hpp"

#include <algorithm>

namespace eqs {

bool measure_less(const Measure &a, const Measure &b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string measure_str(const Measure &m) {
    std::string out = "(";
    for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + std::to_string(m[i]);
    return out + ")";
}

const TraceEntry *TransformTrace::first_violation() const {
    for (const auto &e : entries)
        if (!measure_less(e.child, e.parent)) return &e;
    return nullptr;
}

std::size_t TransformTrace::count(const std::string &pass) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [&](const TraceEntry &e) { return e.pass == pass; }));
}

std::size_t TransformTrace::count_note(const std::string &prefix) const {
    return static_cast<std::size_t>(std::count_if(
        notes.begin(), notes.end(), [&](const std::string &n) { return n.compare(0, prefix.size(), prefix) == 0; }));
}

JoinSpec JoinSpec::ends(const Derivation &d, const Derivation &e) {
    if (d.conclusion().succ.empty() || e.conclusion().ante.empty())
        throw ProofError("JoinSpec::ends: empty side");
    return {{d.conclusion().succ.size() - 1}, {e.conclusion().ante.size() - 1}};
}

namespace detail {

void record(TransformTrace *trace, const char *pass, const char *step, const Measure &parent, const Measure &child) {
    if (trace) trace->entries.push_back({pass, step, parent, child});
}

void note(TransformTrace *trace, std::string text) {
    if (trace) trace->notes.push_back(std::move(text));
}

const Derivation &ensure_end(const Derivation &d, const Sequent &expected, const char *who) {
    if (!(d.conclusion() == expected))
        throw ProofError(std::string(who) + ": produced " + d.conclusion().str() + ", expected " + expected.str());
    return d;
}

std::vector<Formula> without(const std::vector<Formula> &v, const std::vector<std::size_t> &positions) {
    std::vector<Formula> out;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (std::find(positions.begin(), positions.end(), j) == positions.end()) out.push_back(v[j]);
    return out;
}

std::vector<Formula> concat(std::vector<Formula> a, const std::vector<Formula> &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<Formula> plus(std::vector<Formula> a, const Formula &f) {
    a.push_back(f);
    return a;
}

bool contains(const std::vector<Formula> &v, const Formula &f) { return std::find(v.begin(), v.end(), f) != v.end(); }

std::vector<std::size_t> positions_of(const std::vector<Formula> &v, const Formula &f) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] == f) out.push_back(j);
    return out;
}

VarSet vars_of(const Sequent &s) {
    VarSet out;
    collect_vars(s, out);
    return out;
}

VarSet vars_of(const std::vector<Formula> &fs) {
    VarSet out;
    for (const auto &f : fs) collect_vars(f, out);
    return out;
}

std::string fresh_for(const std::vector<Term> &terms, const std::vector<Formula> &formulas) {
    VarSet avoid;
    for (const auto &t : terms)
        if (!t.null()) collect_vars(t, avoid);
    for (const auto &f : formulas)
        if (!f.null()) collect_vars(f, avoid);
    return fresh_var(avoid);
}

Derivation push_through(const Derivation &d0, const Occurrences &sel, const Cont &cont, const VarSet &avoid) {
    Derivation d = freshen_eigenvariable(d0, avoid);
    if (is_structural(d.rule())) return cont(d.premiss(0), premiss_occurrences(d, 0, sel));
    std::vector<Derivation> ps;
    for (std::size_t k = 0; k < d.premisses().size(); ++k) {
        Occurrences sk = premiss_occurrences(d, k, sel);
        ps.push_back(sk.empty() ? d.premiss(k) : cont(d.premiss(k), sk));
    }
    return reapply(d, ps);
}

Derivation same_rule(const Derivation &node, const std::vector<Derivation> &premisses) {
    bool same = true;
    for (std::size_t k = 0; k < premisses.size(); ++k) same = same && premisses[k].same_node(node.premiss(k));
    if (same) return node;
    return Derivation::make(node.conclusion(), node.app(), premisses);
}

Derivation rebuild(const Derivation &d, const NodeFn &fn) {
    std::unordered_map<const void *, Derivation> memo;
    auto go = [&](auto &&self, const Derivation &x) -> Derivation {
        if (auto it = memo.find(x.id()); it != memo.end()) return it->second;
        std::vector<Derivation> ps;
        for (const auto &p : x.premisses()) ps.push_back(self(self, p));
        Derivation out = fn(x, ps);
        memo.emplace(x.id(), out);
        return out;
    };
    return go(go, d);
}

bool is_eq12(Rule r) { return r == Rule::Eq1 || r == Rule::Eq2 || r == Rule::Eq1L || r == Rule::Eq2L; }

bool has_rule(const Derivation &d, const std::function<bool(const Derivation &)> &pred) {
    std::unordered_map<const void *, bool> seen;
    auto go = [&](auto &&self, const Derivation &x) -> bool {
        if (!seen.emplace(x.id(), true).second) return false;
        if (pred(x)) return true;
        for (const auto &p : x.premisses())
            if (self(self, p)) return true;
        return false;
    };
    return go(go, d);
}

bool atomic_cuts_and_eqs(const Derivation &d) {
    return !has_rule(d, [](const Derivation &x) {
        if (x.rule() == Rule::Cut) return !x.premiss(0).conclusion().succ.back().is_atom();
        if (is_equality(x.rule())) return !x.app().ab.skeleton.is_atom();
        return false;
    });
}

Formula hole_at(const Formula &f, const Path &at, const std::string &w) { return replace_at(f, at, Term::var(w)); }

}  // namespace detail
}  // namespace eqs
