#include "eqs/structural.hpp"

#include <algorithm>
#include <unordered_map>

namespace eqs {

namespace {

std::size_t count_of(const std::vector<Formula> &v, const Formula &f) {
    return static_cast<std::size_t>(std::count(v.begin(), v.end(), f));
}

// One side of the rearrangement, parameterised over the structural rules
// acting on it.
struct SideOps {
    bool left;
    const std::vector<Formula> &of(const Derivation &d) const {
        return left ? d.conclusion().ante : d.conclusion().succ;
    }
    Derivation exch(const Derivation &d, std::size_t i) const { return left ? mk::exch_l(d, i) : mk::exch_r(d, i); }
    Derivation contr(const Derivation &d, std::size_t i) const {
        return left ? mk::contr_l(d, i) : mk::contr_r(d, i);
    }
    Derivation weak(const Derivation &d, const Formula &f) const {
        return left ? mk::weak_l(d, f) : mk::weak_r(d, f);
    }
};

// Moves the formula at `from` to `to` (to < from) by adjacent exchanges.
Derivation move_left(Derivation d, const SideOps &ops, std::size_t from, std::size_t to) {
    for (std::size_t j = from; j > to; --j) d = ops.exch(d, j - 1);
    return d;
}

Derivation rearrange_side(Derivation d, const SideOps &ops, const std::vector<Formula> &target) {
    // contract surplus copies
    for (bool again = true; again;) {
        again = false;
        const auto cur = ops.of(d);
        for (std::size_t p = 0; p < cur.size() && !again; ++p) {
            std::size_t want = count_of(target, cur[p]);
            if (want == 0)
                throw ProofError("rearrange: " + cur[p].str() + " does not occur in the target " +
                                 (ops.left ? "antecedent" : "succedent"));
            if (count_of(cur, cur[p]) <= want) continue;
            std::size_t q = p + 1;
            while (!(cur[q] == cur[p])) ++q;
            d = move_left(d, ops, q, p + 1);
            d = ops.contr(d, p);
            again = true;
        }
    }
    // weaken missing copies
    for (const auto &f : target) {
        std::size_t have = count_of(ops.of(d), f), want = count_of(target, f);
        for (; have < want; ++have) d = ops.weak(d, f);
    }
    // sort
    for (std::size_t k = 0; k < target.size(); ++k) {
        const auto &cur = ops.of(d);
        std::size_t j = k;
        while (!(cur[j] == target[k])) ++j;
        if (j != k) d = move_left(d, ops, j, k);
    }
    return d;
}

using Map = std::vector<std::vector<std::size_t>>;

Map identity(std::size_t n) {
    Map m(n);
    for (std::size_t j = 0; j < n; ++j) m[j] = {j};
    return m;
}

// Positions [from, to) shifted down by `off`; everything else unmapped.
Map window(std::size_t n, std::size_t from, std::size_t to, std::size_t off) {
    Map m(n);
    for (std::size_t j = from; j < to && j < n; ++j) m[j] = {j - off};
    return m;
}

std::vector<Formula> multiset_minus(std::vector<Formula> a, const std::vector<Formula> &b) {
    for (const auto &f : b) {
        auto it = std::find(a.begin(), a.end(), f);
        if (it == a.end()) throw ProofError("reapply: premiss lacks active formula " + f.str());
        a.erase(it);
    }
    return a;
}

std::vector<Formula> multiset_union(const std::vector<Formula> &a, const std::vector<Formula> &b) {
    std::vector<Formula> out = a;
    std::vector<Formula> rest = b;
    for (const auto &f : a) {
        auto it = std::find(rest.begin(), rest.end(), f);
        if (it != rest.end()) rest.erase(it);
    }
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

std::vector<Formula> concat(std::vector<Formula> a, const std::vector<Formula> &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

void collect_app_vars(const RuleApp &a, VarSet &out) {
    if (!a.f.null()) collect_vars(a.f, out);
    if (!a.t.null()) collect_vars(a.t, out);
    if (!a.u.empty()) out.insert(a.u);
    if (!a.ab.skeleton.null()) collect_vars(a.ab.skeleton, out);
    if (!a.ab.hole.empty()) out.insert(a.ab.hole);
    if (!a.r.null()) collect_vars(a.r, out);
    if (!a.s.null()) collect_vars(a.s, out);
}

}  // namespace

Derivation rearrange(const Derivation &d, const Sequent &target) {
    Derivation out = rearrange_side(d, SideOps{true}, target.ante);
    return rearrange_side(out, SideOps{false}, target.succ);
}

AncestorMap ancestors(const Derivation &d, std::size_t k) {
    const auto &app = d.app();
    if (k >= d.premisses().size()) throw ProofError("ancestors: no premiss " + std::to_string(k));
    const std::size_t n = d.conclusion().ante.size(), m = d.conclusion().succ.size();
    AncestorMap a;
    switch (app.rule) {
        case Rule::Ax:
        case Rule::Refl:
        case Rule::Hyp:
            break;
        case Rule::WeakL:
            a = {window(n, 0, n - 1, 0), identity(m)};
            break;
        case Rule::WeakR:
            a = {identity(n), window(m, 0, m - 1, 0)};
            break;
        case Rule::ExchL:
            a = {identity(n), identity(m)};
            std::swap(a.ante[app.i], a.ante[app.i + 1]);
            break;
        case Rule::ExchR:
            a = {identity(n), identity(m)};
            std::swap(a.succ[app.i], a.succ[app.i + 1]);
            break;
        case Rule::ContrL:
        case Rule::ContrR: {
            std::size_t len = app.rule == Rule::ContrL ? n : m;
            Map c(len);
            for (std::size_t j = 0; j < len; ++j)
                c[j] = j < app.i ? std::vector<std::size_t>{j}
                                 : j == app.i ? std::vector<std::size_t>{j, j + 1} : std::vector<std::size_t>{j + 1};
            a = app.rule == Rule::ContrL ? AncestorMap{c, identity(m)} : AncestorMap{identity(n), c};
            break;
        }
        case Rule::Cut:
            a = k == 0 ? AncestorMap{window(n, 0, app.la, 0), window(m, 0, app.ls, 0)}
                       : AncestorMap{window(n, app.la, n, app.la), window(m, app.ls, m, app.ls)};
            break;
        case Rule::AndL1:
        case Rule::AndL2:
        case Rule::OrL:
        case Rule::ForallL:
        case Rule::ExistsL:
        case Rule::NotL:
            a = {window(n, 0, n - 1, 0), identity(m)};
            break;
        case Rule::AndR:
        case Rule::OrR1:
        case Rule::OrR2:
        case Rule::ImpR:
        case Rule::ForallR:
        case Rule::ExistsR:
        case Rule::NotR:
            a = {identity(n), window(m, 0, m - 1, 0)};
            break;
        case Rule::ImpL:
        case Rule::EqElim:
            a = k == 0 ? AncestorMap{window(n, 0, app.la, 0), window(m, 0, app.ls, 0)}
                       : AncestorMap{window(n, app.la, n - 1, app.la), window(m, app.ls, m, app.ls)};
            break;
        case Rule::Eq1:
        case Rule::Eq2:
            a = {window(n, 0, n - 1, 0), window(m, 0, m - 1, 0)};
            break;
        case Rule::Eq1L:
        case Rule::Eq2L:
            a = {window(n, 0, n - 1, 0), identity(m)};
            a.ante[app.i].clear();
            break;
        case Rule::Cng:
            a = k == 0 ? AncestorMap{window(n, 0, app.la, 0), window(m, 0, app.ls, 0)}
                       : AncestorMap{window(n, app.la, n, app.la), window(m, app.ls, m - 1, app.ls)};
            break;
    }
    a.ante.resize(n);
    a.succ.resize(m);
    return a;
}

Occurrences premiss_occurrences(const Derivation &d, std::size_t k, const Occurrences &sel) {
    AncestorMap a = ancestors(d, k);
    Occurrences out;
    for (auto j : sel.ante) out.ante.insert(out.ante.end(), a.ante.at(j).begin(), a.ante.at(j).end());
    for (auto j : sel.succ) out.succ.insert(out.succ.end(), a.succ.at(j).begin(), a.succ.at(j).end());
    for (auto *v : {&out.ante, &out.succ}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    return out;
}

Occurrences introduced_occurrences(const Derivation &d, const Occurrences &sel) {
    std::vector<AncestorMap> maps;
    for (std::size_t k = 0; k < d.premisses().size(); ++k) maps.push_back(ancestors(d, k));
    auto introduced = [&](bool left, std::size_t j) {
        for (const auto &a : maps)
            if (!(left ? a.ante : a.succ).at(j).empty()) return false;
        return true;
    };
    Occurrences out;
    for (auto j : sel.ante)
        if (introduced(true, j)) out.ante.push_back(j);
    for (auto j : sel.succ)
        if (introduced(false, j)) out.succ.push_back(j);
    return out;
}

bool has_context_occurrences(const Derivation &d, const Occurrences &sel) {
    Occurrences in = introduced_occurrences(d, sel);
    return in.ante.size() != sel.ante.size() || in.succ.size() != sel.succ.size();
}

Sequent remove_occurrences(const Sequent &s, const Occurrences &sel) {
    Sequent out;
    for (std::size_t j = 0; j < s.ante.size(); ++j)
        if (std::find(sel.ante.begin(), sel.ante.end(), j) == sel.ante.end()) out.ante.push_back(s.ante[j]);
    for (std::size_t j = 0; j < s.succ.size(); ++j)
        if (std::find(sel.succ.begin(), sel.succ.end(), j) == sel.succ.end()) out.succ.push_back(s.succ[j]);
    return out;
}

Derivation reapply(const Derivation &d, const std::vector<Derivation> &premisses) {
    const auto &app = d.app();
    if (is_axiom(app.rule)) return d;
    if (premisses.size() != d.premisses().size()) throw ProofError("reapply: wrong number of premisses");
    if (is_structural(app.rule)) return premisses[0];

    // Active formulas of old premiss k: the positions no conclusion formula
    // descends to, in their original order.
    std::vector<Sequent> actives, contexts;
    for (std::size_t k = 0; k < premisses.size(); ++k) {
        AncestorMap a = ancestors(d, k);
        const Sequent &old = d.premiss(k).conclusion();
        std::vector<bool> ua(old.ante.size()), us(old.succ.size());
        for (const auto &v : a.ante)
            for (auto j : v) ua[j] = true;
        for (const auto &v : a.succ)
            for (auto j : v) us[j] = true;
        Sequent act;
        for (std::size_t j = 0; j < old.ante.size(); ++j)
            if (!ua[j]) act.ante.push_back(old.ante[j]);
        for (std::size_t j = 0; j < old.succ.size(); ++j)
            if (!us[j]) act.succ.push_back(old.succ[j]);
        const Sequent &now = premisses[k].conclusion();
        contexts.push_back({multiset_minus(now.ante, act.ante), multiset_minus(now.succ, act.succ)});
        actives.push_back(std::move(act));
    }
    if (app.rule == Rule::AndR || app.rule == Rule::OrL) {
        Sequent u{multiset_union(contexts[0].ante, contexts[1].ante),
                  multiset_union(contexts[0].succ, contexts[1].succ)};
        contexts = {u, u};
    }
    std::vector<Derivation> p;
    for (std::size_t k = 0; k < premisses.size(); ++k)
        p.push_back(rearrange(premisses[k], {concat(contexts[k].ante, actives[k].ante),
                                             concat(contexts[k].succ, actives[k].succ)}));
    const auto &c = d.conclusion();
    switch (app.rule) {
        case Rule::Cut: return mk::cut(p[0], p[1]);
        case Rule::AndL1: return mk::and_l1(p[0], c.ante.back());
        case Rule::AndL2: return mk::and_l2(p[0], c.ante.back());
        case Rule::AndR: return mk::and_r(p[0], p[1]);
        case Rule::OrL: return mk::or_l(p[0], p[1]);
        case Rule::OrR1: return mk::or_r1(p[0], c.succ.back());
        case Rule::OrR2: return mk::or_r2(p[0], c.succ.back());
        case Rule::ImpL: return mk::imp_l(p[0], p[1]);
        case Rule::ImpR: return mk::imp_r(p[0]);
        case Rule::NotL: return mk::not_l(p[0]);
        case Rule::NotR: return mk::not_r(p[0]);
        case Rule::ForallL: return mk::forall_l(p[0], c.ante.back(), app.t);
        case Rule::ForallR: return mk::forall_r(p[0], c.succ.back(), app.u);
        case Rule::ExistsL: return mk::exists_l(p[0], c.ante.back(), app.u);
        case Rule::ExistsR: return mk::exists_r(p[0], c.succ.back(), app.t);
        case Rule::Eq1: return mk::eq1(p[0], app.ab, app.r, app.s);
        case Rule::Eq2: return mk::eq2(p[0], app.ab, app.r, app.s);
        case Rule::Eq1L: return mk::eq1l(p[0], app.ab, app.r, app.s, p[0].conclusion().ante.size() - 1);
        case Rule::Eq2L: return mk::eq2l(p[0], app.ab, app.r, app.s, p[0].conclusion().ante.size() - 1);
        case Rule::EqElim: return mk::eq_elim(p[0], p[1], app.ab, app.r, app.s);
        case Rule::Cng: return mk::cng(p[0], p[1], app.ab, app.r, app.s);
        default: break;
    }
    throw ProofError("reapply: unexpected rule");
}

VarSet derivation_vars(const Derivation &d) {
    VarSet out;
    std::unordered_map<const void *, bool> seen;
    auto go = [&](auto &&self, const Derivation &x) -> void {
        if (!seen.emplace(x.id(), true).second) return;
        collect_vars(x.conclusion(), out);
        collect_app_vars(x.app(), out);
        for (const auto &p : x.premisses()) self(self, p);
    };
    go(go, d);
    return out;
}

namespace {

Derivation with_eigen(const Derivation &d, const std::string &w) {
    RuleApp app = d.app();
    Derivation p = substitute(d.premiss(0), app.u, Term::var(w));
    app.u = w;
    return Derivation::make(d.conclusion(), app, {p});
}

struct Substituter {
    std::string u;
    Term t;
    VarSet tvars;
    std::unordered_map<const void *, Derivation> memo;

    Derivation run(const Derivation &d) {
        if (!occurs(u, d.conclusion())) return d;
        if (auto it = memo.find(d.id()); it != memo.end()) return it->second;
        Derivation src = d;
        RuleApp app = src.app();
        if ((app.rule == Rule::ForallR || app.rule == Rule::ExistsL) && tvars.count(app.u)) {
            VarSet avoid = derivation_vars(src);
            avoid.insert(tvars.begin(), tvars.end());
            avoid.insert(u);
            src = with_eigen(src, fresh_var(avoid));
            app = src.app();
        }
        if (is_equality(app.rule) && (app.ab.hole == u || tvars.count(app.ab.hole))) {
            VarSet avoid = derivation_vars(src);
            avoid.insert(tvars.begin(), tvars.end());
            avoid.insert(u);
            std::string h = fresh_var(avoid);
            app.ab = {subst(app.ab.skeleton, app.ab.hole, Term::var(h)), h};
        }
        if (!app.f.null()) app.f = subst(app.f, u, t);
        if (!app.t.null()) app.t = subst(app.t, u, t);
        if (!app.r.null()) app.r = subst(app.r, u, t);
        if (!app.s.null()) app.s = subst(app.s, u, t);
        if (!app.ab.skeleton.null()) app.ab.skeleton = subst(app.ab.skeleton, u, t);
        std::vector<Derivation> ps;
        for (const auto &p : src.premisses()) ps.push_back(run(p));
        Derivation out = Derivation::make(subst(src.conclusion(), u, t), app, std::move(ps));
        memo.emplace(d.id(), out);
        return out;
    }
};

}  // namespace

Derivation substitute(const Derivation &d, const std::string &u, const Term &t) {
    if (t.is_var() && t.name() == u) return d;
    Substituter s{u, t, {}, {}};
    collect_vars(t, s.tvars);
    return s.run(d);
}

Derivation freshen_eigenvariable(const Derivation &d, const VarSet &avoid) {
    const auto &app = d.app();
    if ((app.rule != Rule::ForallR && app.rule != Rule::ExistsL) || !avoid.count(app.u)) return d;
    VarSet all = derivation_vars(d);
    all.insert(avoid.begin(), avoid.end());
    return with_eigen(d, fresh_var(all));
}

bool is_pure_equational(const Derivation &d) { return d.pure_equational(); }

}  // namespace eqs
