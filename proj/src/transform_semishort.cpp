// Singleton equality inferences, transposition between EQ_1 and EQ_2, the
// semishortening operations G1/G2, left symmetry and the intuitionistic
// projection.

#include "transform_util.hpp"

#include "eqs/checker.hpp"

namespace eqs {

using namespace detail;

namespace {

bool has_cut(const Derivation &d) {
    return has_rule(d, [](const Derivation &x) { return x.rule() == Rule::Cut; });
}

Derivation apply_eq(Rule rule, const Derivation &d, const Abstraction &ab, const Term &r, const Term &s,
                    std::size_t idx = 0) {
    switch (rule) {
        case Rule::Eq1: return mk::eq1(d, ab, r, s);
        case Rule::Eq2: return mk::eq2(d, ab, r, s);
        case Rule::Eq1L: return mk::eq1l(d, ab, r, s, idx);
        case Rule::Eq2L: return mk::eq2l(d, ab, r, s, idx);
        default: throw ProofError("apply_eq: not an equality rule");
    }
}

std::size_t last_ante(const Derivation &d) { return d.conclusion().ante.size() - 1; }

// Two distinct variables fresh for everything given.
std::pair<std::string, std::string> two_fresh(std::vector<Term> terms, const std::vector<Formula> &forms) {
    std::string a = fresh_for(terms, forms);
    terms.push_back(Term::var(a));
    return {a, fresh_for(terms, forms)};
}

// How the hole of the wanted inference sits relative to the hole of the
// inference ending the derivation.
enum class Overlap { Disjoint, InsideNode, AroundNode };

Overlap overlap(const Path &pv, const Path &pu) {
    if (is_prefix(pu, pv)) return Overlap::InsideNode;
    if (is_prefix(pv, pu)) return Overlap::AroundNode;
    return Overlap::Disjoint;
}

// ---- transposition -------------------------------------------------------

// From D in EQ_1 (dir Two) or EQ_2 (dir One) of Γ => F{v/r}, with every
// equality inference singleton, a derivation in the same system of
// Γ, op => F{v/s}, op being s=r (Two) or r=s (One).
Derivation admit_missing(const Derivation &d, const Abstraction &ab, const Term &r, const Term &s, EqDir dir,
                         TransformTrace *trace) {
    const bool two = dir == EqDir::Two;
    const Formula op = two ? Formula::eq(s, r) : Formula::eq(r, s);
    const Sequent target{plus(d.conclusion().ante, op), {ab.apply(s)}};
    auto done = [&](const Derivation &x) { return ensure_end(rearrange(x, target), target, "transpose_eq"); };
    if (ab.trivial() || r == s) return done(d);
    const Rule own = two ? Rule::Eq1 : Rule::Eq2, own_l = two ? Rule::Eq1L : Rule::Eq2L;
    const Measure here{d.height()};
    const RuleApp &a = d.app();
    const Formula phi = ab.apply(r);
    const Path pv = var_occurrences(ab.skeleton, ab.hole).at(0);

    switch (d.rule()) {
        case Rule::Ax: return done(apply_eq(own_l, mk::ax(ab.apply(s)), ab, s, r, 0));
        case Rule::Refl: {
            const std::string w = fresh_for({r, s}, {ab.skeleton});
            const bool in_lhs = occurs(ab.hole, ab.skeleton.lhs());
            const Term side = subst(in_lhs ? ab.skeleton.lhs() : ab.skeleton.rhs(), ab.hole, Term::var(w));
            const Term ss = subst(side, w, s);
            const Abstraction g{in_lhs ? Formula::eq(ss, side) : Formula::eq(side, ss), w};
            return done(apply_eq(own, mk::refl(ss), g, s, r));
        }
        case Rule::WeakL:
        case Rule::ExchL:
        case Rule::ContrL:
            record(trace, "transpose_eq", "structural", here, {d.premiss(0).height()});
            return done(admit_missing(d.premiss(0), ab, r, s, dir, trace));
        default: break;
    }
    if (a.rule == own_l) {
        record(trace, "transpose_eq", "left rule", here, {d.premiss(0).height()});
        Derivation x = admit_missing(d.premiss(0), ab, r, s, dir, trace);
        return done(apply_eq(own_l, x, a.ab, a.r, a.s, a.i));
    }
    if (a.rule != own) throw PreconditionViolation(std::string("transpose_eq: unexpected rule ") + rule_name(a.rule));

    const Derivation &d0 = d.premiss(0);
    const Term &p = a.r, &q = a.s;
    if (a.ab.trivial()) {
        record(trace, "transpose_eq", "trivial", here, {d0.height()});
        return done(admit_missing(d0, ab, r, s, dir, trace));
    }
    const Path pu = var_occurrences(a.ab.skeleton, a.ab.hole).at(0);
    auto [v2, u2] = two_fresh({r, s, p, q}, {phi, ab.skeleton, a.ab.skeleton});
    const Term V = Term::var(v2), U = Term::var(u2);
    record(trace, "transpose_eq", rule_name(a.rule), here, {d0.height()});
    switch (overlap(pv, pu)) {
        case Overlap::Disjoint: {
            const Formula fo = replace_at(replace_at(phi, pv, V), pu, U);
            Derivation x = admit_missing(d0, {subst(fo, u2, p), v2}, r, s, dir, trace);
            return done(apply_eq(own, x, {subst(fo, v2, s), u2}, p, q));
        }
        case Overlap::InsideNode: {
            // q = q°{r}; rewrite straight to q°{s}, then fix the side equation.
            const Term qo = term_at(replace_at(phi, pv, V), pu);
            Derivation x = apply_eq(own, d0, a.ab, p, subst(qo, v2, s));
            const Abstraction g{two ? Formula::eq(p, qo) : Formula::eq(qo, p), v2};
            return done(apply_eq(own_l, x, g, s, r, last_ante(x)));
        }
        case Overlap::AroundNode: {
            // r = r°{q}; D0 already proves F{v/r°{p}}.
            const Term ro = term_at(replace_at(phi, pu, U), pv);
            Derivation x = admit_missing(d0, ab, subst(ro, u2, p), s, dir, trace);
            const Abstraction g{two ? Formula::eq(s, ro) : Formula::eq(ro, s), u2};
            return done(apply_eq(own_l, x, g, p, q, last_ante(x)));
        }
    }
    throw ProofError("transpose_eq: unreachable");
}

// ---- G1 / G2 -------------------------------------------------------------

struct GCtx {
    const TermOrder &order;
    TransformTrace *trace;
};

// Every equality inference built here goes through this.
Derivation semishort(const Derivation &x, const TermOrder &order) {
    const RuleApp &a = x.app();
    const OrderClass c = order_predicate(a, order);
    const bool eq1ish = a.rule == Rule::Eq1 || a.rule == Rule::Eq1L;
    if (c == OrderClass::Lengthening || (eq1ish && c != OrderClass::Shortening))
        throw ProofError(std::string("g_transform: built a non-semishortening ") + rule_name(a.rule) + " with r=" +
                         a.r.str() + ", s=" + a.s.str());
    return x;
}

Derivation gt(const Derivation &d, const Abstraction &ab, const Term &r, const Term &s, EqDir dir, GCtx &cx) {
    const bool one = dir == EqDir::One;
    const Formula op = one ? Formula::eq(r, s) : Formula::eq(s, r);
    const Sequent target{plus(d.conclusion().ante, op), {ab.apply(s)}};
    auto done = [&](const Derivation &x) { return ensure_end(rearrange(x, target), target, "g_transform"); };
    auto eq = [&](Rule rule, const Derivation &x, const Abstraction &g, const Term &a, const Term &b,
                  std::size_t idx = 0) { return semishort(apply_eq(rule, x, g, a, b, idx), cx.order); };

    const bool fast = one ? cx.order.less(r, s) : !cx.order.less(s, r);
    note(cx.trace, std::string("g_transform dir=") + (one ? "1" : "2") + (fast ? " fast" : " slow") +
                       " r=" + r.str() + " s=" + s.str());
    if (fast) return done(eq(one ? Rule::Eq1 : Rule::Eq2, d, ab, r, s));
    if (ab.trivial() || r == s) return done(d);

    const auto holes = var_occurrences(ab.skeleton, ab.hole);
    if (holes.size() > 1) {
        // One singleton step per occurrence, left to right, then contract.
        Derivation x = d;
        for (std::size_t j = 0; j < holes.size(); ++j) {
            Formula sk = ab.skeleton;
            for (std::size_t l = 0; l < holes.size(); ++l)
                if (l != j) sk = replace_at(sk, holes[l], l < j ? s : r);
            x = gt(x, {sk, ab.hole}, r, s, dir, cx);
        }
        for (std::size_t j = 1; j < holes.size(); ++j) x = mk::contr_l(x, x.conclusion().ante.size() - 2);
        return done(x);
    }

    const Measure here{d.height()};
    const Path &pv = holes[0];
    const Formula phi = ab.apply(r);
    const Rule left1 = one ? Rule::Eq2L : Rule::Eq1L;  // introduces op with the G-roles of r and s
    switch (d.rule()) {
        case Rule::Ax: return done(eq(left1, mk::ax(ab.apply(s)), ab, s, r, 0));
        case Rule::Refl: {
            const std::string w = fresh_for({r, s}, {ab.skeleton});
            const bool in_lhs = occurs(ab.hole, ab.skeleton.lhs());
            const Term side = subst(in_lhs ? ab.skeleton.lhs() : ab.skeleton.rhs(), ab.hole, Term::var(w));
            const Term ss = subst(side, w, s);
            const Abstraction g{in_lhs ? Formula::eq(ss, side) : Formula::eq(side, ss), w};
            return done(eq(one ? Rule::Eq2 : Rule::Eq1, mk::refl(ss), g, s, r));
        }
        case Rule::WeakL:
        case Rule::ExchL:
        case Rule::ContrL:
            record(cx.trace, "g_transform", "structural", here, {d.premiss(0).height()});
            return done(gt(d.premiss(0), ab, r, s, dir, cx));
        case Rule::Eq1L:
        case Rule::Eq2L: {
            const RuleApp &a = d.app();
            record(cx.trace, "g_transform", rule_name(a.rule), here, {d.premiss(0).height()});
            Derivation x = gt(d.premiss(0), ab, r, s, dir, cx);
            return done(eq(a.rule, x, a.ab, a.r, a.s, a.i));
        }
        case Rule::Eq1:
        case Rule::Eq2: break;
        default:
            throw PreconditionViolation(std::string("g_transform: unexpected rule ") + rule_name(d.rule()));
    }

    const RuleApp &a = d.app();
    const Derivation &d0 = d.premiss(0);
    const bool node1 = a.rule == Rule::Eq1;
    const Term &p = a.r, &q = a.s;
    if (a.ab.trivial()) {
        record(cx.trace, "g_transform", "trivial", here, {d0.height()});
        return done(gt(d0, ab, r, s, dir, cx));
    }
    const Path pu = var_occurrences(a.ab.skeleton, a.ab.hole).at(0);
    auto [v2, u2] = two_fresh({r, s, p, q}, {phi, ab.skeleton, a.ab.skeleton});
    const Term V = Term::var(v2), U = Term::var(u2);
    switch (overlap(pv, pu)) {
        case Overlap::Disjoint: {
            record(cx.trace, "g_transform", node1 ? "1.1" : "2.1", here, {d0.height()});
            const Formula fo = replace_at(replace_at(phi, pv, V), pu, U);
            Derivation x = gt(d0, {subst(fo, u2, p), v2}, r, s, dir, cx);
            return done(eq(a.rule, x, {subst(fo, v2, s), u2}, p, q));
        }
        case Overlap::InsideNode: {
            record(cx.trace, "g_transform", node1 ? "1.2" : "2.2", here, {d0.height()});
            const Term qo = term_at(replace_at(phi, pv, V), pu);
            Derivation x = gt(d0, a.ab, p, subst(qo, v2, s), node1 ? EqDir::One : EqDir::Two, cx);
            const Abstraction g{node1 ? Formula::eq(p, qo) : Formula::eq(qo, p), v2};
            return done(eq(left1, x, g, s, r, last_ante(x)));
        }
        case Overlap::AroundNode: {
            record(cx.trace, "g_transform", node1 ? "1.3" : "2.3", here, {d0.height()});
            const Term ro = term_at(replace_at(phi, pu, U), pv);
            Derivation x = gt(d0, ab, subst(ro, u2, p), s, dir, cx);
            const Abstraction g{one ? Formula::eq(ro, s) : Formula::eq(s, ro), u2};
            return done(eq(node1 ? Rule::Eq1L : Rule::Eq2L, x, g, p, q, last_ante(x)));
        }
    }
    throw ProofError("g_transform: unreachable");
}

// ---- projection ----------------------------------------------------------

// A derivation of Γ' => F with Γ' drawn from d's antecedent and F from its
// succedent.
Derivation project(const Derivation &d) {
    const RuleApp &a = d.app();
    switch (a.rule) {
        case Rule::Ax:
        case Rule::Refl: return d;
        case Rule::WeakL:
        case Rule::ExchL:
        case Rule::ContrL:
        case Rule::WeakR:
        case Rule::ExchR:
        case Rule::ContrR: return project(d.premiss(0));
        case Rule::Cut: {
            const Formula f = d.premiss(0).conclusion().succ.back();
            Derivation x = project(d.premiss(0));
            if (!(x.conclusion().succ[0] == f)) return x;
            Derivation y = project(d.premiss(1));
            if (!contains(y.conclusion().ante, f)) return y;
            y = rearrange(y, {plus(d.premiss(1).conclusion().ante, f), y.conclusion().succ});
            return mk::cut(x, y);
        }
        case Rule::Eq1:
        case Rule::Eq2: {
            Derivation x = project(d.premiss(0));
            if (!(x.conclusion().succ[0] == a.ab.apply(a.r))) return x;
            return apply_eq(a.rule, x, a.ab, a.r, a.s);
        }
        case Rule::Eq1L:
        case Rule::Eq2L: {
            Derivation x = project(d.premiss(0));
            auto at = positions_of(x.conclusion().ante, a.ab.apply(a.r));
            if (at.empty()) return x;
            return apply_eq(a.rule, x, a.ab, a.r, a.s, at[0]);
        }
        default:
            throw PreconditionViolation(std::string("project_intuitionistic: unexpected rule ") + rule_name(a.rule));
    }
}

}  // namespace

Derivation singletonize(const Derivation &d) {
    Derivation out = rebuild(d, [&](const Derivation &x, const std::vector<Derivation> &ps) {
        const RuleApp &a = x.app();
        if (!is_eq12(a.rule)) return same_rule(x, ps);
        const auto holes = var_occurrences(a.ab.skeleton, a.ab.hole);
        if (holes.size() <= 1) return same_rule(x, ps);
        Derivation y = ps[0];
        for (std::size_t j = 0; j < holes.size(); ++j) {
            Formula sk = a.ab.skeleton;
            for (std::size_t l = 0; l < holes.size(); ++l)
                if (l != j) sk = replace_at(sk, holes[l], l < j ? a.s : a.r);
            y = apply_eq(a.rule, y, {sk, a.ab.hole}, a.r, a.s, a.i);
        }
        for (std::size_t j = 1; j < holes.size(); ++j) y = mk::contr_l(y, y.conclusion().ante.size() - 2);
        return ensure_end(y, x.conclusion(), "singletonize");
    });
    return ensure_end(out, d.conclusion(), "singletonize");
}

Derivation transpose_eq(const Derivation &d, EqTarget target, TransformTrace *trace) {
    Derivation x = d;
    if (has_cut(x) || has_rule(x, [](const Derivation &y) { return is_left_eq(y.rule()); }))
        x = eliminate_cuts_eq(x, trace);
    x = singletonize(x);
    const Rule drop = target == EqTarget::Eq1 ? Rule::Eq2 : Rule::Eq1;
    const EqDir dir = target == EqTarget::Eq1 ? EqDir::Two : EqDir::One;
    Derivation out = rebuild(x, [&](const Derivation &y, const std::vector<Derivation> &ps) {
        const RuleApp &a = y.app();
        if (a.rule == Rule::Cng || a.rule == Rule::EqElim)
            throw PreconditionViolation(std::string("transpose_eq: unexpected rule ") + rule_name(a.rule));
        if (a.rule != drop) return same_rule(y, ps);
        return ensure_end(admit_missing(ps[0], a.ab, a.r, a.s, dir, trace), y.conclusion(), "transpose_eq");
    });
    return ensure_end(out, d.conclusion(), "transpose_eq");
}

Derivation g_transform(const Derivation &d, const Abstraction &ab, const Term &r, const Term &s, EqDir dir,
                       const TermOrder &order, TransformTrace *trace) {
    const Sequent &c = d.conclusion();
    if (c.succ.size() != 1 || !(c.succ[0] == ab.apply(r)))
        throw PreconditionViolation("g_transform: derivation does not end with => " + ab.apply(r).str());
    SystemSpec sys = parse_system("cf.EQ12@semishort(" + order.name + ")");
    auto rep = check(d, sys);
    if (!rep.ok) throw PreconditionViolation("g_transform: input is not a semishortening cf.EQ12 derivation");
    GCtx cx{order, trace};
    return gt(singletonize(d), ab, r, s, dir, cx);
}

Derivation semishorten(const Derivation &d, const TermOrder &order, TransformTrace *trace) {
    Derivation x = d;
    if (has_cut(x) || has_rule(x, [](const Derivation &y) { return is_left_eq(y.rule()); }))
        x = eliminate_cuts_eq(x, trace);
    x = singletonize(x);
    GCtx cx{order, trace};
    Derivation out = rebuild(x, [&](const Derivation &y, const std::vector<Derivation> &ps) {
        const RuleApp &a = y.app();
        if (a.rule != Rule::Eq1 && a.rule != Rule::Eq2) return same_rule(y, ps);
        Derivation z = gt(ps[0], a.ab, a.r, a.s, a.rule == Rule::Eq1 ? EqDir::One : EqDir::Two, cx);
        return ensure_end(z, y.conclusion(), "semishorten");
    });
    return ensure_end(out, d.conclusion(), "semishorten");
}

Derivation left_symmetry(const Derivation &d, std::size_t index, const SystemSpec &sys, TransformTrace *trace) {
    const Sequent &c = d.conclusion();
    if (index >= c.ante.size() || !c.ante[index].is_eq())
        throw PreconditionViolation("left_symmetry: no equality at the given antecedent position");
    const Term r = c.ante[index].lhs(), s = c.ante[index].rhs();
    std::vector<Formula> rest = c.ante;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(index));
    Sequent target = c;
    target.ante[index] = Formula::eq(s, r);
    const Derivation moved = rearrange(d, {plus(rest, c.ante[index]), c.succ});
    const std::string w = fresh_for({r, s});
    const Term W = Term::var(w);

    if (sys.allows(Rule::Eq1L) && sys.allows(Rule::Eq2L)) {
        // r=s becomes r=r next to s=r, then r=r becomes s=r.
        Derivation x = mk::eq1l(moved, {Formula::eq(r, W), w}, s, r, rest.size());
        x = mk::eq2l(x, {Formula::eq(W, r), w}, r, s, rest.size());
        x = mk::contr_l(mk::contr_l(x, x.conclusion().ante.size() - 2), x.conclusion().ante.size() - 3);
        return ensure_end(rearrange(x, target), target, "left_symmetry");
    }
    if (!sys.exact_one_succedent || sys.allows(Rule::Cut))
        throw PreconditionViolation("left_symmetry: system must be cf.EQ, cf.EQ1, cf.EQ2 or cf.EQ12");
    const bool only2 = sys.allows(Rule::Eq2) && !sys.allows(Rule::Eq1);
    // s=r => r=s
    Derivation lemma = only2 ? mk::eq2(mk::refl(r), {Formula::eq(r, W), w}, r, s)
                             : mk::eq1(mk::refl(s), {Formula::eq(W, s), w}, s, r);
    Derivation x = eliminate_cuts_eq(mk::cut(lemma, moved), trace);
    if (!sys.allows(Rule::Eq2)) x = transpose_eq(x, EqTarget::Eq1, trace);
    else if (!sys.allows(Rule::Eq1)) x = transpose_eq(x, EqTarget::Eq2, trace);
    return ensure_end(rearrange(x, target), target, "left_symmetry");
}

Derivation project_intuitionistic(const Derivation &d) {
    Derivation x = project(d);
    return rearrange(x, {d.conclusion().ante, x.conclusion().succ});
}

}  // namespace eqs
