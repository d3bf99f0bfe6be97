// Atomization of equality inferences and closure of atomic derivations
// under cut.

#include "eqs/checker.hpp"
#include "transform_util.hpp"

namespace eqs {

using namespace detail;

namespace {

Formula op_eq(const Term &r, const Term &s, EqDir dir) {
    return dir == EqDir::One ? Formula::eq(r, s) : Formula::eq(s, r);
}

EqDir flip(EqDir d) { return d == EqDir::One ? EqDir::Two : EqDir::One; }

Derivation basic_rec(const Formula &f, const std::string &v, const Term &r, const Term &s, EqDir dir,
                     TransformTrace *trace) {
    const Abstraction ab{f, v};
    const Formula fr = ab.apply(r), fs = ab.apply(s), op = op_eq(r, s, dir);
    const Sequent goal{{fr, op}, {fs}};
    const Measure here{degree(f)};
    auto sub = [&](const Formula &g, const Term &r2, const Term &s2, EqDir d2) {
        record(trace, "basic_atomic", "subformula", here, {degree(g)});
        return basic_rec(g, v, r2, s2, d2, trace);
    };

    switch (f.kind()) {
        case Formula::Kind::Atom: {
            Derivation ax = mk::ax(fr);
            return dir == EqDir::One ? mk::eq1(ax, ab, r, s) : mk::eq2(ax, ab, r, s);
        }
        case Formula::Kind::Not: {
            const Formula &g = f.child(0);
            // G{s}, op => G{r}
            Derivation d = sub(g, s, r, flip(dir));
            Derivation x = mk::not_l(d);
            x = rearrange(x, {{fr, op, subst(g, v, s)}, {}});
            return ensure_end(mk::not_r(x), goal, "basic_atomic");
        }
        case Formula::Kind::Imp: {
            const Formula &g = f.child(0), &h = f.child(1);
            Derivation d = sub(g, s, r, flip(dir));  // G{s}, op => G{r}
            Derivation e = sub(h, r, s, dir);        // H{r}, op => H{s}
            e = rearrange(e, {{op, subst(h, v, r)}, {subst(h, v, s)}});
            Derivation x = mk::imp_l(d, e);
            x = rearrange(x, {{fr, op, subst(g, v, s)}, {subst(h, v, s)}});
            return ensure_end(mk::imp_r(x), goal, "basic_atomic");
        }
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            std::vector<Derivation> parts;
            for (std::size_t k = 0; k < 2; ++k) {
                const Formula &g = f.child(k);
                Derivation d = sub(g, r, s, dir);  // G{r}, op => G{s}
                if (f.kind() == Formula::Kind::And) {
                    d = rearrange(d, {{op, subst(g, v, r)}, {subst(g, v, s)}});
                    d = k == 0 ? mk::and_l1(d, fr) : mk::and_l2(d, fr);
                } else {
                    d = k == 0 ? mk::or_r1(d, fs) : mk::or_r2(d, fs);
                    d = rearrange(d, {{op, subst(g, v, r)}, {fs}});
                }
                parts.push_back(d);
            }
            Derivation x = f.kind() == Formula::Kind::And ? mk::and_r(parts[0], parts[1])
                                                          : mk::or_l(parts[0], parts[1]);
            return ensure_end(rearrange(x, goal), goal, "basic_atomic");
        }
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            VarSet avoid;
            collect_vars(f, avoid);
            collect_vars(r, avoid);
            collect_vars(s, avoid);
            avoid.insert(v);
            const std::string u = fresh_var(avoid);
            const Formula g = instantiate(f, Term::var(u));
            Derivation d = sub(g, r, s, dir);  // G{r,u}, op => G{s,u}
            Derivation x;
            if (f.kind() == Formula::Kind::Forall) {
                d = rearrange(d, {{op, subst(g, v, r)}, {subst(g, v, s)}});
                x = mk::forall_r(mk::forall_l(d, fr, Term::var(u)), fs, u);
            } else {
                d = rearrange(mk::exists_r(d, fs, Term::var(u)), {{op, subst(g, v, r)}, {fs}});
                x = mk::exists_l(d, fr, u);
            }
            return ensure_end(rearrange(x, goal), goal, "basic_atomic");
        }
    }
    throw ProofError("basic_atomic: unknown formula kind");
}

bool is_principal_extra(const Derivation &d, const Occurrences &sel) {
    return !introduced_occurrences(d, sel).empty();
}

// Selection with the occurrences introduced by d's last rule removed.
Occurrences context_only(const Derivation &d, const Occurrences &sel) {
    Occurrences in = introduced_occurrences(d, sel), out;
    for (auto j : sel.ante)
        if (std::find(in.ante.begin(), in.ante.end(), j) == in.ante.end()) out.ante.push_back(j);
    for (auto j : sel.succ)
        if (std::find(in.succ.begin(), in.succ.end(), j) == in.succ.end()) out.succ.push_back(j);
    return out;
}

struct Joiner {
    TransformTrace *trace;

    Measure measure(const Derivation &d, const Derivation &e, const Formula &f) const {
        return {degree(f), rank(f, d, Side::Left) + rank(f, e, Side::Right)};
    }

    Derivation call(const Measure &parent, const char *step, const Derivation &d, const Derivation &e,
                    const Formula &f, const JoinSpec &spec) {
        record(trace, "join_with_atomic_cut", step, parent, measure(d, e, f));
        return join(d, e, f, spec);
    }

    Derivation join(const Derivation &d, const Derivation &e, const Formula &f, const JoinSpec &spec) {
        const Sequent &cd = d.conclusion(), &ce = e.conclusion();
        const auto gamma = cd.ante, delta = without(cd.succ, spec.left);
        const auto lambda = without(ce.ante, spec.right), theta = ce.succ;
        const Sequent target{concat(gamma, lambda), concat(delta, theta)};

        if (spec.left.empty() || contains(delta, f) || contains(theta, f)) return rearrange(d, target);
        if (spec.right.empty() || contains(lambda, f) || contains(gamma, f)) return rearrange(e, target);
        if (f.is_atom()) {
            Derivation l = rearrange(d, {gamma, plus(delta, f)});
            Derivation r = rearrange(e, {plus(lambda, f), theta});
            return ensure_end(mk::cut(l, r), target, "join_with_atomic_cut");
        }

        const Measure here = measure(d, e, f);
        const Occurrences sel_d{{}, spec.left}, sel_e{spec.right, {}};

        if (has_context_occurrences(d, sel_d)) {
            bool staged = !is_structural(d.rule()) && is_principal_extra(d, sel_d);
            Occurrences sel = staged ? context_only(d, sel_d) : sel_d;
            Derivation x = push_through(
                d, sel,
                [&](const Derivation &p, const Occurrences &s) {
                    return call(here, "left context", p, e, f, {s.succ, spec.right});
                },
                vars_of(ce));
            if (staged) {
                JoinSpec last{{x.conclusion().succ.size() - 1}, spec.right};
                x = call(here, "left principal", x, e, f, last);
            }
            return ensure_end(rearrange(x, target), target, "join_with_atomic_cut");
        }
        if (has_context_occurrences(e, sel_e)) {
            bool staged = !is_structural(e.rule()) && is_principal_extra(e, sel_e);
            Occurrences sel = staged ? context_only(e, sel_e) : sel_e;
            Derivation x = push_through(
                e, sel,
                [&](const Derivation &p, const Occurrences &s) {
                    return call(here, "right context", d, p, f, {spec.left, s.ante});
                },
                vars_of(cd));
            if (staged) {
                JoinSpec last{spec.left, {x.conclusion().ante.size() - 1}};
                x = call(here, "right principal", d, x, f, last);
            }
            return ensure_end(rearrange(x, target), target, "join_with_atomic_cut");
        }
        // Every extra occurrence is introduced by the last rule on its side.
        if (d.rule() == Rule::WeakR) return rearrange(d.premiss(0), target);
        if (e.rule() == Rule::WeakL) return rearrange(e.premiss(0), target);
        return ensure_end(rearrange(logical(d, e, f, here), target), target, "join_with_atomic_cut");
    }

    // Both sides introduce f with a logical rule.
    Derivation logical(const Derivation &d, const Derivation &e, const Formula &f, const Measure &here) {
        auto ends = [](const Derivation &a, const Derivation &b) { return JoinSpec::ends(a, b); };
        const Rule rd = d.rule(), re = e.rule();
        switch (f.kind()) {
            case Formula::Kind::And:
                if (rd == Rule::AndR && (re == Rule::AndL1 || re == Rule::AndL2)) {
                    const Derivation &d0 = d.premiss(re == Rule::AndL1 ? 0 : 1);
                    return call(here, "and", d0, e.premiss(0), f.child(re == Rule::AndL1 ? 0 : 1),
                                ends(d0, e.premiss(0)));
                }
                break;
            case Formula::Kind::Or:
                if ((rd == Rule::OrR1 || rd == Rule::OrR2) && re == Rule::OrL) {
                    const Derivation &e0 = e.premiss(rd == Rule::OrR1 ? 0 : 1);
                    return call(here, "or", d.premiss(0), e0, f.child(rd == Rule::OrR1 ? 0 : 1),
                                ends(d.premiss(0), e0));
                }
                break;
            case Formula::Kind::Not:
                if (rd == Rule::NotR && re == Rule::NotL)
                    return call(here, "not", e.premiss(0), d.premiss(0), f.child(0),
                                ends(e.premiss(0), d.premiss(0)));
                break;
            case Formula::Kind::Imp:
                if (rd == Rule::ImpR && re == Rule::ImpL) {
                    const Derivation &d0 = d.premiss(0), &e0 = e.premiss(0), &e1 = e.premiss(1);
                    // Γ, A, Λ2 => Δ, Θ2
                    Derivation j1 = call(here, "imp right", d0, e1, f.child(1), ends(d0, e1));
                    std::size_t a_at = d0.conclusion().ante.size() - 1;
                    return call(here, "imp left", e0, j1, f.child(0),
                                {{e0.conclusion().succ.size() - 1}, {a_at}});
                }
                break;
            case Formula::Kind::Forall:
                if (rd == Rule::ForallR && re == Rule::ForallL) {
                    Derivation d0 = substitute(d.premiss(0), d.app().u, e.app().t);
                    return call(here, "forall", d0, e.premiss(0), instantiate(f, e.app().t),
                                ends(d0, e.premiss(0)));
                }
                break;
            case Formula::Kind::Exists:
                if (rd == Rule::ExistsR && re == Rule::ExistsL) {
                    Derivation e0 = substitute(e.premiss(0), e.app().u, d.app().t);
                    return call(here, "exists", d.premiss(0), e0, instantiate(f, d.app().t),
                                ends(d.premiss(0), e0));
                }
                break;
            case Formula::Kind::Atom:
                break;
        }
        throw ProofError(std::string("join_with_atomic_cut: no reduction for ") + rule_name(rd) + " against " +
                         rule_name(re) + " on " + f.str());
    }
};

bool atomic_only(const Derivation &d) { return atomic_cuts_and_eqs(d); }

}  // namespace

Derivation basic_atomic(const Formula &f, const std::string &v, const Term &r, const Term &s, EqDir dir,
                        TransformTrace *trace) {
    return basic_rec(f, v, r, s, dir, trace);
}

Derivation atomize_equalities(const Derivation &d, TransformTrace *trace) {
    Derivation out = rebuild(d, [&](const Derivation &x, const std::vector<Derivation> &ps) {
        const RuleApp &a = x.app();
        if (!is_eq12(a.rule) || a.ab.skeleton.is_atom()) return same_rule(x, ps);
        const Formula fr = a.ab.apply(a.r), fs = a.ab.apply(a.s), op = a.operating_equality();
        if (a.rule == Rule::Eq1 || a.rule == Rule::Eq2) {
            EqDir dir = a.rule == Rule::Eq1 ? EqDir::One : EqDir::Two;
            Derivation b = basic_atomic(a.ab.skeleton, a.ab.hole, a.r, a.s, dir, trace);
            b = rearrange(b, {{op, fr}, {fs}});
            return ensure_end(mk::cut(ps[0], b), x.conclusion(), "atomize_equalities");
        }
        // Left rules: F{s}, op => F{r} cut against the premiss.
        EqDir dir = a.rule == Rule::Eq1L ? EqDir::Two : EqDir::One;
        Derivation b = basic_atomic(a.ab.skeleton, a.ab.hole, a.s, a.r, dir, trace);
        Sequent pc = ps[0].conclusion();
        std::vector<Formula> rest = pc.ante;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(a.i));
        Derivation p = rearrange(ps[0], {plus(rest, fr), pc.succ});
        return ensure_end(rearrange(mk::cut(b, p), x.conclusion()), x.conclusion(), "atomize_equalities");
    });
    return ensure_end(out, d.conclusion(), "atomize_equalities");
}

Derivation join_with_atomic_cut(const Derivation &d, const Derivation &e, const Formula &f, const JoinSpec &spec,
                                TransformTrace *trace) {
    if (!atomic_only(d) || !atomic_only(e))
        throw PreconditionViolation("join_with_atomic_cut: input has a non-atomic cut or equality inference");
    for (auto j : spec.left)
        if (j >= d.conclusion().succ.size() || !(d.conclusion().succ[j] == f))
            throw PreconditionViolation("join_with_atomic_cut: left position does not hold " + f.str());
    for (auto j : spec.right)
        if (j >= e.conclusion().ante.size() || !(e.conclusion().ante[j] == f))
            throw PreconditionViolation("join_with_atomic_cut: right position does not hold " + f.str());
    Joiner j{trace};
    return j.join(d, e, f, spec);
}

Derivation to_atomic(const Derivation &d, TransformTrace *trace) {
    Derivation a = atomize_equalities(d, trace);
    Derivation out = rebuild(a, [&](const Derivation &x, const std::vector<Derivation> &ps) {
        if (x.rule() != Rule::Cut) return same_rule(x, ps);
        const Formula f = x.premiss(0).conclusion().succ.back();
        if (f.is_atom()) return same_rule(x, ps);
        Joiner j{trace};
        Derivation y = j.join(ps[0], ps[1], f, JoinSpec::ends(ps[0], ps[1]));
        return ensure_end(y, x.conclusion(), "to_atomic");
    });
    return ensure_end(out, d.conclusion(), "to_atomic");
}

}  // namespace eqs
