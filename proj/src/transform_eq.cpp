// Cut elimination for the purely equational calculi and for LJ=/LK= on top
// of separation.

#include "transform_util.hpp"

namespace eqs {

using namespace detail;

namespace {

bool has_cut(const Derivation &d) {
    return has_rule(d, [](const Derivation &x) { return x.rule() == Rule::Cut; });
}

// w = s, with w fresh: the abstraction turning s=s into r=s.
Abstraction eq_left_hole(const Term &s, const Term &r) {
    std::string w = fresh_for({r, s});
    return {Formula::eq(Term::var(w), s), w};
}

Derivation cng_join(const Derivation &d, const Derivation &e, const Formula &f, const std::vector<std::size_t> &extras,
                    TransformTrace *trace) {
    const Sequent &ce = e.conclusion();
    const auto lambda = without(ce.ante, extras);
    const Sequent target{concat(d.conclusion().ante, lambda), ce.succ};

    if (extras.empty() || contains(lambda, f)) return rearrange(e, target);
    if (e.rule() == Rule::Ax) return ensure_end(rearrange(d, target), target, "cng_cut_join");
    if (e.rule() == Rule::Cut) throw PreconditionViolation("cng_cut_join: right derivation contains a cut");
    const Measure here{e.height()};
    Derivation x = push_through(
        e, {extras, {}},
        [&](const Derivation &p, const Occurrences &sel) {
            record(trace, "cng_cut_join", rule_name(e.rule()), here, {p.height()});
            return cng_join(d, p, f, sel.ante, trace);
        },
        {});
    return ensure_end(rearrange(x, target), target, "cng_cut_join");
}

Derivation admit(const Derivation &d, const Derivation &e, const Abstraction &ab, const Term &r, const Term &s,
                 TransformTrace *trace) {
    const Sequent target{concat(d.conclusion().ante, e.conclusion().ante), {ab.apply(s)}};
    if (r == s) return ensure_end(rearrange(d, target), target, "admit_cng");
    const Measure here{e.height()};
    const RuleApp &ea = e.app();
    switch (e.rule()) {
        case Rule::Ax: return ensure_end(mk::eq1(d, ab, r, s), target, "admit_cng");
        case Rule::WeakL:
        case Rule::ExchL:
        case Rule::ContrL: {
            record(trace, "admit_cng", "structural", here, {e.premiss(0).height()});
            return ensure_end(rearrange(admit(d, e.premiss(0), ab, r, s, trace), target), target, "admit_cng");
        }
        case Rule::Eq1:
        case Rule::Eq2: {
            // e: Λ', op => l{u/q} = ρ{u/q} from Λ' => l{u/p} = ρ{u/p}.
            const Formula &sk = ea.ab.skeleton;
            if (!sk.is_eq()) break;
            const std::string &u = ea.ab.hole;
            const Term &p = ea.r, &q = ea.s;
            VarSet avoid;
            collect_vars(ab.skeleton, avoid);
            collect_vars(sk, avoid);
            collect_vars(p, avoid);
            collect_vars(q, avoid);
            avoid.insert(ab.hole);
            const Term w = Term::var(fresh_var(avoid));
            const Abstraction g1{subst(ab.skeleton, ab.hole, subst(sk.lhs(), u, w)), w.name()};
            const Abstraction g2{subst(ab.skeleton, ab.hole, subst(sk.rhs(), u, w)), w.name()};
            const Term lp = subst(sk.lhs(), u, p), rp = subst(sk.rhs(), u, p);
            // Eq1 case: p=q turns l{u/q} back into l{u/p} by Eq2; Eq2 case: q=p by Eq1.
            Derivation d1 = ea.rule == Rule::Eq1 ? mk::eq2(d, g1, q, p) : mk::eq1(d, g1, q, p);
            record(trace, "admit_cng", rule_name(e.rule()), here, {e.premiss(0).height()});
            Derivation f0 = admit(d1, e.premiss(0), ab, lp, rp, trace);
            Derivation f1 = ea.rule == Rule::Eq1 ? mk::eq1(f0, g2, p, q) : mk::eq2(f0, g2, p, q);
            return ensure_end(rearrange(f1, target), target, "admit_cng");
        }
        default: break;
    }
    throw PreconditionViolation(std::string("admit_cng: unexpected rule ") + rule_name(e.rule()) +
                                " in the equality derivation");
}

Derivation cng_to_eq(const Derivation &x, const std::vector<Derivation> &ps) {
    const RuleApp &a = x.app();
    Derivation e1 = mk::eq1(ps[0], a.ab, a.r, a.s);
    return ensure_end(rearrange(mk::cut(ps[1], e1), x.conclusion()), x.conclusion(), "eq_cng_interderive");
}

Derivation eq_elim_to_eq(const Derivation &x, const std::vector<Derivation> &ps) {
    const RuleApp &a = x.app();
    Derivation e1 = mk::eq1(ps[0], a.ab, a.r, a.s);  // Γ1, r=s => Δ1, F{s}
    return ensure_end(rearrange(mk::cut(e1, ps[1]), x.conclusion()), x.conclusion(), "eliminate_cuts_full");
}

}  // namespace

Derivation eq_cng_interderive(const Derivation &d, CngDirection dir) {
    Derivation out = rebuild(d, [&](const Derivation &x, const std::vector<Derivation> &ps) {
        const RuleApp &a = x.app();
        if (dir == CngDirection::ToEqn) {
            if (a.rule == Rule::Eq1) return mk::cng(ps[0], mk::ax(Formula::eq(a.r, a.s)), a.ab, a.r, a.s);
            if (a.rule == Rule::Eq2) {
                // s=r => r=s from => s=s and s=r => s=r.
                Derivation sym = mk::cng(mk::refl(a.s), mk::ax(Formula::eq(a.s, a.r)), eq_left_hole(a.s, a.r), a.s,
                                         a.r);
                return mk::cng(ps[0], sym, a.ab, a.r, a.s);
            }
        } else if (a.rule == Rule::Cng) {
            return cng_to_eq(x, ps);
        }
        return same_rule(x, ps);
    });
    return ensure_end(out, d.conclusion(), "eq_cng_interderive");
}

Derivation cng_cut_join(const Derivation &d, const Derivation &e, const Formula &f,
                        const std::vector<std::size_t> &extras, TransformTrace *trace) {
    if (has_cut(d) || has_cut(e)) throw PreconditionViolation("cng_cut_join: inputs must be cut-free");
    if (d.conclusion().succ.size() != 1 || !(d.conclusion().succ[0] == f))
        throw PreconditionViolation("cng_cut_join: left derivation does not end with => " + f.str());
    return cng_join(d, e, f, extras, trace);
}

Derivation eliminate_cuts_eqn(const Derivation &d, TransformTrace *trace) {
    Derivation out = rebuild(d, [&](const Derivation &x, const std::vector<Derivation> &ps) {
        if (x.rule() != Rule::Cut) return same_rule(x, ps);
        std::vector<std::size_t> last{ps[1].conclusion().ante.size() - 1};
        Derivation y = cng_join(ps[0], ps[1], x.premiss(0).conclusion().succ.back(), last, trace);
        return ensure_end(y, x.conclusion(), "eliminate_cuts_eqn");
    });
    return ensure_end(out, d.conclusion(), "eliminate_cuts_eqn");
}

Derivation admit_cng(const Derivation &d, const Derivation &e, const Abstraction &ab, const Term &r, const Term &s,
                     TransformTrace *trace) {
    if (has_cut(d) || has_cut(e)) throw PreconditionViolation("admit_cng: inputs must be cut-free");
    if (e.conclusion().succ.size() != 1 || !(e.conclusion().succ[0] == Formula::eq(r, s)))
        throw PreconditionViolation("admit_cng: right derivation does not end with => r=s");
    if (d.conclusion().succ.size() != 1 || !(d.conclusion().succ[0] == ab.apply(r)))
        throw PreconditionViolation("admit_cng: left derivation does not end with => " + ab.apply(r).str());
    return admit(d, e, ab, r, s, trace);
}

Derivation eq12_to_eq(const Derivation &d) {
    Derivation out = rebuild(d, [&](const Derivation &x, const std::vector<Derivation> &ps) {
        const RuleApp &a = x.app();
        if (!is_left_eq(a.rule)) return same_rule(x, ps);
        const Formula fr = a.ab.apply(a.r), fs = a.ab.apply(a.s);
        // F{s}, op => F{r}
        Derivation basic = a.rule == Rule::Eq1L ? mk::eq2(mk::ax(fs), a.ab, a.s, a.r)
                                                : mk::eq1(mk::ax(fs), a.ab, a.s, a.r);
        Sequent pc = ps[0].conclusion();
        pc.ante.erase(pc.ante.begin() + static_cast<std::ptrdiff_t>(a.i));
        Derivation p = rearrange(ps[0], {plus(pc.ante, fr), pc.succ});
        return ensure_end(rearrange(mk::cut(basic, p), x.conclusion()), x.conclusion(), "eq12_to_eq");
    });
    return ensure_end(out, d.conclusion(), "eq12_to_eq");
}

Derivation eliminate_cuts_eq(const Derivation &d, TransformTrace *trace) {
    Derivation x = d;
    if (has_rule(x, [](const Derivation &y) { return is_left_eq(y.rule()); })) x = eq12_to_eq(x);
    if (!has_cut(x)) return x;
    x = eq_cng_interderive(x, CngDirection::ToEqn);
    x = eliminate_cuts_eqn(x, trace);
    Derivation out = rebuild(x, [&](const Derivation &y, const std::vector<Derivation> &ps) {
        if (y.rule() != Rule::Cng) return same_rule(y, ps);
        const RuleApp &a = y.app();
        return ensure_end(admit(ps[0], ps[1], a.ab, a.r, a.s, trace), y.conclusion(), "eliminate_cuts_eq");
    });
    return ensure_end(out, d.conclusion(), "eliminate_cuts_eq");
}

Derivation eliminate_cuts_full(const Derivation &d, const SystemSpec &sys, TransformTrace *trace) {
    if (sys.allows(Rule::Cng)) {
        Derivation x = eq_cng_interderive(d, CngDirection::ToEq);
        x = eliminate_cuts_full(x, parse_system(sys.intuitionistic() ? "LJ=" : "LK="), trace);
        return ensure_end(eq_cng_interderive(x, CngDirection::ToEqn), d.conclusion(), "eliminate_cuts_full");
    }
    if (sys.allows(Rule::EqElim)) {
        Derivation x = rebuild(d, [&](const Derivation &y, const std::vector<Derivation> &ps) {
            return y.rule() == Rule::EqElim ? eq_elim_to_eq(y, ps) : same_rule(y, ps);
        });
        x = eliminate_cuts_full(x, parse_system(sys.intuitionistic() ? "LJ=" : "LK="), trace);
        return ensure_end(embed_pure(x), d.conclusion(), "eliminate_cuts_full");
    }
    if (!has_cut(d)) return d;
    Derivation sep = separate(d, trace);
    std::unordered_map<const void *, Derivation> memo;
    auto go = [&](auto &&self, const Derivation &x) -> Derivation {
        if (auto it = memo.find(x.id()); it != memo.end()) return it->second;
        Derivation out;
        if (!has_cut(x)) {
            out = x;
        } else if (x.pure_equational()) {
            out = eliminate_cuts_eq(x, trace);
        } else {
            std::vector<Derivation> ps;
            for (const auto &p : x.premisses()) ps.push_back(self(self, p));
            if (x.rule() == Rule::Cut) throw ProofError("eliminate_cuts_full: cut outside the equational layer");
            out = same_rule(x, ps);
        }
        memo.emplace(x.id(), out);
        return out;
    };
    Derivation out = go(go, sep);
    // In the =_1 / =_2 systems the equational layer comes back with both eq1
    // and eq2; transpose each maximal equational subderivation.
    const bool no2 = !sys.allows(Rule::Eq2), no1 = !sys.allows(Rule::Eq1);
    if (no1 != no2) {
        const Rule banned = no2 ? Rule::Eq2 : Rule::Eq1;
        const EqTarget target = no2 ? EqTarget::Eq1 : EqTarget::Eq2;
        memo.clear();
        auto fix = [&](auto &&self, const Derivation &x) -> Derivation {
            if (auto it = memo.find(x.id()); it != memo.end()) return it->second;
            Derivation y;
            if (!has_rule(x, [&](const Derivation &n) { return n.rule() == banned; })) {
                y = x;
            } else if (x.pure_equational()) {
                y = transpose_eq(x, target, trace);
            } else {
                std::vector<Derivation> ps;
                for (const auto &p : x.premisses()) ps.push_back(self(self, p));
                y = same_rule(x, ps);
            }
            memo.emplace(x.id(), y);
            return y;
        };
        out = fix(fix, out);
    }
    return ensure_end(out, d.conclusion(), "eliminate_cuts_full");
}

Derivation embed_pure(const Derivation &d) {
    if (has_cut(d)) throw PreconditionViolation("embed_pure: input contains a cut");
    Derivation out = rebuild(d, [&](const Derivation &x, const std::vector<Derivation> &ps) {
        const RuleApp &a = x.app();
        const Formula fs = is_equality(a.rule) ? a.ab.apply(a.s) : Formula();
        switch (a.rule) {
            case Rule::Eq1: return mk::eq_elim(ps[0], mk::ax(fs), a.ab, a.r, a.s);
            case Rule::Eq2: {
                Derivation inner = mk::eq_elim(ps[0], mk::ax(fs), a.ab, a.r, a.s);  // Γ, r=s => Δ, F{s}
                return ensure_end(mk::eq_elim(mk::refl(a.s), inner, eq_left_hole(a.s, a.r), a.s, a.r),
                                  x.conclusion(), "embed_pure");
            }
            case Rule::Eq1L:
            case Rule::Eq2L: {
                Sequent pc = ps[0].conclusion();
                const Formula fr = pc.ante[a.i];
                pc.ante.erase(pc.ante.begin() + static_cast<std::ptrdiff_t>(a.i));
                Derivation p = rearrange(ps[0], {plus(pc.ante, fr), pc.succ});
                Derivation y = mk::eq_elim(mk::ax(fs), p, a.ab, a.s, a.r);  // F{s}, Γ', s=r => Δ
                if (a.rule == Rule::Eq1L) y = mk::eq_elim(mk::refl(a.r), y, eq_left_hole(a.r, a.s), a.r, a.s);
                return ensure_end(rearrange(y, x.conclusion()), x.conclusion(), "embed_pure");
            }
            case Rule::Cng: throw PreconditionViolation("embed_pure: Cng inferences are not supported");
            default: return same_rule(x, ps);
        }
    });
    return ensure_end(out, d.conclusion(), "embed_pure");
}

}  // namespace eqs
