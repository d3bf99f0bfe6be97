// Separation: pushing atomic equality inferences and atomic cuts up into
// purely equational subderivations.

#include "transform_util.hpp"

namespace eqs {

using namespace detail;

namespace {

Derivation sep_eq(const Derivation &d, const Abstraction &ab, const Term &r, const Term &s, EqDir dir,
                  const std::vector<std::size_t> &extras, TransformTrace *trace) {
    const Formula ar = ab.apply(r), as = ab.apply(s);
    const Formula op = dir == EqDir::One ? Formula::eq(r, s) : Formula::eq(s, r);
    const Sequent &c = d.conclusion();
    const auto delta = without(c.succ, extras);
    const Sequent target{plus(c.ante, op), plus(delta, as)};

    if (extras.empty() || contains(delta, ar)) return rearrange(d, target);
    if (d.pure_equational()) {
        // Single succedent, so it is the one extra occurrence.
        Derivation x = dir == EqDir::One ? mk::eq1(d, ab, r, s) : mk::eq2(d, ab, r, s);
        return ensure_end(x, target, "sep_eq_step");
    }
    const Measure here{d.height()};
    VarSet avoid;
    collect_vars(op, avoid);
    collect_vars(as, avoid);
    Derivation x = push_through(
        d, {{}, extras},
        [&](const Derivation &p, const Occurrences &sel) {
            record(trace, "sep_eq_step", rule_name(d.rule()), here, {p.height()});
            return sep_eq(p, ab, r, s, dir, sel.succ, trace);
        },
        avoid);
    return ensure_end(rearrange(x, target), target, "sep_eq_step");
}

Derivation sep_cut(const Derivation &d, const Derivation &e, const Formula &a, const JoinSpec &spec,
                   TransformTrace *trace) {
    const Sequent &cd = d.conclusion(), &ce = e.conclusion();
    const auto gamma = cd.ante, delta = without(cd.succ, spec.left);
    const auto lambda = without(ce.ante, spec.right), theta = ce.succ;
    const Sequent target{concat(gamma, lambda), concat(delta, theta)};

    if (spec.left.empty() || contains(delta, a) || contains(theta, a)) return rearrange(d, target);
    if (spec.right.empty() || contains(lambda, a) || contains(gamma, a)) return rearrange(e, target);
    if (d.pure_equational() && e.pure_equational()) {
        Derivation r = rearrange(e, {plus(lambda, a), theta});
        return ensure_end(mk::cut(d, r), target, "sep_cut_step");
    }
    const Measure here{d.height() + e.height()};
    Derivation x;
    if (!d.pure_equational()) {
        x = push_through(
            d, {{}, spec.left},
            [&](const Derivation &p, const Occurrences &sel) {
                record(trace, "sep_cut_step", "left", here, {p.height() + e.height()});
                return sep_cut(p, e, a, {sel.succ, spec.right}, trace);
            },
            vars_of(ce));
    } else {
        x = push_through(
            e, {spec.right, {}},
            [&](const Derivation &p, const Occurrences &sel) {
                record(trace, "sep_cut_step", "right", here, {d.height() + p.height()});
                return sep_cut(d, p, a, {spec.left, sel.ante}, trace);
            },
            vars_of(cd));
    }
    return ensure_end(rearrange(x, target), target, "sep_cut_step");
}

}  // namespace

bool is_separated(const Derivation &d) {
    return !has_rule(d, [](const Derivation &x) {
        return (x.rule() == Rule::Cut || is_equality(x.rule())) && !x.pure_equational();
    });
}

Derivation sep_eq_step(const Derivation &d, const Abstraction &ab, const Term &r, const Term &s, EqDir dir,
                       const std::vector<std::size_t> &extras, TransformTrace *trace) {
    if (!ab.skeleton.is_atom()) throw PreconditionViolation("sep_eq_step: formula is not atomic");
    if (!is_separated(d)) throw PreconditionViolation("sep_eq_step: input is not separated");
    const Formula ar = ab.apply(r);
    for (auto j : extras)
        if (j >= d.conclusion().succ.size() || !(d.conclusion().succ[j] == ar))
            throw PreconditionViolation("sep_eq_step: position does not hold " + ar.str());
    return sep_eq(d, ab, r, s, dir, extras, trace);
}

Derivation sep_cut_step(const Derivation &d, const Derivation &e, const Formula &a, const JoinSpec &spec,
                        TransformTrace *trace) {
    if (!a.is_atom()) throw PreconditionViolation("sep_cut_step: cut formula is not atomic");
    if (!is_separated(d) || !is_separated(e)) throw PreconditionViolation("sep_cut_step: input is not separated");
    return sep_cut(d, e, a, spec, trace);
}

Derivation separate(const Derivation &d, TransformTrace *trace) {
    Derivation a = to_atomic(d, trace);
    Derivation out = rebuild(a, [&](const Derivation &x, const std::vector<Derivation> &ps) {
        const RuleApp &app = x.app();
        switch (app.rule) {
            case Rule::Eq1:
            case Rule::Eq2: {
                Derivation p = ps[0];
                std::vector<std::size_t> last{p.conclusion().succ.size() - 1};
                EqDir dir = app.rule == Rule::Eq1 ? EqDir::One : EqDir::Two;
                return ensure_end(sep_eq(p, app.ab, app.r, app.s, dir, last, trace), x.conclusion(), "separate");
            }
            case Rule::Cut: {
                const Formula f = x.premiss(0).conclusion().succ.back();
                return ensure_end(sep_cut(ps[0], ps[1], f, JoinSpec::ends(ps[0], ps[1]), trace), x.conclusion(),
                                  "separate");
            }
            case Rule::Eq1L:
            case Rule::Eq2L:
            case Rule::EqElim:
            case Rule::Cng:
                if (!ps[0].pure_equational() || (ps.size() > 1 && !ps[1].pure_equational()))
                    throw PreconditionViolation(std::string("separate: ") + rule_name(app.rule) +
                                                " above a logical rule is not supported");
                return same_rule(x, ps);
            default: return same_rule(x, ps);
        }
    });
    return ensure_end(out, d.conclusion(), "separate");
}

}  // namespace eqs
