#include "gen.hpp"

#include <functional>
#include <unordered_map>

#include "eqs/structural.hpp"

namespace eqs::testgen {

namespace {

bool has_bound(const Term &t) {
    if (t.is_bound()) return true;
    for (const auto &a : t.args())
        if (has_bound(a)) return true;
    return false;
}

void subterms(const Term &t, std::vector<Term> &out) {
    if (!has_bound(t)) out.push_back(t);
    for (const auto &a : t.args()) subterms(a, out);
}

void subterms(const Formula &f, std::vector<Term> &out) {
    for (const auto &t : f.terms()) subterms(t, out);
    for (const auto &c : f.children()) subterms(c, out);
}

struct Gen {
    Config cfg;
    std::mt19937 &rng;

    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng); }
    template <class T>
    const T &choose(const std::vector<T> &v) {
        return v[pick(v.size())];
    }

    bool eq_family() const { return cfg.family == Family::EQ || cfg.family == Family::EQ12; }
    bool single() const { return cfg.family != Family::LK; }

    Term term(int depth = 1) {
        static const char *vars[] = {"a", "b", "c"};
        if (depth <= 0 || coin(0.6)) return Term::var(vars[pick(3)]);
        if (coin(0.6)) return Term::fun("f", {term(depth - 1)});
        return Term::fun("g", {term(depth - 1), term(depth - 1)});
    }

    Formula atom() {
        switch (pick(4)) {
            case 0: return Formula::atom("P", {term()});
            case 1: return Formula::atom("R", {term(), term(0)});
            default: return Formula::eq(term(), term());
        }
    }

    Formula formula(int depth) {
        if (depth <= 0 || coin(0.6)) return atom();
        switch (pick(4)) {
            case 0: return Formula::neg(formula(depth - 1));
            case 1: return Formula::conj(formula(depth - 1), formula(depth - 1));
            case 2: return Formula::disj(formula(depth - 1), formula(depth - 1));
            default: return Formula::imp(formula(depth - 1), formula(depth - 1));
        }
    }

    Derivation leaf() {
        if (coin(0.2)) return mk::refl(term());
        if (eq_family()) return mk::ax(cfg.compound_axioms && coin(0.2) ? formula(1) : atom());
        return mk::ax(formula(coin(0.7) ? 0 : 1));
    }

    bool fits(const Derivation &d) const {
        if (d.node_count() > cfg.max_nodes || cut_count(d) > cfg.max_cuts) return false;
        const auto n = d.conclusion().succ.size();
        if (eq_family()) return n == 1;
        return !single() || n <= 1;
    }

    // Abstraction of some occurrences of a subterm of f, with that subterm.
    std::pair<Abstraction, Term> abstraction(const Formula &f) {
        std::vector<Term> ts;
        subterms(f, ts);
        Term r = ts.empty() || coin(0.1) ? term() : choose(ts);
        auto abs = enumerate_abstractions(f, r);
        // Prefer a nonempty selection.
        const Abstraction &ab = abs.size() > 1 && coin(0.85) ? abs[1 + pick(abs.size() - 1)] : abs[0];
        return {ab, r};
    }

    Derivation equality(const Derivation &d, Rule rule) {
        Term s = term();
        if (rule == Rule::Eq1 || rule == Rule::Eq2) {
            const auto &succ = d.conclusion().succ;
            if (succ.empty()) throw SchemaMismatch("no succedent");
            auto [ab, r] = abstraction(succ.back());
            return rule == Rule::Eq1 ? mk::eq1(d, ab, r, s) : mk::eq2(d, ab, r, s);
        }
        const auto &ante = d.conclusion().ante;
        if (ante.empty()) throw SchemaMismatch("no antecedent");
        std::size_t i = pick(ante.size());
        auto [ab, r] = abstraction(ante[i]);
        return rule == Rule::Eq1L ? mk::eq1l(d, ab, r, s, i) : mk::eq2l(d, ab, r, s, i);
    }

    // A derivation whose antecedent ends with f.
    Derivation with_last_ante(const Formula &f, const std::vector<Derivation> &pool) {
        std::vector<Derivation> cands;
        for (const auto &e : pool)
            for (const auto &a : e.conclusion().ante)
                if (a == f) cands.push_back(e);
        if (!cands.empty() && coin(0.7)) {
            Derivation e = choose(cands);
            Sequent c = e.conclusion();
            auto it = std::find(c.ante.begin(), c.ante.end(), f);
            c.ante.erase(it);
            c.ante.push_back(f);
            return rearrange(e, c);
        }
        Derivation base = mk::ax(f);
        if (eq_family() && coin(0.6)) {
            Derivation x = equality(base, coin() ? Rule::Eq1 : Rule::Eq2);
            return mk::exch_l(x, 0);
        }
        if (!eq_family() && !f.is_atom()) {
            // Introduce f on the left from an axiom on one of its parts.
            switch (f.kind()) {
                case Formula::Kind::And:
                    return coin() ? mk::and_l1(mk::ax(f.child(0)), f) : mk::and_l2(mk::ax(f.child(1)), f);
                case Formula::Kind::Or:
                    return mk::or_l(mk::weak_r(mk::ax(f.child(0)), f.child(1)),
                                    rearrange(mk::weak_r(mk::ax(f.child(1)), f.child(0)),
                                              {{f.child(1)}, {f.child(0), f.child(1)}}));
                case Formula::Kind::Not:
                    if (!single()) return mk::not_l(mk::ax(f.child(0)));
                    break;
                case Formula::Kind::Imp:
                    return mk::imp_l(mk::ax(f.child(0)), mk::ax(f.child(1)));
                default: break;
            }
        }
        return base;
    }

    std::optional<Derivation> step(const std::vector<Derivation> &pool) {
        const Derivation &d = choose(pool);
        const Sequent &c = d.conclusion();
        const bool eqf = eq_family();
        std::vector<Rule> rules{Rule::WeakL, Rule::ExchL, Rule::ContrL, Rule::Cut, Rule::Cut, Rule::Eq1, Rule::Eq2};
        if (cfg.family == Family::EQ12) rules.insert(rules.end(), {Rule::Eq1L, Rule::Eq2L, Rule::Eq1L});
        if (!eqf)
            rules.insert(rules.end(), {Rule::WeakR, Rule::ExchR, Rule::ContrR, Rule::AndL1, Rule::AndR, Rule::OrR1,
                                       Rule::OrL, Rule::ImpR, Rule::ImpL, Rule::NotL, Rule::NotR, Rule::ForallL,
                                       Rule::ForallR, Rule::ExistsL, Rule::ExistsR, Rule::Cut, Rule::Eq1});
        Rule rule = choose(rules);
        switch (rule) {
            case Rule::WeakL: return mk::weak_l(d, eqf ? atom() : formula(1));
            case Rule::WeakR: return mk::weak_r(d, formula(1));
            case Rule::ExchL: return mk::exch_l(d, pick(c.ante.size() > 1 ? c.ante.size() - 1 : 1));
            case Rule::ExchR: return mk::exch_r(d, pick(c.succ.size() > 1 ? c.succ.size() - 1 : 1));
            case Rule::ContrL:
            case Rule::ContrR: {
                const auto &side = rule == Rule::ContrL ? c.ante : c.succ;
                for (std::size_t j = 0; j + 1 < side.size(); ++j)
                    if (side[j] == side[j + 1]) return rule == Rule::ContrL ? mk::contr_l(d, j) : mk::contr_r(d, j);
                return std::nullopt;
            }
            case Rule::Cut: {
                if (c.succ.empty()) return std::nullopt;
                return mk::cut(d, with_last_ante(c.succ.back(), pool));
            }
            case Rule::Eq1:
            case Rule::Eq2:
            case Rule::Eq1L:
            case Rule::Eq2L: return equality(d, rule);
            case Rule::AndL1: {
                if (c.ante.empty()) return std::nullopt;
                Formula g = formula(0);
                return coin() ? mk::and_l1(d, Formula::conj(c.ante.back(), g))
                              : mk::and_l2(d, Formula::conj(g, c.ante.back()));
            }
            case Rule::AndR: {
                // Second premiss: an axiom on a fresh conjunct, weakened to the same context.
                if (c.succ.empty()) return std::nullopt;
                Formula g = formula(0);
                std::vector<Formula> ctx(c.succ.begin(), c.succ.end() - 1);
                Derivation d2 = mk::weak_l(d, g);
                Derivation e = rearrange(mk::ax(g), {plus_all(c.ante, g), plus_all(ctx, g)});
                return mk::and_r(d2, e);
            }
            case Rule::OrL: {
                if (c.ante.empty()) return std::nullopt;
                Formula g = formula(0);
                std::vector<Formula> ctx(c.ante.begin(), c.ante.end() - 1);
                Derivation d2 = d;
                if (std::find(c.succ.begin(), c.succ.end(), g) == c.succ.end()) {
                    if (single() && !c.succ.empty()) return std::nullopt;
                    d2 = mk::weak_r(d, g);
                }
                Derivation e = rearrange(mk::ax(g), {plus_all(ctx, g), d2.conclusion().succ});
                return mk::or_l(d2, e);
            }
            case Rule::OrR1: {
                if (c.succ.empty()) return std::nullopt;
                Formula g = formula(0);
                return coin() ? mk::or_r1(d, Formula::disj(c.succ.back(), g))
                              : mk::or_r2(d, Formula::disj(g, c.succ.back()));
            }
            case Rule::ImpR: {
                if (c.ante.empty()) return std::nullopt;
                if (c.succ.empty()) {
                    if (single()) return std::nullopt;
                    return mk::imp_r(mk::weak_r(d, formula(0)));
                }
                return mk::imp_r(d);
            }
            case Rule::ImpL: {
                if (c.succ.empty()) return std::nullopt;
                const Derivation &e = choose(pool);
                if (e.conclusion().ante.empty()) return std::nullopt;
                if (single() && !c.succ.empty() && c.succ.size() > 1) return std::nullopt;
                // LJ: the left premiss's succedent is consumed, the right one's kept.
                return mk::imp_l(d, e);
            }
            case Rule::NotL:
                if (c.succ.empty()) return std::nullopt;
                return mk::not_l(d);
            case Rule::NotR:
                if (c.ante.empty()) return std::nullopt;
                if (single() && !c.succ.empty()) return std::nullopt;
                return mk::not_r(d);
            case Rule::ForallL:
            case Rule::ExistsR: {
                const auto &side = rule == Rule::ForallL ? c.ante : c.succ;
                if (side.empty()) return std::nullopt;
                const Formula &a = side.back();
                VarSet avoid;
                collect_vars(a, avoid);
                std::string h = fresh_var(avoid);
                std::vector<Term> ts;
                subterms(a, ts);
                if (ts.empty()) return std::nullopt;
                Term t = choose(ts);
                auto occ = occurrences(a, t);
                std::vector<Path> sel;
                for (const auto &p : occ)
                    if (coin(0.7)) sel.push_back(p);
                Abstraction ab = abstract_occurrences(a, t, sel, h);
                Formula q = rule == Rule::ForallL ? Formula::forall_over(h, ab.skeleton)
                                                  : Formula::exists_over(h, ab.skeleton);
                return rule == Rule::ForallL ? mk::forall_l(d, q, t) : mk::exists_r(d, q, t);
            }
            case Rule::ForallR:
            case Rule::ExistsL: {
                const bool right = rule == Rule::ForallR;
                const auto &side = right ? c.succ : c.ante;
                if (side.empty()) return std::nullopt;
                const Formula &a = side.back();
                Sequent rest = c;
                (right ? rest.succ : rest.ante).pop_back();
                VarSet in_a, in_rest;
                collect_vars(a, in_a);
                collect_vars(rest, in_rest);
                std::vector<std::string> ok;
                for (const auto &v : in_a)
                    if (!in_rest.count(v)) ok.push_back(v);
                if (ok.empty()) return std::nullopt;
                std::string u = choose(ok);
                Formula q = right ? Formula::forall_over(u, a) : Formula::exists_over(u, a);
                return right ? mk::forall_r(d, q, u) : mk::exists_l(d, q, u);
            }
            default: return std::nullopt;
        }
    }

    static std::vector<Formula> plus_all(std::vector<Formula> v, const Formula &f) {
        v.push_back(f);
        return v;
    }

    Derivation run() {
        for (;;) {
            std::vector<Derivation> pool;
            for (int k = 0; k < 4; ++k) {
                Derivation l = leaf();
                if (fits(l)) pool.push_back(l);
            }
            if (pool.empty()) continue;
            for (std::size_t k = 0; k < cfg.steps; ++k) {
                try {
                    auto x = step(pool);
                    if (x && fits(*x)) pool.push_back(*x);
                } catch (const ProofError &) {
                }
            }
            // Largest derivation meeting the cut minimum.
            std::optional<Derivation> best;
            for (const auto &d : pool)
                if (cut_count(d) >= cfg.min_cuts && (!best || d.node_count() > best->node_count())) best = d;
            if (best) return *best;
        }
    }
};

}  // namespace

std::size_t cut_count(const Derivation &d) {
    std::size_t n = d.rule() == Rule::Cut ? 1 : 0;
    for (const auto &p : d.premisses()) n += cut_count(p);
    return n;
}

Derivation random_derivation(const Config &cfg, std::mt19937 &rng) {
    Gen g{cfg, rng};
    return g.run();
}

}  // namespace eqs::testgen
