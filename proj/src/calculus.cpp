#include "eqs/calculus.hpp"

#include <algorithm>
#include <array>

namespace eqs {

namespace {

constexpr std::array<const char *, kRuleCount> kNames = {
    "ax",   "refl", "hyp",  "wl",   "wr",   "xl",   "xr",   "cl",   "cr",    "cut",    "andl1",
    "andl2", "andr", "orl",  "orr1", "orr2", "impl", "impr", "notl",  "notr",   "alll",
    "allr", "exl",  "exr",  "eq1",  "eq2",  "eq1l", "eq2l", "eqelim", "cng",
};

void need(bool cond, const std::string &msg) {
    if (!cond) throw SchemaMismatch(msg);
}

std::vector<Formula> slice(const std::vector<Formula> &v, std::size_t from, std::size_t to) {
    return {v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to)};
}

std::vector<Formula> concat(std::vector<Formula> a, const std::vector<Formula> &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<Formula> plus(std::vector<Formula> a, const Formula &f) {
    a.push_back(f);
    return a;
}

const Formula &last(const std::vector<Formula> &v, const char *side, const RuleApp &app) {
    need(!v.empty(), std::string(rule_name(app.rule)) + ": empty " + side);
    return v.back();
}

std::vector<Formula> but_last(const std::vector<Formula> &v) { return slice(v, 0, v.size() - 1); }

void need_kind(const Formula &f, Formula::Kind k, const RuleApp &app) {
    need(!f.null() && f.kind() == k,
         std::string(rule_name(app.rule)) + ": principal formula " + (f.null() ? "<none>" : f.str()) +
             " has the wrong connective");
}

void need_principal(const RuleApp &app, const Formula &actual) {
    if (!app.f.null())
        need(app.f == actual, std::string(rule_name(app.rule)) + ": annotated principal " + app.f.str() +
                                  " differs from " + actual.str());
}

void need_witness(const RuleApp &app) {
    need(!app.ab.skeleton.null() && !app.ab.hole.empty() && !app.r.null() && !app.s.null(),
         std::string(rule_name(app.rule)) + ": missing equality witness");
    need(!occurs(app.ab.hole, app.r) && !occurs(app.ab.hole, app.s),
         std::string(rule_name(app.rule)) + ": hole " + app.ab.hole + " occurs in r or s");
}

std::string seq(const Sequent &s) { return s.str(); }

}  // namespace

const char *rule_name(Rule r) { return kNames[static_cast<std::size_t>(r)]; }

std::optional<Rule> rule_from_name(const std::string &name) {
    for (int i = 0; i < kRuleCount; ++i)
        if (name == kNames[i]) return static_cast<Rule>(i);
    return std::nullopt;
}

std::size_t premiss_count(Rule r) {
    switch (r) {
        case Rule::Ax:
        case Rule::Refl:
        case Rule::Hyp:
            return 0;
        case Rule::Cut:
        case Rule::AndR:
        case Rule::OrL:
        case Rule::ImpL:
        case Rule::EqElim:
        case Rule::Cng:
            return 2;
        default:
            return 1;
    }
}

bool is_axiom(Rule r) { return r == Rule::Ax || r == Rule::Refl || r == Rule::Hyp; }

bool is_structural(Rule r) {
    switch (r) {
        case Rule::WeakL:
        case Rule::WeakR:
        case Rule::ExchL:
        case Rule::ExchR:
        case Rule::ContrL:
        case Rule::ContrR:
            return true;
        default:
            return false;
    }
}

bool is_logical(Rule r) { return r >= Rule::AndL1 && r <= Rule::ExistsR; }

bool is_equality(Rule r) { return r >= Rule::Eq1; }

bool is_left_eq(Rule r) { return r == Rule::Eq1L || r == Rule::Eq2L; }

Formula RuleApp::operating_equality() const {
    if (rule == Rule::Eq2 || rule == Rule::Eq2L) return Formula::eq(s, r);
    return Formula::eq(r, s);
}

std::string RuleApp::str() const {
    std::string out = rule_name(rule);
    auto q = [&](const char *k, const std::string &v) { out += std::string(" ") + k + "=\"" + v + "\""; };
    auto n = [&](const char *k, std::size_t v) { out += std::string(" ") + k + "=" + std::to_string(v); };
    switch (rule) {
        case Rule::Ax:
        case Rule::WeakL:
        case Rule::WeakR:
        case Rule::AndL1:
        case Rule::AndL2:
        case Rule::OrR1:
        case Rule::OrR2:
            if (!f.null()) q("f", f.str());
            break;
        case Rule::Refl:
            if (!t.null()) q("t", t.str());
            break;
        case Rule::ExchL:
        case Rule::ExchR:
        case Rule::ContrL:
        case Rule::ContrR:
            n("i", i);
            break;
        case Rule::Cut:
            if (!f.null()) q("f", f.str());
            n("la", la);
            n("ls", ls);
            break;
        case Rule::ImpL:
            n("la", la);
            n("ls", ls);
            break;
        case Rule::ForallL:
        case Rule::ExistsR:
            if (!t.null()) q("t", t.str());
            break;
        case Rule::ForallR:
        case Rule::ExistsL:
            out += " u=" + u;
            break;
        case Rule::Eq1:
        case Rule::Eq2:
        case Rule::Eq1L:
        case Rule::Eq2L:
        case Rule::EqElim:
        case Rule::Cng:
            out += " hole=" + ab.hole;
            q("skel", ab.skeleton.null() ? "" : ab.skeleton.str());
            q("r", r.null() ? "" : r.str());
            q("s", s.null() ? "" : s.str());
            if (is_left_eq(rule)) n("i", i);
            if (rule == Rule::EqElim || rule == Rule::Cng) {
                n("la", la);
                n("ls", ls);
            }
            break;
        default:
            break;
    }
    return out;
}

namespace {

bool same_app(const RuleApp &a, const RuleApp &b) {
    if (a.rule != b.rule) return false;
    switch (a.rule) {
        case Rule::Ax:
        case Rule::WeakL:
        case Rule::WeakR:
        case Rule::AndL1:
        case Rule::AndL2:
        case Rule::AndR:
        case Rule::OrL:
        case Rule::OrR1:
        case Rule::OrR2:
        case Rule::ImpR:
        case Rule::NotL:
        case Rule::NotR:
            return a.f == b.f;
        case Rule::Refl:
            return a.t == b.t;
        case Rule::Hyp:
            return true;
        case Rule::ExchL:
        case Rule::ExchR:
        case Rule::ContrL:
        case Rule::ContrR:
            return a.i == b.i;
        case Rule::Cut:
        case Rule::ImpL:
            return a.f == b.f && a.la == b.la && a.ls == b.ls;
        case Rule::ForallL:
        case Rule::ExistsR:
            return a.f == b.f && a.t == b.t;
        case Rule::ForallR:
        case Rule::ExistsL:
            return a.f == b.f && a.u == b.u;
        case Rule::Eq1:
        case Rule::Eq2:
            return a.ab == b.ab && a.r == b.r && a.s == b.s;
        case Rule::Eq1L:
        case Rule::Eq2L:
            return a.ab == b.ab && a.r == b.r && a.s == b.s && a.i == b.i;
        case Rule::EqElim:
        case Rule::Cng:
            return a.ab == b.ab && a.r == b.r && a.s == b.s && a.la == b.la && a.ls == b.ls;
    }
    return false;
}

}  // namespace

Derivation Derivation::make(Sequent conclusion, RuleApp app, std::vector<Derivation> premisses) {
    std::size_t h = 0, nodes = 1;
    bool pure = conclusion.succ.size() == 1 &&
                (is_axiom(app.rule) || is_equality(app.rule) || app.rule == Rule::WeakL ||
                 app.rule == Rule::ExchL || app.rule == Rule::ContrL || app.rule == Rule::Cut);
    for (const auto &p : premisses) {
        h = std::max(h, p.height() + 1);
        nodes += p.node_count();
        pure = pure && p.pure_equational();
    }
    return Derivation(std::make_shared<const Node>(
        Node{std::move(conclusion), std::move(app), std::move(premisses), h, nodes, pure}));
}

bool operator==(const Derivation &a, const Derivation &b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.node_count() != b.node_count() || !(a.conclusion() == b.conclusion()) || !same_app(a.app(), b.app()))
        return false;
    for (std::size_t i = 0; i < a.premisses().size(); ++i)
        if (!(a.premiss(i) == b.premiss(i))) return false;
    return true;
}

// ---------------------------------------------------------------------------

std::vector<Sequent> premiss_schema(const RuleApp &app, const Sequent &c) {
    const std::string name = rule_name(app.rule);
    const auto &A = c.ante;
    const auto &S = c.succ;
    switch (app.rule) {
        case Rule::Ax:
            need(A.size() == 1 && S.size() == 1 && A[0] == S[0], "ax: conclusion is not F => F: " + seq(c));
            need_principal(app, A[0]);
            return {};
        case Rule::Refl:
            need(A.empty() && S.size() == 1 && S[0].is_eq() && S[0].lhs() == S[0].rhs(),
                 "refl: conclusion is not => t=t: " + seq(c));
            if (!app.t.null()) need(S[0].lhs() == app.t, "refl: annotated term differs");
            return {};
        case Rule::Hyp:
            return {};
        case Rule::WeakL:
            need_principal(app, last(A, "antecedent", app));
            return {{but_last(A), S}};
        case Rule::WeakR:
            need_principal(app, last(S, "succedent", app));
            return {{A, but_last(S)}};
        case Rule::ExchL: {
            need(app.i + 1 < A.size(), name + ": index out of range");
            auto P = A;
            std::swap(P[app.i], P[app.i + 1]);
            return {{P, S}};
        }
        case Rule::ExchR: {
            need(app.i + 1 < S.size(), name + ": index out of range");
            auto P = S;
            std::swap(P[app.i], P[app.i + 1]);
            return {{A, P}};
        }
        case Rule::ContrL: {
            need(app.i < A.size(), name + ": index out of range");
            auto P = A;
            P.insert(P.begin() + static_cast<std::ptrdiff_t>(app.i) + 1, A[app.i]);
            return {{P, S}};
        }
        case Rule::ContrR: {
            need(app.i < S.size(), name + ": index out of range");
            auto P = S;
            P.insert(P.begin() + static_cast<std::ptrdiff_t>(app.i) + 1, S[app.i]);
            return {{A, P}};
        }
        case Rule::Cut:
            need(!app.f.null(), "cut: missing cut formula");
            need(app.la <= A.size() && app.ls <= S.size(), "cut: context split out of range");
            return {{slice(A, 0, app.la), plus(slice(S, 0, app.ls), app.f)},
                    {plus(slice(A, app.la, A.size()), app.f), slice(S, app.ls, S.size())}};
        case Rule::AndL1:
        case Rule::AndL2: {
            const auto &p = last(A, "antecedent", app);
            need_kind(p, Formula::Kind::And, app);
            need_principal(app, p);
            return {{plus(but_last(A), p.child(app.rule == Rule::AndL1 ? 0 : 1)), S}};
        }
        case Rule::AndR: {
            const auto &p = last(S, "succedent", app);
            need_kind(p, Formula::Kind::And, app);
            need_principal(app, p);
            return {{A, plus(but_last(S), p.child(0))}, {A, plus(but_last(S), p.child(1))}};
        }
        case Rule::OrL: {
            const auto &p = last(A, "antecedent", app);
            need_kind(p, Formula::Kind::Or, app);
            need_principal(app, p);
            return {{plus(but_last(A), p.child(0)), S}, {plus(but_last(A), p.child(1)), S}};
        }
        case Rule::OrR1:
        case Rule::OrR2: {
            const auto &p = last(S, "succedent", app);
            need_kind(p, Formula::Kind::Or, app);
            need_principal(app, p);
            return {{A, plus(but_last(S), p.child(app.rule == Rule::OrR1 ? 0 : 1))}};
        }
        case Rule::ImpL: {
            const auto &p = last(A, "antecedent", app);
            need_kind(p, Formula::Kind::Imp, app);
            need_principal(app, p);
            need(app.la < A.size() && app.ls <= S.size(), "impl: context split out of range");
            return {{slice(A, 0, app.la), plus(slice(S, 0, app.ls), p.child(0))},
                    {plus(slice(A, app.la, A.size() - 1), p.child(1)), slice(S, app.ls, S.size())}};
        }
        case Rule::ImpR: {
            const auto &p = last(S, "succedent", app);
            need_kind(p, Formula::Kind::Imp, app);
            need_principal(app, p);
            return {{plus(A, p.child(0)), plus(but_last(S), p.child(1))}};
        }
        case Rule::NotL: {
            const auto &p = last(A, "antecedent", app);
            need_kind(p, Formula::Kind::Not, app);
            need_principal(app, p);
            return {{but_last(A), plus(S, p.child(0))}};
        }
        case Rule::NotR: {
            const auto &p = last(S, "succedent", app);
            need_kind(p, Formula::Kind::Not, app);
            need_principal(app, p);
            return {{plus(A, p.child(0)), but_last(S)}};
        }
        case Rule::ForallL:
        case Rule::ExistsL: {
            const auto &p = last(A, "antecedent", app);
            need_kind(p, app.rule == Rule::ForallL ? Formula::Kind::Forall : Formula::Kind::Exists, app);
            need_principal(app, p);
            Term inst = app.rule == Rule::ForallL ? app.t : (app.u.empty() ? Term() : Term::var(app.u));
            need(!inst.null(), name + ": missing instance");
            return {{plus(but_last(A), instantiate(p, inst)), S}};
        }
        case Rule::ForallR:
        case Rule::ExistsR: {
            const auto &p = last(S, "succedent", app);
            need_kind(p, app.rule == Rule::ForallR ? Formula::Kind::Forall : Formula::Kind::Exists, app);
            need_principal(app, p);
            Term inst = app.rule == Rule::ExistsR ? app.t : (app.u.empty() ? Term() : Term::var(app.u));
            need(!inst.null(), name + ": missing instance");
            return {{A, plus(but_last(S), instantiate(p, inst))}};
        }
        case Rule::Eq1:
        case Rule::Eq2: {
            need_witness(app);
            need(!A.empty() && A.back() == app.operating_equality(),
                 name + ": antecedent does not end with operating equality " + app.operating_equality().str());
            need(!S.empty() && S.back() == app.ab.apply(app.s),
                 name + ": succedent does not end with " + app.ab.apply(app.s).str());
            return {{but_last(A), plus(but_last(S), app.ab.apply(app.r))}};
        }
        case Rule::Eq1L:
        case Rule::Eq2L: {
            need_witness(app);
            need(!A.empty() && A.back() == app.operating_equality(),
                 name + ": antecedent does not end with operating equality " + app.operating_equality().str());
            need(app.i + 1 < A.size(), name + ": target index out of range");
            need(A[app.i] == app.ab.apply(app.s), name + ": target formula is not " + app.ab.apply(app.s).str());
            auto P = but_last(A);
            P[app.i] = app.ab.apply(app.r);
            return {{P, S}};
        }
        case Rule::EqElim: {
            need_witness(app);
            need(!A.empty() && A.back() == app.operating_equality(),
                 name + ": antecedent does not end with operating equality");
            need(app.la < A.size() && app.ls <= S.size(), name + ": context split out of range");
            return {{slice(A, 0, app.la), plus(slice(S, 0, app.ls), app.ab.apply(app.r))},
                    {plus(slice(A, app.la, A.size() - 1), app.ab.apply(app.s)), slice(S, app.ls, S.size())}};
        }
        case Rule::Cng: {
            need_witness(app);
            need(!S.empty() && S.back() == app.ab.apply(app.s), name + ": succedent does not end with " +
                                                                     app.ab.apply(app.s).str());
            need(app.la <= A.size() && app.ls < S.size(), name + ": context split out of range");
            return {{slice(A, 0, app.la), plus(slice(S, 0, app.ls), app.ab.apply(app.r))},
                    {slice(A, app.la, A.size()), plus(slice(S, app.ls, S.size() - 1), Formula::eq(app.r, app.s))}};
        }
    }
    throw SchemaMismatch("unknown rule");
}

Sequent conclusion_schema(const RuleApp &app, const std::vector<Sequent> &P) {
    const std::string name = rule_name(app.rule);
    need(P.size() == premiss_count(app.rule), name + ": wrong number of premisses");
    switch (app.rule) {
        case Rule::Ax:
            need(!app.f.null(), "ax: missing formula");
            return {{app.f}, {app.f}};
        case Rule::Refl:
            need(!app.t.null(), "refl: missing term");
            return {{}, {Formula::eq(app.t, app.t)}};
        case Rule::Hyp:
            throw SchemaMismatch("hyp: conclusion is not determined by the rule");
        case Rule::WeakL:
            need(!app.f.null(), "wl: missing formula");
            return {plus(P[0].ante, app.f), P[0].succ};
        case Rule::WeakR:
            need(!app.f.null(), "wr: missing formula");
            return {P[0].ante, plus(P[0].succ, app.f)};
        case Rule::ExchL: {
            need(app.i + 1 < P[0].ante.size(), name + ": index out of range");
            auto A = P[0].ante;
            std::swap(A[app.i], A[app.i + 1]);
            return {A, P[0].succ};
        }
        case Rule::ExchR: {
            need(app.i + 1 < P[0].succ.size(), name + ": index out of range");
            auto S = P[0].succ;
            std::swap(S[app.i], S[app.i + 1]);
            return {P[0].ante, S};
        }
        case Rule::ContrL: {
            const auto &A = P[0].ante;
            need(app.i + 1 < A.size() && A[app.i] == A[app.i + 1], name + ": positions hold different formulas");
            auto C = A;
            C.erase(C.begin() + static_cast<std::ptrdiff_t>(app.i) + 1);
            return {C, P[0].succ};
        }
        case Rule::ContrR: {
            const auto &S = P[0].succ;
            need(app.i + 1 < S.size() && S[app.i] == S[app.i + 1], name + ": positions hold different formulas");
            auto C = S;
            C.erase(C.begin() + static_cast<std::ptrdiff_t>(app.i) + 1);
            return {P[0].ante, C};
        }
        case Rule::Cut: {
            const auto &F = last(P[0].succ, "left succedent", app);
            need(app.f.null() || app.f == F, "cut: annotated formula differs from left premiss");
            need(!P[1].ante.empty() && P[1].ante.back() == F, "cut: right premiss does not end with " + F.str());
            need(app.la == P[0].ante.size() && app.ls + 1 == P[0].succ.size(), "cut: context split mismatch");
            return {concat(P[0].ante, but_last(P[1].ante)), concat(but_last(P[0].succ), P[1].succ)};
        }
        case Rule::AndL1:
        case Rule::AndL2: {
            need_kind(app.f, Formula::Kind::And, app);
            const auto &a = last(P[0].ante, "antecedent", app);
            need(a == app.f.child(app.rule == Rule::AndL1 ? 0 : 1), name + ": premiss does not end with conjunct");
            return {plus(but_last(P[0].ante), app.f), P[0].succ};
        }
        case Rule::AndR: {
            const auto &a = last(P[0].succ, "succedent", app);
            const auto &b = last(P[1].succ, "succedent", app);
            need(P[0].ante == P[1].ante && but_last(P[0].succ) == but_last(P[1].succ), "andr: contexts differ");
            Formula f = Formula::conj(a, b);
            need_principal(app, f);
            return {P[0].ante, plus(but_last(P[0].succ), f)};
        }
        case Rule::OrL: {
            const auto &a = last(P[0].ante, "antecedent", app);
            const auto &b = last(P[1].ante, "antecedent", app);
            need(but_last(P[0].ante) == but_last(P[1].ante) && P[0].succ == P[1].succ, "orl: contexts differ");
            Formula f = Formula::disj(a, b);
            need_principal(app, f);
            return {plus(but_last(P[0].ante), f), P[0].succ};
        }
        case Rule::OrR1:
        case Rule::OrR2: {
            need_kind(app.f, Formula::Kind::Or, app);
            const auto &a = last(P[0].succ, "succedent", app);
            need(a == app.f.child(app.rule == Rule::OrR1 ? 0 : 1), name + ": premiss does not end with disjunct");
            return {P[0].ante, plus(but_last(P[0].succ), app.f)};
        }
        case Rule::ImpL: {
            const auto &a = last(P[0].succ, "left succedent", app);
            const auto &b = last(P[1].ante, "right antecedent", app);
            need(app.la == P[0].ante.size() && app.ls + 1 == P[0].succ.size(), "impl: context split mismatch");
            Formula f = Formula::imp(a, b);
            need_principal(app, f);
            return {plus(concat(P[0].ante, but_last(P[1].ante)), f), concat(but_last(P[0].succ), P[1].succ)};
        }
        case Rule::ImpR: {
            const auto &a = last(P[0].ante, "antecedent", app);
            const auto &b = last(P[0].succ, "succedent", app);
            Formula f = Formula::imp(a, b);
            need_principal(app, f);
            return {but_last(P[0].ante), plus(but_last(P[0].succ), f)};
        }
        case Rule::NotL: {
            Formula f = Formula::neg(last(P[0].succ, "succedent", app));
            need_principal(app, f);
            return {plus(P[0].ante, f), but_last(P[0].succ)};
        }
        case Rule::NotR: {
            Formula f = Formula::neg(last(P[0].ante, "antecedent", app));
            need_principal(app, f);
            return {but_last(P[0].ante), plus(P[0].succ, f)};
        }
        case Rule::ForallL:
        case Rule::ExistsL: {
            need_kind(app.f, app.rule == Rule::ForallL ? Formula::Kind::Forall : Formula::Kind::Exists, app);
            Term inst = app.rule == Rule::ForallL ? app.t : (app.u.empty() ? Term() : Term::var(app.u));
            need(!inst.null(), name + ": missing instance");
            need(last(P[0].ante, "antecedent", app) == instantiate(app.f, inst),
                 name + ": premiss does not end with the instance " + instantiate(app.f, inst).str());
            Sequent c{plus(but_last(P[0].ante), app.f), P[0].succ};
            need(eigen_condition(app, c), name + ": eigenvariable " + app.u + " occurs in conclusion");
            return c;
        }
        case Rule::ForallR:
        case Rule::ExistsR: {
            need_kind(app.f, app.rule == Rule::ForallR ? Formula::Kind::Forall : Formula::Kind::Exists, app);
            Term inst = app.rule == Rule::ExistsR ? app.t : (app.u.empty() ? Term() : Term::var(app.u));
            need(!inst.null(), name + ": missing instance");
            need(last(P[0].succ, "succedent", app) == instantiate(app.f, inst),
                 name + ": premiss does not end with the instance " + instantiate(app.f, inst).str());
            Sequent c{P[0].ante, plus(but_last(P[0].succ), app.f)};
            need(eigen_condition(app, c), name + ": eigenvariable " + app.u + " occurs in conclusion");
            return c;
        }
        case Rule::Eq1:
        case Rule::Eq2: {
            need_witness(app);
            need(last(P[0].succ, "succedent", app) == app.ab.apply(app.r),
                 name + ": premiss succedent does not end with " + app.ab.apply(app.r).str());
            return {plus(P[0].ante, app.operating_equality()), plus(but_last(P[0].succ), app.ab.apply(app.s))};
        }
        case Rule::Eq1L:
        case Rule::Eq2L: {
            need_witness(app);
            need(app.i < P[0].ante.size(), name + ": target index out of range");
            need(P[0].ante[app.i] == app.ab.apply(app.r),
                 name + ": target formula is not " + app.ab.apply(app.r).str());
            auto A = P[0].ante;
            A[app.i] = app.ab.apply(app.s);
            A.push_back(app.operating_equality());
            return {A, P[0].succ};
        }
        case Rule::EqElim: {
            need_witness(app);
            need(last(P[0].succ, "left succedent", app) == app.ab.apply(app.r),
                 name + ": left premiss does not end with " + app.ab.apply(app.r).str());
            need(last(P[1].ante, "right antecedent", app) == app.ab.apply(app.s),
                 name + ": right premiss does not end with " + app.ab.apply(app.s).str());
            need(app.la == P[0].ante.size() && app.ls + 1 == P[0].succ.size(), name + ": context split mismatch");
            return {plus(concat(P[0].ante, but_last(P[1].ante)), app.operating_equality()),
                    concat(but_last(P[0].succ), P[1].succ)};
        }
        case Rule::Cng: {
            need_witness(app);
            need(last(P[0].succ, "left succedent", app) == app.ab.apply(app.r),
                 name + ": left premiss does not end with " + app.ab.apply(app.r).str());
            need(last(P[1].succ, "right succedent", app) == Formula::eq(app.r, app.s),
                 name + ": right premiss does not end with " + Formula::eq(app.r, app.s).str());
            need(app.la == P[0].ante.size() && app.ls + 1 == P[0].succ.size(), name + ": context split mismatch");
            return {concat(P[0].ante, P[1].ante),
                    plus(concat(but_last(P[0].succ), but_last(P[1].succ)), app.ab.apply(app.s))};
        }
    }
    throw SchemaMismatch("unknown rule");
}

Derivation apply(const RuleApp &app, std::vector<Derivation> premisses) {
    std::vector<Sequent> ps;
    ps.reserve(premisses.size());
    for (const auto &p : premisses) ps.push_back(p.conclusion());
    Sequent c = conclusion_schema(app, ps);
    return Derivation::make(std::move(c), app, std::move(premisses));
}

bool eigen_condition(const RuleApp &app, const Sequent &conclusion) {
    if (app.rule != Rule::ForallR && app.rule != Rule::ExistsL) return true;
    return !app.u.empty() && !occurs(app.u, conclusion);
}

const char *order_class_name(OrderClass c) {
    switch (c) {
        case OrderClass::NotEquality:
            return "not-an-eq-rule";
        case OrderClass::Lengthening:
            return "lengthening";
        case OrderClass::Nonlengthening:
            return "nonlengthening";
        case OrderClass::Shortening:
            return "shortening";
    }
    return "?";
}

OrderClass order_predicate(const RuleApp &app, const TermOrder &order) {
    switch (app.rule) {
        case Rule::Eq1:
        case Rule::Eq2:
        case Rule::Eq1L:
        case Rule::Eq2L:
            if (order.less(app.r, app.s)) return OrderClass::Shortening;
            if (!order.less(app.s, app.r)) return OrderClass::Nonlengthening;
            return OrderClass::Lengthening;
        default:
            return OrderClass::NotEquality;
    }
}

// ---------------------------------------------------------------------------

namespace mk {

namespace {

RuleApp app_of(Rule r) {
    RuleApp a;
    a.rule = r;
    return a;
}

const Formula &last_succ(const Derivation &d) {
    need(!d.conclusion().succ.empty(), "premiss has an empty succedent: " + d.conclusion().str());
    return d.conclusion().succ.back();
}

const Formula &last_ante(const Derivation &d) {
    need(!d.conclusion().ante.empty(), "premiss has an empty antecedent: " + d.conclusion().str());
    return d.conclusion().ante.back();
}

RuleApp eq_app(Rule rule, const Abstraction &ab, const Term &r, const Term &s) {
    RuleApp a = app_of(rule);
    a.ab = ab;
    a.r = r;
    a.s = s;
    return a;
}

}  // namespace

Derivation ax(const Formula &f) {
    RuleApp a = app_of(Rule::Ax);
    a.f = f;
    return apply(a, {});
}

Derivation refl(const Term &t) {
    RuleApp a = app_of(Rule::Refl);
    a.t = t;
    return apply(a, {});
}

Derivation hyp(const Sequent &s) { return Derivation::make(s, app_of(Rule::Hyp), {}); }

Derivation weak_l(const Derivation &d, const Formula &f) {
    RuleApp a = app_of(Rule::WeakL);
    a.f = f;
    return apply(a, {d});
}

Derivation weak_r(const Derivation &d, const Formula &f) {
    RuleApp a = app_of(Rule::WeakR);
    a.f = f;
    return apply(a, {d});
}

Derivation exch_l(const Derivation &d, std::size_t i) {
    RuleApp a = app_of(Rule::ExchL);
    a.i = i;
    return apply(a, {d});
}

Derivation exch_r(const Derivation &d, std::size_t i) {
    RuleApp a = app_of(Rule::ExchR);
    a.i = i;
    return apply(a, {d});
}

Derivation contr_l(const Derivation &d, std::size_t i) {
    RuleApp a = app_of(Rule::ContrL);
    a.i = i;
    return apply(a, {d});
}

Derivation contr_r(const Derivation &d, std::size_t i) {
    RuleApp a = app_of(Rule::ContrR);
    a.i = i;
    return apply(a, {d});
}

Derivation cut(const Derivation &d, const Derivation &e) {
    RuleApp a = app_of(Rule::Cut);
    a.f = last_succ(d);
    a.la = d.conclusion().ante.size();
    a.ls = d.conclusion().succ.size() - 1;
    return apply(a, {d, e});
}

Derivation and_l1(const Derivation &d, const Formula &principal) {
    RuleApp a = app_of(Rule::AndL1);
    a.f = principal;
    return apply(a, {d});
}

Derivation and_l2(const Derivation &d, const Formula &principal) {
    RuleApp a = app_of(Rule::AndL2);
    a.f = principal;
    return apply(a, {d});
}

Derivation and_r(const Derivation &d, const Derivation &e) {
    RuleApp a = app_of(Rule::AndR);
    a.f = Formula::conj(last_succ(d), last_succ(e));
    return apply(a, {d, e});
}

Derivation or_l(const Derivation &d, const Derivation &e) {
    RuleApp a = app_of(Rule::OrL);
    a.f = Formula::disj(last_ante(d), last_ante(e));
    return apply(a, {d, e});
}

Derivation or_r1(const Derivation &d, const Formula &principal) {
    RuleApp a = app_of(Rule::OrR1);
    a.f = principal;
    return apply(a, {d});
}

Derivation or_r2(const Derivation &d, const Formula &principal) {
    RuleApp a = app_of(Rule::OrR2);
    a.f = principal;
    return apply(a, {d});
}

Derivation imp_l(const Derivation &d, const Derivation &e) {
    RuleApp a = app_of(Rule::ImpL);
    a.f = Formula::imp(last_succ(d), last_ante(e));
    a.la = d.conclusion().ante.size();
    a.ls = d.conclusion().succ.size() - 1;
    return apply(a, {d, e});
}

Derivation imp_r(const Derivation &d) {
    RuleApp a = app_of(Rule::ImpR);
    a.f = Formula::imp(last_ante(d), last_succ(d));
    return apply(a, {d});
}

Derivation not_l(const Derivation &d) {
    RuleApp a = app_of(Rule::NotL);
    a.f = Formula::neg(last_succ(d));
    return apply(a, {d});
}

Derivation not_r(const Derivation &d) {
    RuleApp a = app_of(Rule::NotR);
    a.f = Formula::neg(last_ante(d));
    return apply(a, {d});
}

Derivation forall_l(const Derivation &d, const Formula &principal, const Term &t) {
    RuleApp a = app_of(Rule::ForallL);
    a.f = principal;
    a.t = t;
    return apply(a, {d});
}

Derivation forall_r(const Derivation &d, const Formula &principal, const std::string &u) {
    RuleApp a = app_of(Rule::ForallR);
    a.f = principal;
    a.u = u;
    return apply(a, {d});
}

Derivation exists_l(const Derivation &d, const Formula &principal, const std::string &u) {
    RuleApp a = app_of(Rule::ExistsL);
    a.f = principal;
    a.u = u;
    return apply(a, {d});
}

Derivation exists_r(const Derivation &d, const Formula &principal, const Term &t) {
    RuleApp a = app_of(Rule::ExistsR);
    a.f = principal;
    a.t = t;
    return apply(a, {d});
}

Derivation eq1(const Derivation &d, const Abstraction &ab, const Term &r, const Term &s) {
    return apply(eq_app(Rule::Eq1, ab, r, s), {d});
}

Derivation eq2(const Derivation &d, const Abstraction &ab, const Term &r, const Term &s) {
    return apply(eq_app(Rule::Eq2, ab, r, s), {d});
}

Derivation eq1l(const Derivation &d, const Abstraction &ab, const Term &r, const Term &s, std::size_t idx) {
    RuleApp a = eq_app(Rule::Eq1L, ab, r, s);
    a.i = idx;
    return apply(a, {d});
}

Derivation eq2l(const Derivation &d, const Abstraction &ab, const Term &r, const Term &s, std::size_t idx) {
    RuleApp a = eq_app(Rule::Eq2L, ab, r, s);
    a.i = idx;
    return apply(a, {d});
}

Derivation eq_elim(const Derivation &d, const Derivation &e, const Abstraction &ab, const Term &r, const Term &s) {
    RuleApp a = eq_app(Rule::EqElim, ab, r, s);
    a.la = d.conclusion().ante.size();
    a.ls = d.conclusion().succ.empty() ? 0 : d.conclusion().succ.size() - 1;
    return apply(a, {d, e});
}

Derivation cng(const Derivation &d, const Derivation &e, const Abstraction &ab, const Term &r, const Term &s) {
    RuleApp a = eq_app(Rule::Cng, ab, r, s);
    a.la = d.conclusion().ante.size();
    a.ls = d.conclusion().succ.empty() ? 0 : d.conclusion().succ.size() - 1;
    return apply(a, {d, e});
}

}  // namespace mk

}  // namespace eqs
