#include "eqs/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "eqs/checker.hpp"
#include "eqs/parse.hpp"
#include "eqs/structural.hpp"

namespace eqs {

namespace {

void add_subterms(const Term &t, std::set<Term> &out) {
    if (!out.insert(t).second) return;
    for (const auto &a : t.args()) add_subterms(a, out);
}

void add_subterms(const Formula &f, std::set<Term> &out) {
    for (const auto &t : f.terms()) add_subterms(t, out);
    for (const auto &c : f.children()) add_subterms(c, out);
}

bool terms_within(const Term &t, const std::set<Term> &u) {
    if (!u.count(t)) return false;
    return std::all_of(t.args().begin(), t.args().end(), [&](const Term &a) { return terms_within(a, u); });
}

bool terms_within(const Formula &f, const std::set<Term> &u) {
    for (const auto &t : f.terms())
        if (!terms_within(t, u)) return false;
    return std::all_of(f.children().begin(), f.children().end(),
                       [&](const Formula &c) { return terms_within(c, u); });
}

Sequent canonical(std::vector<Formula> ante, std::vector<Formula> succ) {
    std::sort(ante.begin(), ante.end());
    return {std::move(ante), std::move(succ)};
}

std::vector<Formula> remove_one(std::vector<Formula> v, const Formula &f) {
    v.erase(std::find(v.begin(), v.end(), f));
    return v;
}

std::vector<Formula> distinct(const std::vector<Formula> &v) {
    std::vector<Formula> out;
    for (const auto &f : v)
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    return out;
}

bool sub_multiset(std::vector<Formula> small, std::vector<Formula> big) {
    std::sort(small.begin(), small.end());
    std::sort(big.begin(), big.end());
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

using Build = std::function<Derivation(const Derivation &)>;
using EdgeHook = std::function<void(const Sequent &conclusion, const Sequent &premiss)>;

class Searcher {
public:
    Searcher(const Sequent &goal, const SystemSpec &sys, const SearchBudget &budget) : sys_(sys), budget_(budget) {
        if (budget.max_depth < 1) throw BudgetInvalid("search: maxDepth must be at least 1");
        if (budget.multiplicity_cap < 1) throw BudgetInvalid("search: multiplicityCap must be at least 1");
        if (!sys.exact_one_succedent) throw SearchUnsupported("search: " + sys.name + " is not an equational system");
        for (Rule r : {Rule::Cut, Rule::Cng, Rule::EqElim})
            if (sys.allows(r))
                throw SearchUnsupported(std::string("search: systems with ") + rule_name(r) + " are not supported");
        if (goal.succ.size() != 1) throw SearchUnsupported("search: goal must have exactly one succedent formula");
        if (budget.universe) {
            for (const auto &t : *budget.universe) add_subterms(t, universe_);
        } else {
            for (const auto &t : subterm_closure(goal)) universe_.insert(t);
        }
        if (sys.restriction != OrderRestriction::None) order_ = &find_order(sys.order);
    }

    EdgeHook on_edge;

    std::optional<Derivation> run(const Sequent &goal) {
        const Sequent root = canonical(goal.ante, goal.succ);
        for (std::size_t k = 1; k <= budget_.max_depth; ++k) {
            if (auto d = solve(root, k)) {
                Derivation out = rearrange(*d, goal);
                auto rep = check(out, sys_);
                if (!rep.ok) throw ProofError("search: found derivation fails the checker:\n" + rep.text());
                return out;
            }
        }
        return std::nullopt;
    }

    const SearchStats &stats() const { return stats_; }
    const std::map<std::string, Sequent> &visited() const { return visited_; }
    std::vector<Term> universe() const { return {universe_.begin(), universe_.end()}; }

private:
    const SystemSpec &sys_;
    SearchBudget budget_;
    std::set<Term> universe_;
    const TermOrder *order_ = nullptr;
    std::unordered_map<std::string, std::size_t> failed_;  // deepest budget that failed
    std::unordered_map<std::string, Derivation> proved_;
    std::map<std::string, Sequent> visited_;
    SearchStats stats_;

    bool within(const Sequent &s) const {
        for (std::size_t i = 0; i < s.ante.size(); ++i) {
            std::size_t n = 1;
            while (i + n < s.ante.size() && s.ante[i + n] == s.ante[i]) ++n;
            if (n > budget_.multiplicity_cap) return false;
        }
        for (const auto &f : s.ante)
            if (!terms_within(f, universe_)) return false;
        return terms_within(s.succ[0], universe_);
    }

    bool eq_allowed(Rule rule, const Abstraction &ab, const Term &r, const Term &s) const {
        if (!sys_.allows(rule)) return false;
        if (sys_.singleton_eq_only && ab.hole_count() > 1) return false;
        if (sys_.atomic_eq_only && !ab.skeleton.is_atom()) return false;
        if (!order_) return true;
        RuleApp a;
        a.rule = rule;
        a.ab = ab;
        a.r = r;
        a.s = s;
        const OrderClass c = order_predicate(a, *order_);
        if (c == OrderClass::Lengthening) return false;
        if (sys_.restriction == OrderRestriction::Semishortening && (rule == Rule::Eq1 || rule == Rule::Eq1L))
            return c == OrderClass::Shortening;
        return true;
    }

    std::optional<Derivation> close(const Sequent &s) const {
        const Formula &g = s.succ[0];
        if (sys_.allows(Rule::Refl) && g.is_eq() && g.lhs() == g.rhs()) return rearrange(mk::refl(g.lhs()), s);
        if (sys_.allows(Rule::Ax) && std::find(s.ante.begin(), s.ante.end(), g) != s.ante.end())
            return rearrange(mk::ax(g), s);
        for (const auto &h : sys_.hypotheses)
            if (h.succ == s.succ && sub_multiset(h.ante, s.ante)) return rearrange(mk::hyp(h), s);
        return std::nullopt;
    }

    // Backward steps in the fixed order: contraction, Eq1, Eq2, Eq1L, Eq2L.
    std::vector<std::pair<Sequent, Build>> moves(const Sequent &s) const {
        std::vector<std::pair<Sequent, Build>> out;
        const Formula &g = s.succ[0];
        const auto kinds = distinct(s.ante);
        if (sys_.allows(Rule::ContrL))
            for (const auto &a : kinds) {
                auto ante = s.ante;
                ante.push_back(a);
                out.emplace_back(canonical(ante, s.succ), [](const Derivation &d) { return d; });
            }
        for (const auto &e : kinds) {
            if (!e.is_eq() || e.lhs() == e.rhs()) continue;
            const Term x = e.lhs(), y = e.rhs();
            const auto rest = remove_one(s.ante, e);
            // Eq1: r=x, s=y; Eq2: s=x, r=y.
            for (const auto &ab : enumerate_abstractions(g, y)) {
                if (ab.trivial() || !eq_allowed(Rule::Eq1, ab, x, y)) continue;
                out.emplace_back(canonical(rest, {ab.apply(x)}),
                                 [ab, x, y](const Derivation &d) { return mk::eq1(d, ab, x, y); });
            }
            for (const auto &ab : enumerate_abstractions(g, x)) {
                if (ab.trivial() || !eq_allowed(Rule::Eq2, ab, y, x)) continue;
                out.emplace_back(canonical(rest, {ab.apply(y)}),
                                 [ab, x, y](const Derivation &d) { return mk::eq2(d, ab, y, x); });
            }
            for (Rule rule : {Rule::Eq1L, Rule::Eq2L}) {
                const bool one = rule == Rule::Eq1L;
                const Term &from = one ? x : y, &to = one ? y : x;  // premiss term, conclusion term
                for (const auto &h : distinct(rest)) {
                    for (const auto &ab : enumerate_abstractions(h, to)) {
                        if (ab.trivial() || !eq_allowed(rule, ab, from, to)) continue;
                        const Formula before = ab.apply(from);
                        auto ante = remove_one(rest, h);
                        ante.push_back(before);
                        out.emplace_back(canonical(ante, s.succ), [ab, from, to, before, rule](const Derivation &d) {
                            const auto &pa = d.conclusion().ante;
                            const std::size_t i = static_cast<std::size_t>(
                                std::find(pa.begin(), pa.end(), before) - pa.begin());
                            return rule == Rule::Eq1L ? mk::eq1l(d, ab, from, to, i) : mk::eq2l(d, ab, from, to, i);
                        });
                    }
                }
            }
        }
        return out;
    }

    std::optional<Derivation> solve(const Sequent &s, std::size_t k) {
        const std::string key = s.str();
        visited_.emplace(key, s);
        if (auto it = proved_.find(key); it != proved_.end()) {
            ++stats_.memo_hits;
            return it->second;
        }
        if (auto it = failed_.find(key); it != failed_.end() && it->second >= k) {
            ++stats_.memo_hits;
            return std::nullopt;
        }
        if (auto d = close(s)) {
            proved_.emplace(key, *d);
            return d;
        }
        if (k > 1) {
            ++stats_.expanded;
            for (auto &[p, build] : moves(s)) {
                if (!within(p)) continue;
                if (on_edge) on_edge(s, p);
                if (auto d = solve(p, k - 1)) {
                    Derivation out = rearrange(build(*d), s);
                    proved_.emplace(key, out);
                    return out;
                }
            }
        }
        auto &f = failed_[key];
        f = std::max(f, k);
        return std::nullopt;
    }
};

ExhaustionCertificate certify(const Sequent &goal, const SystemSpec &sys, const SearchBudget &budget,
                              const EdgeHook &hook) {
    Searcher s(goal, sys, budget);
    s.on_edge = hook;
    ExhaustionCertificate cert;
    cert.goal = goal;
    cert.system = sys.name;
    cert.max_depth = budget.max_depth;
    cert.multiplicity_cap = budget.multiplicity_cap;
    cert.witness = s.run(goal);
    cert.exhausted = !cert.witness;
    cert.universe = s.universe();
    for (const auto &[k, v] : s.visited()) cert.visited.push_back(v);
    cert.stats = s.stats();
    return cert;
}

}  // namespace

std::vector<Term> subterm_closure(const Sequent &s) {
    std::set<Term> out;
    for (const auto &f : s.ante) add_subterms(f, out);
    for (const auto &f : s.succ) add_subterms(f, out);
    return {out.begin(), out.end()};
}

std::string ExhaustionCertificate::text() const {
    std::string out = "goal: " + goal.str() + "\nsystem: " + system + "\nbudget: depth=" + std::to_string(max_depth) +
                      " cap=" + std::to_string(multiplicity_cap) + "\nuniverse:";
    for (std::size_t i = 0; i < universe.size(); ++i) out += (i ? ", " : " ") + universe[i].str();
    out += std::string("\nresult: ") + (exhausted ? "exhausted within budget" : "derivable") + "\n";
    out += "visited classes: " + std::to_string(visited.size()) + "\n";
    for (const auto &v : visited) out += "  " + v.str() + "\n";
    out += "expanded: " + std::to_string(stats.expanded) + ", memo hits: " + std::to_string(stats.memo_hits) + "\n";
    if (!invariant.empty()) {
        out += "invariant: " + invariant + (invariant_failures.empty() ? " (holds)" : " (FAILS)") + "\n";
        for (const auto &f : invariant_failures) out += "  " + f + "\n";
    }
    return out;
}

SearchResult prove(const Sequent &goal, const SystemSpec &sys, const SearchBudget &budget) {
    Searcher s(goal, sys, budget);
    SearchResult res;
    res.derivation = s.run(goal);
    res.stats = s.stats();
    return res;
}

ExhaustionCertificate certify_underivable(const Sequent &goal, const SystemSpec &sys, const SearchBudget &budget) {
    return certify(goal, sys, budget, {});
}

ExhaustionCertificate check_nonderivable_symmetry(const SystemSpec &sys, const SearchBudget &budget) {
    SystemSpec ext = sys;
    ext.hypotheses.push_back(parse_sequent("a = b => c = d"));
    const Sequent goal = parse_sequent("b = a => c = d");
    const bool only1 = sys.allows(Rule::Eq1) && sys.allows(Rule::Eq1L) && !sys.allows(Rule::Eq2) &&
                       !sys.allows(Rule::Eq2L);
    const bool only2 = sys.allows(Rule::Eq2) && sys.allows(Rule::Eq2L) && !sys.allows(Rule::Eq1) &&
                       !sys.allows(Rule::Eq1L);
    const Term a = parse_term("a"), b = parse_term("b");
    std::function<bool(const Sequent &)> inv;
    if (only1) inv = [a](const Sequent &s) {
        return std::any_of(s.ante.begin(), s.ante.end(), [&](const Formula &f) { return f.is_eq() && f.lhs() == a; });
    };
    if (only2) inv = [b](const Sequent &s) {
        return std::any_of(s.ante.begin(), s.ante.end(), [&](const Formula &f) { return f.is_eq() && f.rhs() == b; });
    };
    std::vector<std::string> failures;
    EdgeHook hook;
    if (inv) hook = [&](const Sequent &c, const Sequent &p) {
        if (inv(p) && !inv(c)) failures.push_back(p.str() + "  /  " + c.str());
    };
    ExhaustionCertificate cert = certify(goal, ext, budget, hook);
    cert.system = sys.name + " + hypothesis " + ext.hypotheses[0].str();
    if (inv) {
        cert.invariant = only1 ? "antecedent contains some a=t" : "antecedent contains some t=b";
        if (!inv(ext.hypotheses[0])) failures.push_back("hypothesis lacks the invariant");
        if (inv(goal)) failures.push_back("goal has the invariant");
        cert.invariant_failures = std::move(failures);
    }
    return cert;
}

}  // namespace eqs
