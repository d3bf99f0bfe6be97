#include "eqs/checker.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace eqs {

std::string path_str(const TreePath &p) {
    std::string out = "root";
    for (auto i : p) out += "." + std::to_string(i);
    return out;
}

std::string CheckReport::text() const {
    std::string out;
    for (const auto &v : violations) out += path_str(v.path) + "\t" + v.reason + "\n";
    return out;
}

namespace {

// Violations of the rule schema at one node, independent of the system.
void schema_violations(const Derivation &d, std::vector<std::string> &out) {
    const auto &app = d.app();
    const std::string name = rule_name(app.rule);
    if (d.premisses().size() != premiss_count(app.rule)) {
        out.push_back(name + ": expected " + std::to_string(premiss_count(app.rule)) + " premisses, found " +
                      std::to_string(d.premisses().size()));
        return;
    }
    try {
        auto expected = premiss_schema(app, d.conclusion());
        for (std::size_t i = 0; i < expected.size(); ++i)
            if (!(expected[i] == d.premiss(i).conclusion()))
                out.push_back(name + ": premiss " + std::to_string(i) + " is " + d.premiss(i).conclusion().str() +
                              ", schema requires " + expected[i].str());
    } catch (const ProofError &e) {
        out.push_back(e.what());
    }
    if (!eigen_condition(app, d.conclusion()))
        out.push_back(name + ": eigenvariable " + app.u + " occurs in the conclusion");
}

void system_violations(const Derivation &d, const SystemSpec &sys, const TermOrder *order,
                       std::vector<std::string> &out) {
    const auto &app = d.app();
    const std::string name = rule_name(app.rule);
    if (app.rule == Rule::Hyp) {
        const auto &h = sys.hypotheses;
        if (std::find(h.begin(), h.end(), d.conclusion()) == h.end())
            out.push_back("hyp: " + d.conclusion().str() + " is not an extra axiom of " + sys.name);
    } else if (!sys.allows(app.rule)) {
        out.push_back(name + ": rule not in " + sys.name);
    }
    const auto n = d.conclusion().succ.size();
    if (sys.exact_one_succedent && n != 1)
        out.push_back("sequent must have exactly one succedent formula: " + d.conclusion().str());
    else if (sys.succedent_bound && n > *sys.succedent_bound)
        out.push_back("succedent exceeds bound " + std::to_string(*sys.succedent_bound) + ": " +
                      d.conclusion().str());
    if (is_equality(app.rule) && !app.ab.skeleton.null()) {
        if (sys.atomic_eq_only && !app.ab.skeleton.is_atom())
            out.push_back(name + ": changing formula " + app.ab.skeleton.str() + " is not atomic");
        if (sys.singleton_eq_only && app.ab.hole_count() > 1)
            out.push_back(name + ": hole " + app.ab.hole + " occurs " + std::to_string(app.ab.hole_count()) +
                          " times");
    }
    if (order && sys.restriction != OrderRestriction::None) {
        auto c = order_predicate(app, *order);
        if (c == OrderClass::Lengthening) out.push_back(name + ": lengthening inference");
        if (sys.restriction == OrderRestriction::Semishortening &&
            (app.rule == Rule::Eq1 || app.rule == Rule::Eq1L) && c != OrderClass::Shortening)
            out.push_back(name + ": not shortening");
    }
}

struct Walker {
    const SystemSpec *sys;
    const TermOrder *order;
    std::unordered_set<const void *> seen;
    std::vector<Violation> violations;
    TreePath path;

    void walk(const Derivation &d) {
        if (!seen.insert(d.id()).second) return;
        for (std::size_t i = 0; i < d.premisses().size(); ++i) {
            path.push_back(i);
            walk(d.premiss(i));
            path.pop_back();
        }
        std::vector<std::string> reasons;
        schema_violations(d, reasons);
        if (sys) system_violations(d, *sys, order, reasons);
        for (auto &r : reasons) violations.push_back({path, std::move(r)});
    }
};

struct Census {
    const TermOrder *order;
    std::unordered_map<const void *, Metrics> memo;

    const Metrics &of(const Derivation &d) {
        if (auto it = memo.find(d.id()); it != memo.end()) return it->second;
        Metrics m;
        m.nodes = 1;
        std::size_t ch = 0;
        for (const auto &p : d.premisses()) {
            const Metrics &c = of(p);
            m.height = std::max(m.height, c.height + 1);
            ch = std::max(ch, c.core_height + 1);
            m.nodes += c.nodes;
            m.cut_count += c.cut_count;
            m.non_atomic_cut_count += c.non_atomic_cut_count;
            m.eq_count += c.eq_count;
            m.non_atomic_eq_count += c.non_atomic_eq_count;
            m.lengthening_count += c.lengthening_count;
            m.max_term_size = std::max(m.max_term_size, c.max_term_size);
        }
        const auto &app = d.app();
        bool exch = app.rule == Rule::ExchL || app.rule == Rule::ExchR;
        m.core_height = exch ? (d.premisses().empty() ? 0 : ch - 1) : ch;
        if (app.rule == Rule::Cut) {
            ++m.cut_count;
            if (!app.f.null() && !app.f.is_atom()) ++m.non_atomic_cut_count;
        }
        if (is_equality(app.rule)) {
            ++m.eq_count;
            if (!app.ab.skeleton.null() && !app.ab.skeleton.is_atom()) ++m.non_atomic_eq_count;
            if (order && order_predicate(app, *order) == OrderClass::Lengthening) ++m.lengthening_count;
        }
        for (const auto &f : d.conclusion().ante) m.max_term_size = std::max(m.max_term_size, max_term_size(f));
        for (const auto &f : d.conclusion().succ) m.max_term_size = std::max(m.max_term_size, max_term_size(f));
        return memo.emplace(d.id(), m).first->second;
    }
};

}  // namespace

CheckReport check(const Derivation &d, const SystemSpec &sys) {
    CheckReport rep;
    const TermOrder *order = nullptr;
    if (sys.restriction != OrderRestriction::None) {
        try {
            order = &find_order(sys.order);
        } catch (const ProofError &e) {
            rep.violations.push_back({{}, e.what()});
        }
    }
    Walker w{&sys, order, {}, {}, {}};
    w.walk(d);
    rep.violations.insert(rep.violations.end(), w.violations.begin(), w.violations.end());
    rep.ok = rep.violations.empty();
    rep.census = analyze(d, order ? *order : size_order());
    return rep;
}

bool well_formed(const Derivation &d, std::string *why) {
    Walker w{nullptr, nullptr, {}, {}, {}};
    w.walk(d);
    if (!w.violations.empty() && why) *why = path_str(w.violations.front().path) + ": " + w.violations.front().reason;
    return w.violations.empty();
}

std::size_t rank(const Formula &f, const Derivation &d, Side side) {
    std::unordered_map<const void *, std::size_t> memo;
    auto go = [&](auto &self, const Derivation &n) -> std::size_t {
        if (auto it = memo.find(n.id()); it != memo.end()) return it->second;
        const auto &v = side == Side::Left ? n.conclusion().succ : n.conclusion().ante;
        std::size_t r = 0;
        if (std::find(v.begin(), v.end(), f) != v.end()) {
            std::size_t best = 0;
            for (const auto &p : n.premisses()) best = std::max(best, self(self, p));
            r = best + 1;
        }
        memo.emplace(n.id(), r);
        return r;
    };
    return go(go, d);
}

Metrics analyze(const Derivation &d, const TermOrder &order) {
    Census c{&order, {}};
    return c.of(d);
}

}  // namespace eqs
