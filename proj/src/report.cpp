#include "eqs/report.hpp"

#include "json.hpp"

namespace eqs::json {

namespace {

using nlohmann::ordered_json;

ordered_json tree(const Derivation &d) {
    ordered_json j;
    j["rule"] = rule_name(d.rule());
    const std::string a = d.app().str();
    const auto sp = a.find(' ');
    j["annotations"] = sp == std::string::npos ? "" : a.substr(sp + 1);
    j["conclusion"] = d.conclusion().str();
    j["premisses"] = ordered_json::array();
    for (const auto &p : d.premisses()) j["premisses"].push_back(tree(p));
    return j;
}

ordered_json metrics_j(const Metrics &m) {
    return {{"height", m.height},
            {"core_height", m.core_height},
            {"nodes", m.nodes},
            {"cuts", m.cut_count},
            {"non_atomic_cuts", m.non_atomic_cut_count},
            {"eq_inferences", m.eq_count},
            {"non_atomic_eq_inferences", m.non_atomic_eq_count},
            {"lengthening", m.lengthening_count},
            {"max_term_size", m.max_term_size}};
}

ordered_json trace_j(const TransformTrace &t) {
    ordered_json j;
    j["entries"] = ordered_json::array();
    std::size_t bad = 0;
    for (const auto &e : t.entries) {
        const bool dec = measure_less(e.child, e.parent);
        bad += dec ? 0 : 1;
        j["entries"].push_back(
            {{"pass", e.pass}, {"step", e.step}, {"parent", e.parent}, {"child", e.child}, {"decreasing", dec}});
    }
    j["notes"] = t.notes;
    j["violations"] = bad;
    return j;
}

std::string dump(const ordered_json &j, int indent) { return j.dump(indent); }

}  // namespace

std::string derivation(const Derivation &d, int indent) { return dump(tree(d), indent); }
std::string metrics(const Metrics &m, int indent) { return dump(metrics_j(m), indent); }
std::string trace(const TransformTrace &t, int indent) { return dump(trace_j(t), indent); }

std::string check_report(const std::string &file, const std::string &system, const Sequent &end,
                         const CheckReport &r, int indent) {
    ordered_json j;
    j["file"] = file;
    j["system"] = system;
    j["ok"] = r.ok;
    j["endsequent"] = end.str();
    j["violations"] = ordered_json::array();
    for (const auto &v : r.violations) j["violations"].push_back({{"path", path_str(v.path)}, {"reason", v.reason}});
    j["metrics"] = metrics_j(r.census);
    return dump(j, indent);
}

std::string pipeline(const PipelineResult &r, const std::string &output, int indent) {
    ordered_json j;
    j["system"] = r.system;
    j["endsequent"] = r.derivation.conclusion().str();
    j["output"] = output;
    j["steps"] = ordered_json::array();
    for (const auto &s : r.steps)
        j["steps"].push_back(
            {{"name", s.name}, {"system", s.system}, {"metrics", metrics_j(s.metrics)}, {"trace", trace_j(s.trace)}});
    return dump(j, indent);
}

std::string certificate(const ExhaustionCertificate &c, int indent) {
    ordered_json j;
    j["goal"] = c.goal.str();
    j["system"] = c.system;
    j["max_depth"] = c.max_depth;
    j["multiplicity_cap"] = c.multiplicity_cap;
    j["universe"] = ordered_json::array();
    for (const auto &t : c.universe) j["universe"].push_back(t.str());
    j["result"] = c.exhausted ? "exhausted" : "found";
    if (c.witness) j["derivation"] = tree(*c.witness);
    j["visited"] = ordered_json::array();
    for (const auto &v : c.visited) j["visited"].push_back(v.str());
    j["expanded"] = c.stats.expanded;
    j["memo_hits"] = c.stats.memo_hits;
    if (!c.invariant.empty()) {
        j["invariant"] = c.invariant;
        j["invariant_holds"] = c.invariant_failures.empty();
        j["invariant_failures"] = c.invariant_failures;
    }
    return dump(j, indent);
}

std::string stats(const std::string &file, const std::string &system, const std::string &order, const Sequent &end,
                  const Metrics &m, int indent) {
    ordered_json j;
    j["file"] = file;
    j["system"] = system;
    j["order"] = order;
    j["endsequent"] = end.str();
    j["metrics"] = metrics_j(m);
    return dump(j, indent);
}

}  // namespace eqs::json
