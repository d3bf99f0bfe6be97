#include "eqs/pipeline.hpp"

#include <algorithm>
#include <sstream>

namespace eqs {

namespace {

// "cf.LK=@atomic" as {cut_free, "LK=", "@atomic"}.
struct SysName {
    bool cut_free = false;
    std::string base;
    std::string mods;

    static SysName of(const std::string &s) {
        SysName n;
        std::string rest = s;
        if (rest.rfind("cf.", 0) == 0) {
            n.cut_free = true;
            rest = rest.substr(3);
        }
        const auto at = rest.find('@');
        n.base = rest.substr(0, at);
        n.mods = at == std::string::npos ? "" : rest.substr(at);
        return n;
    }

    std::string str() const { return (cut_free ? "cf." : "") + base + mods; }
    bool gentzen() const { return base.rfind("LJ", 0) == 0 || base.rfind("LK", 0) == 0; }
    std::string family() const { return base.substr(0, 2); }  // LJ, LK or EQ
    std::string tag() const { return gentzen() ? base.substr(2) : base; }

    SysName with_mod(const std::string &m) const {
        SysName n = *this;
        if (n.mods.find("@" + m) == std::string::npos) n.mods += "@" + m;
        return n;
    }
};

const std::vector<std::string> kSteps = {"to_atomic",     "separate",     "eliminate_cuts_full", "eliminate_cuts_eq",
                                         "eliminate_cuts_eqn", "eq12_to_eq", "to_eqn",             "to_eq",
                                         "embed_pure",    "singletonize", "transpose_eq1",      "transpose_eq2",
                                         "semishorten"};

[[noreturn]] void refuse(const std::string &step, const std::string &sys, const std::string &why) {
    throw PipelineInvalid("pipeline: " + step + " does not apply to " + sys + ": " + why);
}

// The system after `step`, given the one before.
std::string next_system(const std::string &step, const std::string &cur, const std::optional<std::string> &order) {
    SysName n = SysName::of(cur);
    const SystemSpec spec = parse_system(cur);
    const bool eqn = n.gentzen() ? n.tag() == "N=" : n.base == "EQN";
    // EQ12 or one of its subsystems, custom rule sets included.
    const bool eq12 = spec.exact_one_succedent && !spec.allows(Rule::Cng) && !spec.allows(Rule::EqElim);
    if (step == "to_atomic" || step == "separate") {
        if (spec.allows(Rule::Cng) || spec.allows(Rule::EqElim) || spec.allows(Rule::Eq1L) ||
            spec.allows(Rule::Eq2L))
            refuse(step, cur, "needs a system whose equality rules are eq1 and eq2");
        return n.with_mod("atomic").str();
    }
    if (step == "eliminate_cuts_full") {
        if (!n.gentzen()) refuse(step, cur, "needs an LJ or LK system");
        return "cf." + n.base;
    }
    if (step == "eliminate_cuts_eq") {
        if (!eq12) refuse(step, cur, "needs EQ12 or a subsystem of it");
        return "cf.EQ";
    }
    if (step == "eliminate_cuts_eqn") {
        if (n.base != "EQN") refuse(step, cur, "needs EQN");
        return "cf.EQN";
    }
    if (step == "eq12_to_eq") {
        if (!eq12) refuse(step, cur, "needs EQ12 or a subsystem of it");
        return "EQ";
    }
    if (step == "to_eqn") {
        if (n.base == "EQ") return "EQN";
        if (n.gentzen() && n.tag() == "=") return n.family() + "N=";
        refuse(step, cur, "needs EQ, LJ= or LK=");
    }
    if (step == "to_eq") {
        if (!eqn) refuse(step, cur, "needs EQN, LJN= or LKN=");
        return n.gentzen() ? n.family() + "=" : "EQ";
    }
    if (step == "embed_pure") {
        if (!n.gentzen() || (n.tag() != "=" && n.tag() != "12=")) refuse(step, cur, "needs LJ=, LK=, LJ12= or LK12=");
        if (!n.cut_free) refuse(step, cur, "needs a cut-free system; run eliminate_cuts_full first");
        return "cf." + n.family() + "1=";
    }
    if (step == "singletonize") {
        if (spec.allows(Rule::Cng) || spec.allows(Rule::EqElim)) refuse(step, cur, "cng and eqelim are not split");
        return n.with_mod("singleton").str();
    }
    if (step == "transpose_eq1" || step == "transpose_eq2") {
        if (!eq12) refuse(step, cur, "needs EQ12 or a subsystem of it");
        return step == "transpose_eq1" ? "cf.EQ1" : "cf.EQ2";
    }
    if (step == "semishorten") {
        if (!order) refuse(step, cur, "an order is required (--order)");
        if (!eq12) refuse(step, cur, "needs EQ12 or a subsystem of it");
        try {
            find_order(*order);
        } catch (const ProofError &e) {
            throw PipelineInvalid(std::string("pipeline: ") + e.what());
        }
        return "cf.EQ12@semishort(" + *order + ")";
    }
    throw PipelineInvalid("pipeline: unknown step '" + step + "'");
}

Derivation apply_step(const std::string &step, const Derivation &d, const std::string &cur,
                      const std::optional<std::string> &order, TransformTrace *tr) {
    if (step == "to_atomic") return to_atomic(d, tr);
    if (step == "separate") {
        Derivation x = separate(d, tr);
        if (!is_separated(x)) throw ProofError("separate: result is not separated");
        return x;
    }
    if (step == "eliminate_cuts_full") return eliminate_cuts_full(d, parse_system(cur), tr);
    if (step == "eliminate_cuts_eq") return eliminate_cuts_eq(d, tr);
    if (step == "eliminate_cuts_eqn") return eliminate_cuts_eqn(d, tr);
    if (step == "eq12_to_eq") return eq12_to_eq(d);
    if (step == "to_eqn") return eq_cng_interderive(d, CngDirection::ToEqn);
    if (step == "to_eq") return eq_cng_interderive(d, CngDirection::ToEq);
    if (step == "embed_pure") return embed_pure(d);
    if (step == "singletonize") return singletonize(d);
    if (step == "transpose_eq1") return transpose_eq(d, EqTarget::Eq1, tr);
    if (step == "transpose_eq2") return transpose_eq(d, EqTarget::Eq2, tr);
    if (step == "semishorten") return semishorten(d, find_order(*order), tr);
    throw PipelineInvalid("pipeline: unknown step '" + step + "'");
}

}  // namespace

std::vector<std::string> pipeline_step_names() { return kSteps; }

std::vector<std::string> split_pipeline(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) throw PipelineInvalid("pipeline: empty step name in '" + text + "'");
        out.push_back(item);
    }
    if (out.empty()) throw PipelineInvalid("pipeline: no steps");
    return out;
}

std::vector<std::string> plan_pipeline(const std::vector<std::string> &steps, const std::string &system,
                                       const std::optional<std::string> &order) {
    if (steps.empty()) throw PipelineInvalid("pipeline: no steps");
    std::vector<std::string> out;
    std::string cur = system;
    try {
        parse_system(cur);
    } catch (const UnknownSystem &e) {
        throw PipelineInvalid(std::string("pipeline: ") + e.what());
    }
    for (const auto &s : steps) {
        if (std::find(kSteps.begin(), kSteps.end(), s) == kSteps.end())
            throw PipelineInvalid("pipeline: unknown step '" + s + "'");
        cur = next_system(s, cur, order);
        out.push_back(cur);
    }
    return out;
}

PipelineResult run_pipeline(const Derivation &d, const std::string &system, const std::vector<std::string> &steps,
                            const std::optional<std::string> &order, const std::vector<Sequent> &hypotheses) {
    const auto plan = plan_pipeline(steps, system, order);
    PipelineResult res;
    res.derivation = d;
    std::string cur = system;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        PipelineStep st;
        st.name = steps[k];
        st.system = plan[k];
        res.derivation = apply_step(st.name, res.derivation, cur, order, &st.trace);
        SystemSpec spec = parse_system(st.system);
        spec.hypotheses = hypotheses;
        const CheckReport rep = check(res.derivation, spec);
        if (!rep.ok) throw ProofError(st.name + ": output does not check in " + st.system + "\n" + rep.text());
        if (res.derivation.conclusion() != d.conclusion()) throw ProofError(st.name + ": endsequent changed");
        if (const TraceEntry *v = st.trace.first_violation())
            throw ProofError(st.name + ": measure did not decrease at " + v->pass + "/" + v->step);
        const TermOrder &o = order ? find_order(*order) : size_order();
        st.metrics = analyze(res.derivation, o);
        res.steps.push_back(std::move(st));
        cur = plan[k];
    }
    res.system = cur;
    return res;
}

}  // namespace eqs
