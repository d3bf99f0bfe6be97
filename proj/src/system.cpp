#include "eqs/system.hpp"

#include <sstream>

namespace eqs {

namespace {

std::set<Rule> gentzen(bool classical) {
    std::set<Rule> r{Rule::Ax, Rule::WeakL, Rule::WeakR, Rule::ExchL, Rule::ContrL, Rule::Cut};
    if (classical) {
        r.insert(Rule::ExchR);
        r.insert(Rule::ContrR);
    }
    for (int i = static_cast<int>(Rule::AndL1); i <= static_cast<int>(Rule::ExistsR); ++i)
        r.insert(static_cast<Rule>(i));
    return r;
}

std::set<Rule> equational() { return {Rule::Ax, Rule::Refl, Rule::WeakL, Rule::ExchL, Rule::ContrL, Rule::Cut}; }

std::optional<std::set<Rule>> eq_rules_of(const std::string &tag) {
    if (tag == "") return std::set<Rule>{};
    if (tag == "=") return std::set<Rule>{Rule::Eq1, Rule::Eq2};
    if (tag == "1=") return std::set<Rule>{Rule::EqElim};
    if (tag == "N=") return std::set<Rule>{Rule::Cng};
    if (tag == "=_1") return std::set<Rule>{Rule::Eq1, Rule::Eq1L};
    if (tag == "=_2") return std::set<Rule>{Rule::Eq2, Rule::Eq2L};
    if (tag == "12=") return std::set<Rule>{Rule::Eq1, Rule::Eq2, Rule::Eq1L, Rule::Eq2L};
    return std::nullopt;
}

std::optional<std::set<Rule>> eq_family(const std::string &tag) {
    if (tag == "") return std::set<Rule>{Rule::Eq1, Rule::Eq2};
    if (tag == "N") return std::set<Rule>{Rule::Cng};
    if (tag == "1") return std::set<Rule>{Rule::Eq1, Rule::Eq1L};
    if (tag == "2") return std::set<Rule>{Rule::Eq2, Rule::Eq2L};
    if (tag == "12") return std::set<Rule>{Rule::Eq1, Rule::Eq2, Rule::Eq1L, Rule::Eq2L};
    return std::nullopt;
}

std::string trim(const std::string &s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

SystemSpec parse_system(const std::string &full) {
    SystemSpec spec;
    spec.name = full;
    std::string rest = trim(full);
    bool cut_free = false;
    if (rest.rfind("cf.", 0) == 0) {
        cut_free = true;
        rest = rest.substr(3);
    }
    std::string base = rest.substr(0, rest.find('@'));
    std::string mods = rest.size() > base.size() ? rest.substr(base.size()) : "";

    if (base.size() >= 2 && (base.rfind("LJ", 0) == 0 || base.rfind("LK", 0) == 0)) {
        bool classical = base[1] == 'K';
        auto eq = eq_rules_of(base.substr(2));
        if (!eq) throw UnknownSystem("unknown system: " + full);
        spec.rules = gentzen(classical);
        if (!eq->empty()) spec.rules.insert(Rule::Refl);
        spec.rules.insert(eq->begin(), eq->end());
        if (!classical) spec.succedent_bound = 1;
    } else if (base.rfind("EQ", 0) == 0) {
        auto eq = eq_family(base.substr(2));
        if (!eq) throw UnknownSystem("unknown system: " + full);
        spec.rules = equational();
        spec.rules.insert(eq->begin(), eq->end());
        spec.succedent_bound = 1;
        spec.exact_one_succedent = true;
    } else if (!base.empty() && base.front() == '{' && base.back() == '}') {
        spec.rules = equational();
        std::stringstream ss(base.substr(1, base.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            auto r = rule_from_name(item);
            if (!r || !is_equality(*r)) throw UnknownSystem("not an equality rule: '" + item + "' in " + full);
            spec.rules.insert(*r);
        }
        spec.succedent_bound = 1;
        spec.exact_one_succedent = true;
    } else {
        throw UnknownSystem("unknown system: " + full);
    }
    if (cut_free) spec.rules.erase(Rule::Cut);

    while (!mods.empty()) {
        if (mods[0] != '@') throw UnknownSystem("malformed modifier in " + full);
        auto next = mods.find('@', 1);
        std::string m = mods.substr(1, next == std::string::npos ? std::string::npos : next - 1);
        mods = next == std::string::npos ? "" : mods.substr(next);
        auto order_arg = [&](const std::string &prefix) -> std::optional<std::string> {
            if (m.rfind(prefix + "(", 0) != 0 || m.back() != ')') return std::nullopt;
            return m.substr(prefix.size() + 1, m.size() - prefix.size() - 2);
        };
        if (m == "atomic") {
            spec.atomic_eq_only = true;
        } else if (m == "singleton") {
            spec.singleton_eq_only = true;
        } else if (auto o = order_arg("nonlength")) {
            spec.restriction = OrderRestriction::Nonlengthening;
            spec.order = *o;
        } else if (auto o2 = order_arg("semishort")) {
            spec.restriction = OrderRestriction::Semishortening;
            spec.order = *o2;
        } else {
            throw UnknownSystem("unknown modifier @" + m + " in " + full);
        }
    }
    if (spec.restriction != OrderRestriction::None) {
        try {
            find_order(spec.order);
        } catch (const ProofError &e) {
            throw UnknownSystem(e.what());
        }
    }
    return spec;
}

}  // namespace eqs
