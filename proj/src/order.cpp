#include "eqs/order.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <random>

namespace eqs {

namespace {

bool size_less(const Term &a, const Term &b) { return a.size() < b.size(); }

// Size first, then the structural order: total on closed terms.
bool sizelex_less(const Term &a, const Term &b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct Registry {
    std::mutex mu;
    std::map<std::string, std::unique_ptr<TermOrder>> orders;

    Registry() {
        orders["size"] = std::make_unique<TermOrder>(TermOrder{"size", size_less});
        orders["sizelex"] = std::make_unique<TermOrder>(TermOrder{"sizelex", sizelex_less});
    }
};

Registry &registry() {
    static Registry r;
    return r;
}

Term random_term(std::mt19937 &rng, int depth) {
    static const char *vars[] = {"a", "b", "c", "v0"};
    static const char *funs[] = {"f", "g", "h"};
    std::uniform_int_distribution<int> pick(0, 3);
    if (depth == 0 || pick(rng) < 2) return Term::var(vars[pick(rng)]);
    int f = pick(rng) % 3;
    std::vector<Term> args;
    for (int i = 0; i <= f % 2; ++i) args.push_back(random_term(rng, depth - 1));
    return Term::fun(funs[f], std::move(args));
}

}  // namespace

const TermOrder &size_order() { return find_order("size"); }

std::vector<Term> probe_terms(std::size_t count, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Term> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_term(rng, 3));
    return out;
}

void register_order(TermOrder order) {
    if (!order.less) throw ProofError("term order " + order.name + " has no comparison");
    for (const auto &t : probe_terms(256, 7))
        if (order.less(t, t)) throw ProofError("term order " + order.name + " is reflexive on " + t.str());
    auto &reg = registry();
    std::lock_guard lock(reg.mu);
    if (reg.orders.count(order.name)) throw ProofError("term order " + order.name + " already registered");
    std::string name = order.name;
    reg.orders[name] = std::make_unique<TermOrder>(std::move(order));
}

const TermOrder &find_order(const std::string &name) {
    auto &reg = registry();
    std::lock_guard lock(reg.mu);
    auto it = reg.orders.find(name);
    if (it == reg.orders.end()) throw ProofError("unknown term order: " + name);
    return *it->second;
}

std::vector<std::string> order_names() {
    auto &reg = registry();
    std::lock_guard lock(reg.mu);
    std::vector<std::string> out;
    for (const auto &[k, _] : reg.orders) out.push_back(k);
    return out;
}

}  // namespace eqs
