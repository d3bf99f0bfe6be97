#pragma once

// Term orders used by the nonlengthening and semishortening restrictions.

#include <functional>
#include <string>
#include <vector>

#include "eqs/syntax.hpp"

namespace eqs {

struct TermOrder {
    std::string name;
    std::function<bool(const Term &, const Term &)> less;
};

// Strict comparison of symbol counts.
const TermOrder &size_order();

// Adds `order` to the registry after probing it for irreflexivity on a fixed
// pseudo-random sample of terms. Throws ProofError if a probe t has less(t,t)
// or if the name is already taken.
void register_order(TermOrder order);

// Throws ProofError for unknown names.
const TermOrder &find_order(const std::string &name);
std::vector<std::string> order_names();

// Deterministic sample used by register_order; exposed for tests.
std::vector<Term> probe_terms(std::size_t count, unsigned seed);

}  // namespace eqs
