#pragma once

// Derivation checking against a system, and tree metrics.

#include <string>
#include <vector>

#include "eqs/calculus.hpp"
#include "eqs/system.hpp"

namespace eqs {

// Child indices from the root.
using TreePath = std::vector<std::size_t>;
std::string path_str(const TreePath &p);  // "root", "root.0.1"

struct Violation {
    TreePath path;
    std::string reason;
};

struct Metrics {
    std::size_t height = 0;
    // Height with exchange inferences not counted.
    std::size_t core_height = 0;
    std::size_t nodes = 0;
    std::size_t cut_count = 0;
    std::size_t non_atomic_cut_count = 0;
    std::size_t eq_count = 0;
    std::size_t non_atomic_eq_count = 0;
    std::size_t lengthening_count = 0;
    std::size_t max_term_size = 0;
};

struct CheckReport {
    bool ok = true;
    std::vector<Violation> violations;
    Metrics census;

    // One "PATH<TAB>REASON" line per violation.
    std::string text() const;
};

// Walks the whole tree and reports every violation; never throws.
CheckReport check(const Derivation &d, const SystemSpec &sys);

// Checks only the schema of every node (no system restrictions).
bool well_formed(const Derivation &d, std::string *why = nullptr);

enum class Side { Left, Right };

// Longest run of consecutive sequents, starting at the endsequent, that
// contain f in the succedent (Left) or antecedent (Right).
std::size_t rank(const Formula &f, const Derivation &d, Side side);

// Lengthening inferences are counted with respect to `order`.
Metrics analyze(const Derivation &d, const TermOrder &order);

}  // namespace eqs
