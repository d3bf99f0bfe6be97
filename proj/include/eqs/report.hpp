#pragma once

// JSON renderings used by the command-line tool and the Python module. Field
// names are stable; new fields may be added, none are renamed.

#include <string>

#include "eqs/checker.hpp"
#include "eqs/pipeline.hpp"
#include "eqs/search.hpp"

namespace eqs::json {

// {"rule", "annotations", "conclusion", "premisses": [...]}
std::string derivation(const Derivation &d, int indent = -1);

// {"height", "core_height", "nodes", "cuts", "non_atomic_cuts", "eq_inferences",
//  "non_atomic_eq_inferences", "lengthening", "max_term_size"}
std::string metrics(const Metrics &m, int indent = -1);

// {"entries": [{"pass", "step", "parent", "child", "decreasing"}], "notes",
//  "violations"}
std::string trace(const TransformTrace &t, int indent = -1);

// {"file", "system", "ok", "endsequent", "violations": [{"path", "reason"}],
//  "metrics"}
std::string check_report(const std::string &file, const std::string &system, const Sequent &end,
                         const CheckReport &r, int indent = 2);

// {"system", "endsequent", "output", "steps": [{"name", "system", "metrics",
//  "trace"}]}
std::string pipeline(const PipelineResult &r, const std::string &output, int indent = 2);

// {"goal", "system", "max_depth", "multiplicity_cap", "universe", "result":
//  "found" | "exhausted", "derivation" (when found), "visited", "expanded",
//  "memo_hits", "invariant", "invariant_holds", "invariant_failures"}
std::string certificate(const ExhaustionCertificate &c, int indent = 2);

// {"file", "system", "order", "endsequent", "metrics"}
std::string stats(const std::string &file, const std::string &system, const std::string &order,
                  const Sequent &end, const Metrics &m, int indent = 2);

}  // namespace eqs::json
