#pragma once

// Named transformation steps run in sequence. Each step states the system
// its output must satisfy; the runner re-checks every intermediate result
// against that system and refuses to go on otherwise.
//
//   to_atomic            S -> S@atomic
//   separate             S -> S@atomic (and the result is separated)
//   eliminate_cuts_full  LJ*/LK* -> cf.LJ*/cf.LK*
//   eliminate_cuts_eq    EQ12 or a subsystem -> cf.EQ
//   eliminate_cuts_eqn   EQN -> cf.EQN
//   eq12_to_eq           EQ12 or a subsystem -> EQ
//   to_eqn, to_eq        EQ <-> EQN, LJ=/LK= <-> LJN=/LKN=
//   embed_pure           cf.LJ=/cf.LK= -> cf.LJ1=/cf.LK1=
//   singletonize         S -> S@singleton
//   transpose_eq1/2      EQ12 or a subsystem -> cf.EQ1 / cf.EQ2
//   semishorten          EQ12 or a subsystem -> cf.EQ12@semishort(order); needs an order

#include <optional>
#include <string>
#include <vector>

#include "eqs/checker.hpp"
#include "eqs/transform.hpp"

namespace eqs {

// Unknown step, a step not applicable to the system reached so far, or a
// missing order. Raised before any transformation runs.
struct PipelineInvalid : ProofError {
    using ProofError::ProofError;
};

std::vector<std::string> pipeline_step_names();

// Splits "a,b, c" into step names.
std::vector<std::string> split_pipeline(const std::string &text);

// The system reached after each step, starting from `system`. Throws
// PipelineInvalid.
std::vector<std::string> plan_pipeline(const std::vector<std::string> &steps, const std::string &system,
                                       const std::optional<std::string> &order);

struct PipelineStep {
    std::string name;
    std::string system;  // the output was checked here
    Metrics metrics;
    TransformTrace trace;
};

struct PipelineResult {
    Derivation derivation;
    std::string system;
    std::vector<PipelineStep> steps;
};

// `hypotheses` are attached to every intermediate system. Throws
// PipelineInvalid before starting, ProofError if a step fails or its output
// does not check.
PipelineResult run_pipeline(const Derivation &d, const std::string &system, const std::vector<std::string> &steps,
                            const std::optional<std::string> &order = std::nullopt,
                            const std::vector<Sequent> &hypotheses = {});

}  // namespace eqs
