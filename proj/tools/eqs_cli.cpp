// eqs: check, transform, search and measure derivation documents.
//
// Exit codes: 0 success, 1 a check or search failed, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "eqs/checker.hpp"
#include "eqs/document.hpp"
#include "eqs/pipeline.hpp"
#include "eqs/report.hpp"
#include "eqs/search.hpp"

namespace {

using namespace eqs;

enum Exit { kOk = 0, kFail = 1, kUsage = 2 };

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool as_json(const std::string &fmt) { return fmt == "json"; }

std::string where(const ParseError &e, const std::string &file) {
    return file + ": " + e.what();
}

int cmd_check(const std::string &file, const std::optional<std::string> &system, const std::string &fmt) {
    DerivationDocument doc = read_document(file);
    SystemSpec spec = doc.spec();
    if (system) {
        spec = parse_system(*system);
        spec.hypotheses = doc.hypotheses;
    }
    const CheckReport rep = check(doc.derivation, spec);
    if (as_json(fmt)) {
        std::cout << json::check_report(file, spec.name, doc.derivation.conclusion(), rep) << "\n";
    } else {
        std::cout << (rep.ok ? "ok " : "FAIL ") << file << " in " << spec.name << ": "
                  << doc.derivation.conclusion().str() << "\n";
        if (!rep.ok) std::cout << rep.text();
    }
    return rep.ok ? kOk : kFail;
}

int cmd_transform(const std::string &file, const std::string &pipeline, const std::optional<std::string> &order,
                  const std::string &out, const std::string &fmt) {
    const auto steps = split_pipeline(pipeline);
    DerivationDocument doc = read_document(file);
    const std::optional<std::string> ord = order ? order : (doc.order.empty() ? std::nullopt : std::optional(doc.order));
    plan_pipeline(steps, doc.system, ord);  // reject bad pipelines before reading further

    // The input itself must be valid in its declared system.
    const CheckReport in = check(doc.derivation, doc.spec());
    if (!in.ok) {
        std::cerr << "input does not check in " << doc.system << "\n" << in.text();
        return kFail;
    }
    PipelineResult res = run_pipeline(doc.derivation, doc.system, steps, ord, doc.hypotheses);

    DerivationDocument outdoc;
    outdoc.system = res.system;
    outdoc.order = ord.value_or("");
    outdoc.hypotheses = doc.hypotheses;
    outdoc.derivation = res.derivation;
    if (out == "-") std::cout << print_document(outdoc);
    else write_document(outdoc, out);

    if (as_json(fmt)) {
        std::cerr << json::pipeline(res, out) << "\n";
    } else {
        std::ostream &log = out == "-" ? std::cerr : std::cout;
        for (const auto &st : res.steps)
            log << st.name << " -> " << st.system << " (nodes " << st.metrics.nodes << ", height "
                << st.metrics.height << ", cuts " << st.metrics.cut_count << ")\n";
        if (out != "-") log << "wrote " << out << "\n";
    }
    return kOk;
}

std::vector<Term> parse_universe(const std::string &text) {
    std::vector<Term> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_term(item));
    return out;
}

int cmd_search(const std::string &goal, const std::string &system, std::size_t depth, std::size_t cap,
               const std::optional<std::string> &universe, const std::optional<std::string> &out,
               const std::string &fmt) {
    const Sequent g = parse_sequent(goal);
    const SystemSpec spec = parse_system(system);
    SearchBudget budget;
    budget.max_depth = depth;
    budget.multiplicity_cap = cap;
    if (universe) budget.universe = parse_universe(*universe);
    const ExhaustionCertificate cert = certify_underivable(g, spec, budget);
    if (as_json(fmt)) std::cout << json::certificate(cert) << "\n";
    if (cert.witness) {
        DerivationDocument doc;
        doc.system = system;
        doc.derivation = *cert.witness;
        if (out) write_document(doc, *out);
        if (!as_json(fmt)) std::cout << "found: " << g.str() << " in " << system << "\n" << print_document(doc);
        return kOk;
    }
    if (!as_json(fmt)) std::cout << cert.text();
    return kFail;
}

int cmd_stats(const std::string &file, const std::optional<std::string> &order, const std::string &fmt) {
    DerivationDocument doc = read_document(file);
    const std::string o = order ? *order : (doc.order.empty() ? "size" : doc.order);
    const Metrics m = analyze(doc.derivation, find_order(o));
    if (as_json(fmt)) {
        std::cout << json::stats(file, doc.system, o, doc.derivation.conclusion(), m) << "\n";
    } else {
        std::cout << "endsequent      " << doc.derivation.conclusion().str() << "\n"
                  << "system          " << doc.system << "\n"
                  << "order           " << o << "\n"
                  << "nodes           " << m.nodes << "\n"
                  << "height          " << m.height << "\n"
                  << "core height     " << m.core_height << "\n"
                  << "cuts            " << m.cut_count << " (" << m.non_atomic_cut_count << " non-atomic)\n"
                  << "eq inferences   " << m.eq_count << " (" << m.non_atomic_eq_count << " non-atomic)\n"
                  << "lengthening     " << m.lengthening_count << "\n"
                  << "max term size   " << m.max_term_size << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Proof kernel for first-order sequent calculi with equality"};
    app.require_subcommand(1);
    std::string fmt = "text";
    app.add_option("--format", fmt, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string file, pipeline, out = "-", goal, system;
    std::optional<std::string> sys_opt, order, universe, search_out;
    std::size_t depth = 8, cap = 3;

    auto *check = app.add_subcommand("check", "Check a derivation document");
    check->add_option("file", file, "Derivation document")->required();
    check->add_option("--system", sys_opt, "Check in this system instead of the declared one");

    auto *transform = app.add_subcommand("transform", "Run a transformation pipeline");
    transform->add_option("file", file, "Derivation document")->required();
    transform->add_option("--pipeline", pipeline, "Comma-separated steps")->required();
    transform->add_option("--order", order, "Term order (needed by semishorten)");
    transform->add_option("-o,--output", out, "Output document, - for stdout");

    auto *search = app.add_subcommand("search", "Bounded proof search");
    search->add_option("--goal", goal, "Goal sequent")->required();
    search->add_option("--system", system, "Cut-free equational system")->required();
    search->add_option("--depth", depth, "Maximum depth in sequents");
    search->add_option("--cap", cap, "Multiplicity cap");
    search->add_option("--universe", universe, "Terms separated by ';' (default: subterms of the goal)");
    search->add_option("-o,--output", search_out, "Write a found derivation here");

    auto *stats = app.add_subcommand("stats", "Tree metrics");
    stats->add_option("file", file, "Derivation document")->required();
    stats->add_option("--order", order, "Term order for lengthening counts");

    for (auto *sub : {check, transform, search, stats})
        sub->add_option("--format", fmt, "Output format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*check) return cmd_check(file, sys_opt, fmt);
        if (*transform) return cmd_transform(file, pipeline, order, out, fmt);
        if (*search) return cmd_search(goal, system, depth, cap, universe, search_out, fmt);
        if (*stats) return cmd_stats(file, order, fmt);
    } catch (const ParseError &e) {
        std::cerr << where(e, file.empty() ? "<input>" : file) << "\n";
        return kUsage;
    } catch (const PipelineInvalid &e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const UnknownSystem &e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const BudgetInvalid &e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const SearchUnsupported &e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const ProofError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
