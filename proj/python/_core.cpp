// Python bindings. Derivations cross the boundary as document text and
// reports as JSON strings; the package wrapper decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eqs/checker.hpp"
#include "eqs/document.hpp"
#include "eqs/pipeline.hpp"
#include "eqs/report.hpp"
#include "eqs/search.hpp"

namespace py = pybind11;
using namespace eqs;

namespace {

std::string check_document(const std::string &text, const std::optional<std::string> &system) {
    const DerivationDocument doc = parse_document(text);
    SystemSpec spec = doc.spec();
    if (system) {
        spec = parse_system(*system);
        spec.hypotheses = doc.hypotheses;
    }
    return json::check_report("<string>", spec.name, doc.derivation.conclusion(), check(doc.derivation, spec));
}

py::tuple transform_document(const std::string &text, const std::vector<std::string> &steps,
                             const std::optional<std::string> &order) {
    const DerivationDocument doc = parse_document(text);
    const std::optional<std::string> ord = order ? order : (doc.order.empty() ? std::nullopt : std::optional(doc.order));
    PipelineResult res;
    {
        py::gil_scoped_release release;
        res = run_pipeline(doc.derivation, doc.system, steps, ord, doc.hypotheses);
    }
    DerivationDocument out;
    out.system = res.system;
    out.order = ord.value_or("");
    out.hypotheses = doc.hypotheses;
    out.derivation = res.derivation;
    return py::make_tuple(print_document(out), json::pipeline(res, "<string>"));
}

py::tuple search(const std::string &goal, const std::string &system, std::size_t depth, std::size_t cap,
                 const std::optional<std::vector<std::string>> &universe) {
    const Sequent g = parse_sequent(goal);
    const SystemSpec spec = parse_system(system);
    SearchBudget budget;
    budget.max_depth = depth;
    budget.multiplicity_cap = cap;
    if (universe) {
        budget.universe.emplace();
        for (const auto &t : *universe) budget.universe->push_back(parse_term(t));
    }
    ExhaustionCertificate cert;
    {
        py::gil_scoped_release release;
        cert = certify_underivable(g, spec, budget);
    }
    std::optional<std::string> doc;
    if (cert.witness) {
        DerivationDocument d;
        d.system = system;
        d.derivation = *cert.witness;
        doc = print_document(d);
    }
    return py::make_tuple(json::certificate(cert), doc);
}

std::string stats_document(const std::string &text, const std::optional<std::string> &order) {
    const DerivationDocument doc = parse_document(text);
    const std::string o = order ? *order : (doc.order.empty() ? "size" : doc.order);
    return json::stats("<string>", doc.system, o, doc.derivation.conclusion(), analyze(doc.derivation, find_order(o)));
}

std::string normalize_document(const std::string &text) { return print_document(parse_document(text)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Proof kernel for first-order sequent calculi with equality";

    // Leaked on purpose: the types must outlive the module's C++ statics.
    static PyObject *proof_error = py::exception<ProofError>(m, "ProofError", PyExc_RuntimeError).release().ptr();
    auto sub = [&](const char *name) { return py::exception<ProofError>(m, name, proof_error).release().ptr(); };
    static PyObject *parse_error = sub("ParseError");
    static PyObject *pipeline_invalid = sub("PipelineInvalid");
    static PyObject *unknown_system = sub("UnknownSystem");
    static PyObject *budget_invalid = sub("BudgetInvalid");
    static PyObject *search_unsupported = sub("SearchUnsupported");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError &e) {
            py::object err = py::handle(parse_error)(e.what());
            err.attr("line") = e.line;
            err.attr("col") = e.col;
            PyErr_SetObject(parse_error, err.ptr());
        } catch (const PipelineInvalid &e) {
            PyErr_SetString(pipeline_invalid, e.what());
        } catch (const UnknownSystem &e) {
            PyErr_SetString(unknown_system, e.what());
        } catch (const BudgetInvalid &e) {
            PyErr_SetString(budget_invalid, e.what());
        } catch (const SearchUnsupported &e) {
            PyErr_SetString(search_unsupported, e.what());
        } catch (const ProofError &e) {
            PyErr_SetString(proof_error, e.what());
        }
    });

    m.def("check_document", &check_document, py::arg("text"), py::arg("system") = py::none());
    m.def("transform_document", &transform_document, py::arg("text"), py::arg("steps"),
          py::arg("order") = py::none());
    m.def("search", &search, py::arg("goal"), py::arg("system"), py::arg("depth") = 8, py::arg("cap") = 3,
          py::arg("universe") = py::none());
    m.def("stats_document", &stats_document, py::arg("text"), py::arg("order") = py::none());
    m.def("normalize_document", &normalize_document, py::arg("text"));
    m.def("pipeline_steps", &pipeline_step_names);
}
