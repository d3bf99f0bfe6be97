#include "doctest.h"
#include "eqs/checker.hpp"
#include "eqs/document.hpp"
#include "eqs/pipeline.hpp"
#include "eqs/report.hpp"
#include "json.hpp"

using namespace eqs;

namespace {

std::optional<std::string> none() { return std::nullopt; }

}  // namespace

TEST_CASE("pipelines are validated before they run") {
    CHECK(plan_pipeline({"to_atomic", "separate", "eliminate_cuts_full"}, "LK=", none()) ==
          std::vector<std::string>{"LK=@atomic", "LK=@atomic", "cf.LK="});
    CHECK(plan_pipeline({"eliminate_cuts_full", "embed_pure"}, "LJ=", none()).back() == "cf.LJ1=");
    CHECK(plan_pipeline({"semishorten"}, "cf.{eq2}", std::string("size")).back() == "cf.EQ12@semishort(size)");
    CHECK(plan_pipeline({"to_eqn", "eliminate_cuts_eqn", "to_eq"}, "EQ", none()).back() == "EQ");
    CHECK_THROWS_AS(plan_pipeline({"semishorten"}, "EQ12", none()), PipelineInvalid);
    CHECK_THROWS_AS(plan_pipeline({"semishorten"}, "EQ12", std::string("nosuchorder")), PipelineInvalid);
    CHECK_THROWS_AS(plan_pipeline({"frobnicate"}, "EQ", none()), PipelineInvalid);
    CHECK_THROWS_AS(plan_pipeline({"embed_pure"}, "LK=", none()), PipelineInvalid);  // still has cuts
    CHECK_THROWS_AS(plan_pipeline({"eliminate_cuts_eq"}, "LK=", none()), PipelineInvalid);
    CHECK_THROWS_AS(plan_pipeline({}, "EQ", none()), PipelineInvalid);
    CHECK_THROWS_AS(split_pipeline("to_atomic,,separate"), PipelineInvalid);
    CHECK(split_pipeline(" to_atomic , separate") == std::vector<std::string>{"to_atomic", "separate"});
}

TEST_CASE("cut elimination in the =_1 and =_2 calculi stays inside them") {
    for (const char *f : {"basic_eqelim_from_eq2.drv", "basic_eqelim_from_eq2l.drv", "basic_eqelim_from_eq1.drv",
                          "basic_eqelim_from_eq1l.drv"}) {
        CAPTURE(f);
        DerivationDocument doc = read_document(std::string(EQS_CORPUS_DIR) + "/" + f);
        REQUIRE(check(doc.derivation, doc.spec()).ok);
        PipelineResult res = run_pipeline(doc.derivation, doc.system, {"eliminate_cuts_full"});
        CHECK(res.system == "cf." + doc.system);
        CHECK(res.steps.at(0).metrics.cut_count == 0);
        CHECK(check(res.derivation, parse_system(res.system)).ok);
    }
}

TEST_CASE("pipeline reports carry per-step systems and traces") {
    const char *text = R"doc(format: 1
system: EQ12

eq1l hole=v skel="a = v" r="b" s="c" i=0 |- a = c, b = c => a = b
  ax f="a = b" |- a = b => a = b
)doc";
    DerivationDocument doc = parse_document(text);
    PipelineResult res = run_pipeline(doc.derivation, doc.system, {"transpose_eq2", "semishorten"}, "size");
    auto j = nlohmann::json::parse(json::pipeline(res, "-"));
    REQUIRE(j["steps"].size() == 2);
    CHECK(j["steps"][0]["system"] == "cf.EQ2");
    CHECK(j["steps"][1]["system"] == "cf.EQ12@semishort(size)");
    CHECK(j["steps"][1]["trace"]["violations"] == 0);
    CHECK(j["endsequent"] == "a = c, b = c => a = b");
}
