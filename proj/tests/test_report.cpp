#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uqp/report.hpp"

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

using namespace uqp;

namespace {

// a small hand-built result pair for diffing
std::vector<SuiteResult> sample_results() {
    std::vector<SuiteResult> v(2);
    v[0].suite = "aa.one";
    v[0].check("alpha", Real("1e-30"), Real("1e-25"));
    v[0].check("beta", Real("2e-28"), Real("1e-25"), Real("1e-31"), "note text");
    v[1].suite = "bb.two";
    v[1].check_flag("flag", true, "structural");
    return v;
}

RunConfig tiny_cfg() {
    RunConfig cfg;
    cfg.Ns = {2};
    cfg.samples = 4;
    return cfg;
}

}  // namespace

TEST_CASE("glob matching") {
    CHECK(glob_match("*", "anything.at.all"));
    CHECK(glob_match("alg.*", "alg.ee"));
    CHECK_FALSE(glob_match("alg.*", "wn.tt"));
    CHECK(glob_match("*.basic", "sf.basic"));
    CHECK(glob_match("sf.basic", "sf.basic"));
    CHECK_FALSE(glob_match("sf.basic", "sf.basics"));
    CHECK(glob_match("a*c", "abc"));
    CHECK(glob_match("a*c", "ac"));
    CHECK_FALSE(glob_match("a*c", "acb"));
}

TEST_CASE("check pass rule couples residual and truncation bound") {
    SuiteResult s;
    s.suite = "x";
    s.check("ok", Real("1e-30"), Real("1e-25"));
    CHECK(s.checks.back().pass);
    s.check("res_too_big", Real("1e-20"), Real("1e-25"));
    CHECK_FALSE(s.checks.back().pass);
    // residual fine but the arithmetic could not have resolved a failure
    s.check("bound_too_big", Real("1e-30"), Real("1e-25"), Real("1e-25"));
    CHECK_FALSE(s.checks.back().pass);
    CHECK_FALSE(s.pass);
}

TEST_CASE("report schema and structure") {
    const RunConfig cfg = tiny_cfg();
    const std::string rep = report_jsonl(cfg, sample_results());

    std::istringstream in(rep);
    std::string line;
    std::vector<nlohmann::json> recs;
    while (std::getline(in, line))
        if (!line.empty()) recs.push_back(nlohmann::json::parse(line));
    REQUIRE(recs.size() == 3);

    const nlohmann::json& hdr = recs[0];
    CHECK(hdr.at("schema") == "uqpverify-report/1");
    CHECK(hdr.at("q") == "0.4");
    CHECK(hdr.at("r") == "6.3");
    CHECK(hdr.at("c") == 1);
    CHECK(hdr.at("prec_bits") == 128);
    CHECK(hdr.at("seed") == 1);
    CHECK(hdr.at("suites") == 2);
    CHECK(!hdr.contains("jobs"));  // worker count must not affect report bytes

    CHECK(recs[1].at("suite") == "aa.one");
    CHECK(recs[1].at("pass") == true);
    CHECK(!recs[1].contains("elapsed_s"));  // timings off by default
    REQUIRE(recs[1].at("checks").size() == 2);
    CHECK(recs[1].at("checks")[1].at("note") == "note text");

    RunConfig timed = cfg;
    timed.timings = true;
    const std::string rep_t = report_jsonl(timed, sample_results());
    std::istringstream in2(rep_t);
    std::getline(in2, line);
    std::getline(in2, line);
    CHECK(nlohmann::json::parse(line).contains("elapsed_s"));
}

TEST_CASE("baseline comparison") {
    const RunConfig cfg = tiny_cfg();
    const std::string base = report_jsonl(cfg, sample_results());

    SUBCASE("identical") {
        const BaselineDiff d = baseline_diff(base, base);
        CHECK(d.identical);
        CHECK_FALSE(d.regression);
    }
    SUBCASE("pass flip is a regression") {
        auto res = sample_results();
        res[0].checks[0].pass = false;
        res[0].pass = false;
        const BaselineDiff d = baseline_diff(base, report_jsonl(cfg, res));
        CHECK_FALSE(d.identical);
        CHECK(d.regression);
        CHECK(!d.notes.empty());
    }
    SUBCASE("missing suite is a regression") {
        auto res = sample_results();
        res.pop_back();
        const BaselineDiff d = baseline_diff(base, report_jsonl(cfg, res));
        CHECK(d.regression);
    }
    SUBCASE("added suite is noted but not a regression") {
        auto res = sample_results();
        SuiteResult extra;
        extra.suite = "cc.three";
        extra.check_flag("f", true);
        res.push_back(extra);
        const BaselineDiff d = baseline_diff(base, report_jsonl(cfg, res));
        CHECK_FALSE(d.regression);
        CHECK(!d.notes.empty());
    }
    SUBCASE("large residual drift is a regression even while passing") {
        auto res = sample_results();
        res[0].checks[1].residual = Real("9e-26");  // 450x the baseline, still under tol
        const BaselineDiff d = baseline_diff(base, report_jsonl(cfg, res));
        CHECK(d.regression);
        CHECK(!d.notes.empty());
    }
    SUBCASE("drift below the noise floor is ignored") {
        auto res = sample_results();
        res[0].checks[0].residual = Real("5e-29");  // 50x but far below tol/1000
        const BaselineDiff d = baseline_diff(base, report_jsonl(cfg, res));
        CHECK_FALSE(d.regression);
    }
}

TEST_CASE("per-suite seeds are stable and distinct") {
    CHECK(derive_seed(1, "alg.ee") == derive_seed(1, "alg.ee"));
    CHECK(derive_seed(1, "alg.ee") != derive_seed(1, "alg.ff"));
    CHECK(derive_seed(1, "alg.ee") != derive_seed(2, "alg.ee"));
}

TEST_CASE("suite N selection") {
    RunConfig cfg;
    CHECK(suite_Ns(cfg, {2, 3}) == (std::vector<int>{2, 3}));
    cfg.Ns = {3};
    CHECK(suite_Ns(cfg, {2, 3}) == (std::vector<int>{3}));
}

TEST_CASE("identical runs produce identical bytes") {
    register_all_suites();
    RunConfig cfg = tiny_cfg();
    cfg.seed = 7;

    const auto r1 = run_suites(cfg, "sf.*");
    const auto r2 = run_suites(cfg, "sf.*");
    REQUIRE(!r1.empty());
    CHECK(report_jsonl(cfg, r1) == report_jsonl(cfg, r2));

    // worker-thread count must not leak into the bytes
    RunConfig cfg2 = cfg;
    cfg2.jobs = 2;
    const auto r3 = run_suites(cfg2, "sf.*");
    CHECK(report_jsonl(cfg, r1) == report_jsonl(cfg2, r3));
}

TEST_CASE("invalid configuration surfaces as a failed check, not a crash") {
    register_all_suites();
    RunConfig cfg = tiny_cfg();
    cfg.q = "1.7";
    const auto res = run_suites(cfg, "sf.basic");
    REQUIRE(res.size() == 1);
    CHECK_FALSE(res[0].pass);
    REQUIRE(!res[0].checks.empty());
    CHECK(res[0].checks.back().name == "no_exception");
}
