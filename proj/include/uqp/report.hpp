#pragma once
// Suite registry, run configuration, and deterministic reporting.
//
// A suite is a named batch of checks.  Each check records a residual, the
// tolerance it was held to, and the truncation bound accumulated while
// computing it; it passes only if the residual is below tolerance AND the
// bound is below a tenth of the tolerance (so a check can never pass because
// the arithmetic was too coarse to see the failure).
//
// Reports are JSON Lines: one header record with the full configuration,
// then one record per suite in name order.  All numbers are formatted
// deterministically, and wall-clock timings are excluded unless explicitly
// requested, so identical configuration and seed reproduce identical bytes.

#include "uqp/scalar.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace uqp {

struct RunConfig {
    std::string q = "0.4";
    std::string r = "6.3";
    int c = 1;
    std::vector<int> Ns;  // empty: each suite uses its own default list
    int order = 24;       // series truncation order
    unsigned prec_bits = 128;
    int samples = 100;  // random sample points / draws per randomized check
    std::uint64_t seed = 1;
    bool timings = false;
    int jobs = 1;  // worker threads for suite dispatch
};

struct CheckResult {
    std::string name;
    Real residual{0};
    Real tol{0};
    Real bound{0};
    bool pass = false;
    std::string note;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass = true;
    double elapsed_s = 0.0;

    void check(const std::string& name, const Real& residual, const Real& tol,
               const Real& bound = Real(0), const std::string& note = "");
    // boolean outcomes (structural checks, negative controls)
    void check_flag(const std::string& name, bool ok, const std::string& note = "");
};

using SuiteFn = std::function<void(const RunConfig&, SuiteResult&)>;

void register_suite(const std::string& name, SuiteFn fn);
std::vector<std::string> registered_suites();

// registers every built-in suite (idempotent)
void register_all_suites();

// effective N list for a suite: the configured override or the suite default
std::vector<int> suite_Ns(const RunConfig& cfg, std::vector<int> def);

// derive a per-suite RNG seed from the run seed and the suite name
std::uint64_t derive_seed(std::uint64_t run_seed, const std::string& suite);

// run all suites whose name matches the glob pattern (empty = all), in name
// order; sets the working precision from the configuration
std::vector<SuiteResult> run_suites(const RunConfig& cfg, const std::string& pattern);

bool glob_match(const std::string& pattern, const std::string& name);

std::string report_jsonl(const RunConfig& cfg, const std::vector<SuiteResult>& results);

struct BaselineDiff {
    bool identical = false;
    bool regression = false;
    std::vector<std::string> notes;
};

// compare two reports: flags pass/fail flips, residual drift beyond 10x (when
// above noise level), and structural differences such as missing suites
BaselineDiff baseline_diff(const std::string& old_report, const std::string& new_report);

// per-module suite registrars (called by register_all_suites)
void register_sf_suites();
void register_modes_suites();
void register_alg_suites();
void register_rmat_suites();
void register_wn_suites();

}  // namespace uqp
