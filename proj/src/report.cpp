#include "uqp/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace uqp {

void SuiteResult::check(const std::string& name, const Real& residual, const Real& tol,
                        const Real& bound, const std::string& note) {
    CheckResult c;
    c.name = name;
    c.residual = residual;
    c.tol = tol;
    c.bound = bound;
    c.pass = residual < tol && bound < tol / 10;
    c.note = note;
    pass = pass && c.pass;
    checks.push_back(std::move(c));
}

void SuiteResult::check_flag(const std::string& name, bool ok, const std::string& note) {
    check(name, Real(ok ? 0 : 1), Real("0.5"), Real(0), note);
}

namespace {

std::map<std::string, SuiteFn>& registry() {
    static std::map<std::string, SuiteFn> reg;
    return reg;
}

}  // namespace

void register_suite(const std::string& name, SuiteFn fn) {
    if (!registry().emplace(name, std::move(fn)).second)
        throw std::logic_error("register_suite: duplicate suite name '" + name + "'");
}

std::vector<std::string> registered_suites() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

void register_all_suites() {
    static bool done = false;
    if (done) return;
    done = true;
    register_sf_suites();
    register_modes_suites();
    register_alg_suites();
    register_rmat_suites();
    register_wn_suites();
}

std::vector<int> suite_Ns(const RunConfig& cfg, std::vector<int> def) {
    return cfg.Ns.empty() ? def : cfg.Ns;
}

std::uint64_t derive_seed(std::uint64_t run_seed, const std::string& suite) {
    // FNV-1a over the suite name, folded into the run seed, then mixed once
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : suite) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::uint64_t z = run_seed + 0x9e3779b97f4a7c15ull * h;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

bool glob_match(const std::string& pattern, const std::string& name) {
    std::size_t p = 0, n = 0, star = std::string::npos, mark = 0;
    while (n < name.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == name[n])) {
            ++p;
            ++n;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = n;
        } else if (star != std::string::npos) {
            p = star + 1;
            n = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

std::vector<SuiteResult> run_suites(const RunConfig& cfg, const std::string& pattern) {
    register_all_suites();

    std::vector<std::pair<std::string, SuiteFn>> selected;
    for (const auto& [name, fn] : registry())
        if (pattern.empty() || glob_match(pattern, name)) selected.emplace_back(name, fn);

    std::vector<SuiteResult> results(selected.size());
    auto run_one = [&](std::size_t i) {
        set_precision_bits(cfg.prec_bits);
        SuiteResult& sr = results[i];
        sr.suite = selected[i].first;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            selected[i].second(cfg, sr);
        } catch (const std::exception& e) {
            sr.check_flag("no_exception", false, e.what());
        }
        sr.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1 || selected.size() <= 1) {
        set_precision_bits(cfg.prec_bits);
        for (std::size_t i = 0; i < selected.size(); ++i) run_one(i);
    } else {
        // precision is thread-local, so each worker sets it on entry (inside
        // run_one); results land in preassigned slots, keeping name order
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(jobs), selected.size());
        for (std::size_t w = 0; w < nw; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < selected.size(); i = next.fetch_add(1))
                    run_one(i);
            });
        for (auto& th : pool) th.join();
        set_precision_bits(cfg.prec_bits);
    }
    return results;
}

std::string report_jsonl(const RunConfig& cfg, const std::vector<SuiteResult>& results) {
    using json = nlohmann::ordered_json;
    std::ostringstream out;

    json hdr;
    hdr["schema"] = "uqpverify-report/1";
    hdr["q"] = cfg.q;
    hdr["r"] = cfg.r;
    hdr["c"] = cfg.c;
    hdr["N"] = cfg.Ns;
    hdr["order"] = cfg.order;
    hdr["prec_bits"] = cfg.prec_bits;
    hdr["samples"] = cfg.samples;
    hdr["seed"] = cfg.seed;
    hdr["suites"] = results.size();
    out << hdr.dump() << '\n';

    for (const auto& sr : results) {
        json rec;
        rec["suite"] = sr.suite;
        rec["pass"] = sr.pass;
        if (cfg.timings) rec["elapsed_s"] = sr.elapsed_s;
        json checks = json::array();
        for (const auto& c : sr.checks) {
            json jc;
            jc["name"] = c.name;
            jc["residual"] = sci(c.residual);
            jc["tol"] = sci(c.tol);
            if (c.bound != 0) jc["bound"] = sci(c.bound);
            jc["pass"] = c.pass;
            if (!c.note.empty()) jc["note"] = c.note;
            checks.push_back(std::move(jc));
        }
        rec["checks"] = std::move(checks);
        out << rec.dump() << '\n';
    }
    return out.str();
}

namespace {

struct ParsedReport {
    nlohmann::json header;
    std::map<std::string, nlohmann::json> suites;
};

ParsedReport parse_report(const std::string& text) {
    ParsedReport rep;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        if (first) {
            if (!j.contains("schema") || j["schema"] != "uqpverify-report/1")
                throw std::runtime_error("baseline_diff: unrecognized report schema");
            rep.header = std::move(j);
            first = false;
        } else {
            // take the key out before moving: the by-value assignment target
            // may consume j before a key expression inside [] would run
            std::string suite = j.at("suite").get<std::string>();
            rep.suites[std::move(suite)] = std::move(j);
        }
    }
    if (first) throw std::runtime_error("baseline_diff: empty report");
    return rep;
}

double sci_to_double(const nlohmann::json& j) { return std::stod(j.get<std::string>()); }

}  // namespace

BaselineDiff baseline_diff(const std::string& old_report, const std::string& new_report) {
    BaselineDiff d;
    if (old_report == new_report) {
        d.identical = true;
        return d;
    }
    ParsedReport oldr = parse_report(old_report);
    ParsedReport newr = parse_report(new_report);

    for (const auto& [name, orec] : oldr.suites) {
        auto it = newr.suites.find(name);
        if (it == newr.suites.end()) {
            d.regression = true;
            d.notes.push_back("suite missing from new report: " + name);
            continue;
        }
        const auto& nrec = it->second;
        if (orec.at("pass").get<bool>() && !nrec.at("pass").get<bool>()) {
            d.regression = true;
            d.notes.push_back("suite now failing: " + name);
        }
        // per-check residual drift: flag growth beyond 10x once above the
        // noise floor (a thousandth of the check's own tolerance)
        std::map<std::string, const nlohmann::json*> oldc;
        for (const auto& c : orec.at("checks")) oldc[c.at("name").get<std::string>()] = &c;
        for (const auto& c : nrec.at("checks")) {
            auto oc = oldc.find(c.at("name").get<std::string>());
            if (oc == oldc.end()) continue;
            const double rold = sci_to_double(oc->second->at("residual"));
            const double rnew = sci_to_double(c.at("residual"));
            const double tol = sci_to_double(c.at("tol"));
            if (rnew > 10 * rold && rnew > tol * 1e-3) {
                d.regression = true;
                d.notes.push_back("residual drift in " + name + "/" +
                                  c.at("name").get<std::string>() + ": " +
                                  oc->second->at("residual").get<std::string>() + " -> " +
                                  c.at("residual").get<std::string>());
            }
        }
    }
    for (const auto& [name, nrec] : newr.suites)
        if (!oldr.suites.count(name)) d.notes.push_back("suite added in new report: " + name);
    return d;
}

}  // namespace uqp
