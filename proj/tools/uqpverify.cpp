// uqpverify: command-line driver for the verification engine.
//
//   uqpverify run       run suites, emit a JSON-lines report
//   uqpverify eval      evaluate one named special function at given arguments
//   uqpverify baseline  compare two reports for regressions

#include "uqp/qspecial.hpp"
#include "uqp/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace uqp;

Cplx parse_cplx(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) return Cplx(real_from_decimal(s));
    return Cplx(real_from_decimal(s.substr(0, comma)),
                real_from_decimal(s.substr(comma + 1)));
}

void need_args(const std::vector<std::string>& args, std::size_t n, const std::string& usage) {
    if (args.size() != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " argument(s): " + usage);
}

// name -> (usage, evaluator)
using EvalFn = std::function<Cplx(const QParams&, const std::vector<std::string>&)>;

const std::map<std::string, std::pair<std::string, EvalFn>>& eval_table() {
    static const std::map<std::string, std::pair<std::string, EvalFn>> table = {
        {"bracket",
         {"bracket <v>", [](const QParams& P, const std::vector<std::string>& a) {
              need_args(a, 1, "bracket <v>");
              return bracket(P, parse_cplx(a[0]));
          }}},
        {"bracket_star",
         {"bracket_star <v>", [](const QParams& P, const std::vector<std::string>& a) {
              need_args(a, 1, "bracket_star <v>");
              return bracket_star(P, parse_cplx(a[0]));
          }}},
        {"theta",
         {"theta <z> <base>", [](const QParams& P, const std::vector<std::string>& a) {
              need_args(a, 2, "theta <z> <base>");
              return theta(P, parse_cplx(a[0]), real_from_decimal(a[1]));
          }}},
        {"qnum",
         {"qnum <x>", [](const QParams& P, const std::vector<std::string>& a) {
              need_args(a, 1, "qnum <x>");
              return qnum(P, parse_cplx(a[0]));
          }}},
        {"braces",
         {"braces <z> [star]", [](const QParams& P, const std::vector<std::string>& a) {
              if (a.size() != 1 && a.size() != 2)
                  throw std::invalid_argument("expected: braces <z> [star]");
              const bool starred = a.size() == 2 && (a[1] == "star" || a[1] == "1");
              return braces(P, parse_cplx(a[0]), starred);
          }}},
        {"kappa",
         {"kappa", [](const QParams& P, const std::vector<std::string>& a) {
              need_args(a, 0, "kappa");
              return kappa(P);
          }}},
        {"rho_plus",
         {"rho_plus <v> [star]", [](const QParams& P, const std::vector<std::string>& a) {
              if (a.size() != 1 && a.size() != 2)
                  throw std::invalid_argument("expected: rho_plus <v> [star]");
              const bool starred = a.size() == 2 && (a[1] == "star" || a[1] == "1");
              return rho_plus(P, parse_cplx(a[0]), starred);
          }}},
        {"rho_ratio",
         {"rho_ratio <v>", [](const QParams& P, const std::vector<std::string>& a) {
              need_args(a, 1, "rho_ratio <v>");
              return rho_ratio(P, parse_cplx(a[0]));
          }}},
        {"mu_star",
         {"mu_star <v>", [](const QParams& P, const std::vector<std::string>& a) {
              need_args(a, 1, "mu_star <v>");
              return mu_star(P, parse_cplx(a[0]));
          }}},
        {"phi_N",
         {"phi_N <z>", [](const QParams& P, const std::vector<std::string>& a) {
              need_args(a, 1, "phi_N <z>");
              return phi_N(P, parse_cplx(a[0]));
          }}},
        {"g_N",
         {"g_N", [](const QParams& P, const std::vector<std::string>& a) {
              need_args(a, 0, "g_N");
              return g_N(P);
          }}},
        {"g_N_prime",
         {"g_N_prime", [](const QParams& P, const std::vector<std::string>& a) {
              need_args(a, 0, "g_N_prime");
              return g_N_prime(P);
          }}},
        {"C_n",
         {"C_n <n>", [](const QParams& P, const std::vector<std::string>& a) {
              need_args(a, 1, "C_n <n>");
              return C_n(P, std::stol(a[0]));
          }}},
        {"pochhammer",
         {"pochhammer <z> <base>...", [](const QParams& P, const std::vector<std::string>& a) {
              if (a.size() < 2)
                  throw std::invalid_argument("expected: pochhammer <z> <base>...");
              std::vector<Real> bases;
              for (std::size_t i = 1; i < a.size(); ++i)
                  bases.push_back(real_from_decimal(a[i]));
              return pochhammer(P, parse_cplx(a[0]), bases).value;
          }}},
    };
    return table;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

int cmd_run(const RunConfig& cfg, const std::string& suite_glob, const std::string& out_path,
            const std::string& baseline_path, bool list_only) {
    register_all_suites();
    if (list_only) {
        for (const std::string& name : registered_suites())
            if (glob_match(suite_glob.empty() ? "*" : suite_glob, name))
                std::cout << name << "\n";
        return 0;
    }

    const std::vector<SuiteResult> results = run_suites(cfg, suite_glob);
    if (results.empty()) {
        std::cerr << "no suite matches pattern '" << suite_glob << "'\n";
        return 2;
    }
    const std::string rep = report_jsonl(cfg, results);
    if (out_path.empty()) {
        std::cout << rep;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        f << rep;
    }

    int failed = 0;
    for (const SuiteResult& r : results) {
        if (r.pass) continue;
        ++failed;
        for (const CheckResult& c : r.checks)
            if (!c.pass)
                std::cerr << "FAIL " << r.suite << " / " << c.name << ": residual "
                          << sci(c.residual) << " (tol " << sci(c.tol) << ")\n";
    }
    std::cerr << results.size() - static_cast<std::size_t>(failed) << "/" << results.size()
              << " suites passed\n";
    bool ok = failed == 0;

    if (!baseline_path.empty()) {
        const BaselineDiff d = baseline_diff(read_file(baseline_path), rep);
        for (const std::string& n : d.notes) std::cerr << "baseline: " << n << "\n";
        std::cerr << (d.identical ? "baseline: reports identical\n"
                      : d.regression ? "baseline: REGRESSION\n"
                                     : "baseline: no regression\n");
        if (d.regression) ok = false;
    }
    return ok ? 0 : 1;
}

int cmd_eval(const RunConfig& cfg, int N, const std::string& name,
             const std::vector<std::string>& args) {
    const auto& table = eval_table();
    const auto it = table.find(name);
    if (it == table.end()) {
        std::cerr << "unknown function '" << name << "'; known names:\n";
        for (const auto& [k, v] : table) std::cerr << "  " << v.first << "\n";
        return 2;
    }
    const QParams P(cfg.q, cfg.r, N, cfg.c);
    const Cplx val = it->second.second(P, args);
    std::cout << decimal(val, 30) << "\n";
    return 0;
}

int cmd_baseline(const std::string& old_path, const std::string& new_path) {
    const BaselineDiff d = baseline_diff(read_file(old_path), read_file(new_path));
    for (const std::string& n : d.notes) std::cout << n << "\n";
    std::cout << (d.identical ? "reports identical\n"
                  : d.regression ? "REGRESSION\n"
                                 : "no regression\n");
    return d.regression ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification engine for the elliptic quantum algebra, its mode "
                 "constraints, and the deformed W-algebra scattering structure"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a key=value file");

    RunConfig cfg;
    std::string suite_glob = "*";
    std::string out_path, baseline_path, old_path, new_path;
    bool list_only = false;
    int eval_N = 2;
    std::string eval_name;
    std::vector<std::string> eval_args;

    CLI::App* run = app.add_subcommand("run", "run suites and write a JSON-lines report");
    run->add_option("--suite", suite_glob, "glob selecting suites (e.g. 'alg.*')");
    run->add_option("--N", cfg.Ns, "rank override (repeatable; default: per-suite list)");
    run->add_option("--q", cfg.q, "deformation parameter q in (0,1), decimal string");
    run->add_option("--r", cfg.r, "elliptic nome exponent r (p = q^{2r})");
    run->add_option("--c", cfg.c, "integer central element value");
    run->add_option("--order", cfg.order, "mode-expansion truncation order");
    run->add_option("--prec", cfg.prec_bits, "working precision in bits");
    run->add_option("--samples", cfg.samples, "random samples per randomized check");
    run->add_option("--seed", cfg.seed, "base seed for all randomized draws");
    run->add_option("--jobs", cfg.jobs, "worker threads for suite dispatch");
    run->add_flag("--timings", cfg.timings, "include wall times in the report");
    run->add_option("--out", out_path, "report file (default: stdout)");
    run->add_option("--baseline", baseline_path, "prior report to compare against");
    run->add_flag("--list", list_only, "list matching suite names and exit");

    CLI::App* ev = app.add_subcommand("eval", "evaluate a named special function");
    ev->add_option("name", eval_name, "function name")->required();
    ev->add_option("args", eval_args, "arguments (complex values as re or re,im)");
    ev->add_option("--N", eval_N, "rank N");
    ev->add_option("--q", cfg.q, "deformation parameter q");
    ev->add_option("--r", cfg.r, "elliptic nome exponent r");
    ev->add_option("--c", cfg.c, "integer central element value");
    ev->add_option("--prec", cfg.prec_bits, "working precision in bits");

    CLI::App* bl = app.add_subcommand("baseline", "compare two reports");
    bl->add_option("old", old_path, "earlier report")->required();
    bl->add_option("new", new_path, "newer report")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        uqp::set_precision_bits(cfg.prec_bits);
        if (run->parsed()) return cmd_run(cfg, suite_glob, out_path, baseline_path, list_only);
        if (ev->parsed()) return cmd_eval(cfg, eval_N, eval_name, eval_args);
        if (bl->parsed()) return cmd_baseline(old_path, new_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
