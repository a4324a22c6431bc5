// Dynamical R-matrix suites: the u = 0 permutation initial condition, weight
// conservation of the entry support, and the shifted Yang-Baxter cocycle on
// three tensor slots (with a wrong-shift negative control).

#include "uqp/report.hpp"
#include "uqp/rmatrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace uqp {
namespace {

QParams params_for(const RunConfig& cfg, int N) { return QParams(cfg.q, cfg.r, N, cfg.c); }

std::string ntag(int N) { return " N=" + std::to_string(N); }

SVec random_svec(int N, Rng& rng) {
    SVec s;
    for (int m = 1; m < N; ++m) s[m] = Real("1.5") + Real(2) * rng.uniform();
    return s;
}

void rmat_init(const RunConfig& cfg, SuiteResult& sr) {
    for (int N : suite_Ns(cfg, {2, 3})) {
        const QParams P = params_for(cfg, N);
        Rng rng(derive_seed(cfg.seed, sr.suite) + static_cast<std::uint64_t>(N));
        const SVec svec = random_svec(N, rng);
        P.reset_tail();
        const REntries entries = rbar_entries(P, Real(0), svec);
        Real mx(0);
        for (const auto& [key, val] : entries) {
            const auto& [out, in] = key;
            const bool swapped = out.first == in.second && out.second == in.first;
            const Real d = abs(val - Real(swapped ? 1 : 0));
            if (d > mx) mx = d;
        }
        sr.check("permutation_at_zero" + ntag(N), mx, Real("1e-25"), P.tail);
    }
}

void rmat_weights(const RunConfig& cfg, SuiteResult& sr) {
    for (int N : suite_Ns(cfg, {2, 3})) {
        const QParams P = params_for(cfg, N);
        Rng rng(derive_seed(cfg.seed, sr.suite) + static_cast<std::uint64_t>(N));
        const SVec svec = random_svec(N, rng);
        const REntries entries = rbar_entries(P, Real("0.3"), svec);

        const std::size_t want = static_cast<std::size_t>(2 * N * N - N);
        sr.check_flag("entry_count" + ntag(N), entries.size() == want,
                      std::to_string(entries.size()) + " nonzero entries, expected " +
                          std::to_string(want));

        bool conserved = true;
        for (const auto& [key, val] : entries) {
            const auto& [out, in] = key;
            if (std::minmax(out.first, out.second) != std::minmax(in.first, in.second))
                conserved = false;
        }
        sr.check_flag("weight_conservation" + ntag(N), conserved,
                      "every entry preserves the unordered pair of tensor indices");
    }
}

void rmat_dybe(const RunConfig& cfg, SuiteResult& sr) {
    const int draws = std::max(50, cfg.samples / 2);
    for (int N : suite_Ns(cfg, {2, 3})) {
        const QParams P = params_for(cfg, N);
        Rng rng(derive_seed(cfg.seed, sr.suite) + static_cast<std::uint64_t>(N));
        P.reset_tail();
        Real mx(0);
        for (int d = 0; d < draws; ++d) {
            const Real u1 = Real("0.1") + Real("0.8") * rng.uniform();
            const Real u2 = Real("0.1") + Real("0.8") * rng.uniform();
            const Real u3 = Real("0.1") + Real("0.8") * rng.uniform();
            const SVec svec = random_svec(N, rng);
            const Real resid = dybe_residual(P, u1, u2, u3, svec, 1);
            if (resid > mx) mx = resid;
        }
        sr.check("cocycle" + ntag(N), mx, Real("1e-25"), P.tail,
                 std::to_string(draws) + " random spectral/dynamical draws");

        // flipping the sign of the spectator shift must break the equation
        Real mx_wrong(0);
        for (int d = 0; d < 3; ++d) {
            const Real u1 = Real("0.1") + Real("0.8") * rng.uniform();
            const Real u2 = Real("0.1") + Real("0.8") * rng.uniform();
            const Real u3 = Real("0.1") + Real("0.8") * rng.uniform();
            const SVec svec = random_svec(N, rng);
            const Real resid = dybe_residual(P, u1, u2, u3, svec, -1);
            if (resid > mx_wrong) mx_wrong = resid;
        }
        sr.check_flag("wrong_shift_detected" + ntag(N), mx_wrong > Real("1e-8"),
                      "wrong-sign shift residual " + sci(mx_wrong) + " (expected nonzero)");
    }
}

}  // namespace

void register_rmat_suites() {
    register_suite("rmat.init", rmat_init);
    register_suite("rmat.weights", rmat_weights);
    register_suite("rmat.dybe", rmat_dybe);
}

}  // namespace uqp
