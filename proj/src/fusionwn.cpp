#include "uqp/fusionwn.hpp"

#include "uqp/qspecial.hpp"

#include <stdexcept>
#include <string>

namespace uqp {

FusedCurrent build_Ttilde(const QParams& P, int n) {
    if (n < 1 || n > P.N)
        throw std::out_of_range("build_Ttilde: fusion level " + std::to_string(n) +
                                " out of range 1.." + std::to_string(P.N));
    FusedCurrent T;
    T.n = n;

    std::vector<ExpPair> ladder(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) ladder[static_cast<std::size_t>(t)] = ExpPair{Rat(0), Rat(n - 1 - 2 * t)};

    // enumerate strictly increasing index tuples in lexicographic order
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) idx[static_cast<std::size_t>(t)] = t + 1;
    while (true) {
        T.terms.push_back(FusedTerm{idx, ladder});
        int t = n - 1;
        while (t >= 0 && idx[static_cast<std::size_t>(t)] == P.N - (n - 1 - t)) --t;
        if (t < 0) break;
        ++idx[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < n; ++u)
            idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
    }
    return T;
}

OscProfile fused_osc_profile(const QParams& P, const FusedTerm& term) {
    OscProfile prof;
    for (std::size_t t = 0; t < term.indices.size(); ++t) {
        const Cplx sig(P.rat(term.ladder[t].a) + P.rat(term.ladder[t].b) * P.rs, Real(0));
        prof.push_back(OscTerm{term.indices[t], OscKind::ThetaDiff, sig, Real(1)});
    }
    return prof;
}

ZeroModeWord fused_word(const QParams& P, const FusedTerm& term) {
    ZeroModeWord w;
    for (int j : term.indices) w = word_concat(w, current_Lambda(P, j).word);
    return w;
}

Cplx smatrix_factor(const QParams& P, int n, int m, const Cplx& z) {
    Cplx tot(Real(1), Real(0));
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= m; ++l)
            tot *= phi_N(P, z * P.qp(P.rs * (n - m + 2 * (l - k))));
    return tot;
}

}  // namespace uqp
