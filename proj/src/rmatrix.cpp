#include "uqp/rmatrix.hpp"

#include "uqp/qspecial.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace uqp {

REntries rbar_entries(const QParams& P, const Real& u, const SVec& svec) {
    const int N = P.N;
    auto br = [&](const Real& x) { return bracket(P, Cplx(x)); };
    const Cplx bu = br(u);
    const Cplx bu1 = br(u + 1);
    const Cplx b_one = br(Real(1));

    REntries ent;
    for (int j = 1; j <= N; ++j) ent[{{j, j}, {j, j}}] = Cplx(Real(1));

    for (int j = 1; j <= N; ++j) {
        for (int l = j + 1; l <= N; ++l) {
            Real s(0);
            for (int m = j; m < l; ++m) s += svec.at(m);
            const Cplx bs = br(s);
            if (abs(bs) < Real("1e-30"))
                throw std::domain_error("rbar_entries: degenerate dynamical parameter, [s] ~ 0");
            ent[{{j, l}, {j, l}}] = br(s + 1) * br(s - 1) * bu / (bs * bs * bu1);
            ent[{{l, j}, {l, j}}] = bu / bu1;
            ent[{{j, l}, {l, j}}] = b_one * br(s + u) / (bs * bu1);
            ent[{{l, j}, {j, l}}] = b_one * br(s - u) / (bs * bu1);
        }
    }
    return ent;
}

SVec svec_shift(const QParams& P, const SVec& svec, int a, int eps) {
    SVec out = svec;
    for (int m = 1; m < P.N; ++m)
        out[m] += Real(eps * ((a == m ? 1 : 0) - (a == m + 1 ? 1 : 0)));
    return out;
}

namespace {

// entries grouped by input pair, for direct column assembly
using ByInput = std::map<std::pair<int, int>, std::vector<std::pair<std::pair<int, int>, Cplx>>>;

ByInput group_by_input(const REntries& ent) {
    ByInput g;
    for (const auto& [key, val] : ent) g[key.second].emplace_back(key.first, val);
    return g;
}

}  // namespace

SparseMat rmat3(const QParams& P, const Real& u, const SVec& svec, std::pair<int, int> slots,
                int shift_slot, int shift_eps) {
    const int N = P.N;
    const int dim = N * N * N;
    const auto [a_sl, b_sl] = slots;

    SparseMat M;
    M.dim = dim;
    M.cols.resize(dim);

    // The shifted dynamical parameter depends only on the state occupying the
    // spectator slot, so at most N+1 distinct entry tables are ever needed.
    std::map<int, ByInput> cache;
    auto table_for = [&](int spect) -> const ByInput& {
        auto it = cache.find(spect);
        if (it == cache.end()) {
            SVec sv = spect ? svec_shift(P, svec, spect, shift_eps) : svec;
            it = cache.emplace(spect, group_by_input(rbar_entries(P, u, sv))).first;
        }
        return it->second;
    };

    std::array<int, 3> t;
    auto idx = [&](const std::array<int, 3>& s) {
        return (s[0] - 1) * N * N + (s[1] - 1) * N + (s[2] - 1);
    };
    for (t[0] = 1; t[0] <= N; ++t[0])
        for (t[1] = 1; t[1] <= N; ++t[1])
            for (t[2] = 1; t[2] <= N; ++t[2]) {
                const ByInput& tab = table_for(shift_slot ? t[shift_slot - 1] : 0);
                const int col = idx(t);
                auto hit = tab.find({t[a_sl - 1], t[b_sl - 1]});
                if (hit == tab.end()) continue;
                for (const auto& [outp, val] : hit->second) {
                    std::array<int, 3> o = t;
                    o[a_sl - 1] = outp.first;
                    o[b_sl - 1] = outp.second;
                    M.cols[col].emplace_back(idx(o), val);
                }
            }
    return M;
}

SparseMat matmul(const SparseMat& A, const SparseMat& B) {
    if (A.dim != B.dim) throw std::invalid_argument("matmul: dimension mismatch");
    SparseMat C;
    C.dim = A.dim;
    C.cols.resize(C.dim);
    std::vector<Cplx> acc(C.dim);
    std::vector<char> used(C.dim);
    for (int j = 0; j < C.dim; ++j) {
        std::vector<int> touched;
        for (const auto& [k, b] : B.cols[j])
            for (const auto& [i, a] : A.cols[k]) {
                if (!used[i]) {
                    used[i] = 1;
                    acc[i] = Cplx(Real(0));
                    touched.push_back(i);
                }
                acc[i] += a * b;
            }
        for (int i : touched) {
            C.cols[j].emplace_back(i, acc[i]);
            used[i] = 0;
        }
    }
    return C;
}

Real dybe_residual(const QParams& P, const Real& u1, const Real& u2, const Real& u3,
                   const SVec& svec, int eps) {
    const Real u12 = u1 - u2, u13 = u1 - u3, u23 = u2 - u3;

    SparseMat lhs = matmul(matmul(rmat3(P, u12, svec, {1, 2}, 3, eps), rmat3(P, u13, svec, {1, 3})),
                           rmat3(P, u23, svec, {2, 3}, 1, eps));
    SparseMat rhs = matmul(matmul(rmat3(P, u23, svec, {2, 3}), rmat3(P, u13, svec, {1, 3}, 2, eps)),
                           rmat3(P, u12, svec, {1, 2}));

    const int dim = lhs.dim;
    std::vector<std::vector<Cplx>> dl(dim, std::vector<Cplx>(dim, Cplx(Real(0))));
    std::vector<std::vector<Cplx>> dr = dl;
    for (int j = 0; j < dim; ++j) {
        for (const auto& [i, v] : lhs.cols[j]) dl[i][j] += v;
        for (const auto& [i, v] : rhs.cols[j]) dr[i][j] += v;
    }
    Real max_diff(0), max_mag(0);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const Real d = abs(dl[i][j] - dr[i][j]);
            if (d > max_diff) max_diff = d;
            const Real m = abs(dl[i][j]) > abs(dr[i][j]) ? abs(dl[i][j]) : abs(dr[i][j]);
            if (m > max_mag) max_mag = m;
        }
    if (max_mag == 0) throw std::domain_error("dybe_residual: both products vanish");
    return max_diff / max_mag;
}

}  // namespace uqp
