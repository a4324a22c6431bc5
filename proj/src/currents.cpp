#include "uqp/currents.hpp"

#include <stdexcept>

namespace uqp {

namespace {

void require_range(int j, int lo, int hi, const char* who) {
    if (j < lo || j > hi)
        throw std::out_of_range(std::string(who) + ": index outside its family range");
}

// lattice coordinates of the simple-root exponential: alpha_j unit vector
// plus the sum-zero eta part of the corresponding orthogonal-basis combination
void alpha_hat_vectors(const QParams& P, int j, std::vector<Rat>& avec, std::vector<Rat>& evec) {
    avec.assign(static_cast<std::size_t>(P.N - 1), Rat(0));
    avec[static_cast<std::size_t>(j - 1)] = Rat(1);
    evec.assign(static_cast<std::size_t>(P.N), Rat(0));
    evec[static_cast<std::size_t>(j - 1)] = Rat(-1);
    evec[static_cast<std::size_t>(j)] = Rat(1);
}

std::vector<Real> unit_vec(int N, int idx0, const Real& val) {
    std::vector<Real> v(static_cast<std::size_t>(N), Real(0));
    v[static_cast<std::size_t>(idx0)] = val;
    return v;
}

}  // namespace

OscProfile osc_k_difference(const QParams& P, int j, const Cplx& sigma) {
    require_range(j, 1, P.N - 1, "osc_k_difference");
    return {OscTerm{j, OscKind::OneRatio, sigma, Real(1)},
            OscTerm{j + 1, OscKind::OneRatio, sigma, Real(-1)}};
}

VertexDescriptor current_E(const QParams& P, int j) {
    require_range(j, 1, P.N - 1, "current_E");
    const int N = P.N;
    VertexDescriptor d;
    d.name = "E" + std::to_string(j);

    const ExpPair sh = P.sl_int(-(N - j));
    const SMap num = sshift(brm(P.sl_r), sh);
    d.sym[j] = SymRow{num, {P.sl_rs}, 1};
    d.sym[j + 1] = SymRow{sneg(num), {P.sl_rs}, 1};

    const Cplx sig(Real(N - j), Real(0));
    d.osc = {OscTerm{j, OscKind::RRatio, sig, Real(1)},
             OscTerm{j + 1, OscKind::RRatio, sig, Real(-1)}};

    std::vector<Rat> avec, evec;
    alpha_hat_vectors(P, j, avec, evec);
    std::vector<Rat> mvec(static_cast<std::size_t>(N), Rat(0));  // -Q_{alpha_j}
    mvec[static_cast<std::size_t>(j - 1)] = Rat(1);
    mvec[static_cast<std::size_t>(j)] = Rat(-1);
    std::vector<Real> lh(static_cast<std::size_t>(N), Real(0));  // z^{h_j}
    lh[static_cast<std::size_t>(j - 1)] = Real(-1);
    lh[static_cast<std::size_t>(j)] = Real(1);
    std::vector<Real> lP(static_cast<std::size_t>(N), Real(0));  // -(P_{alpha_j}-1)/rstar
    lP[static_cast<std::size_t>(j - 1)] = 1 / P.rs;
    lP[static_cast<std::size_t>(j)] = -1 / P.rs;
    d.word.factors = {make_lat(P, avec, evec), make_pow(P, 1, Cplx(Real(0), Real(0)), {}, lh),
                      make_qf(P, mvec),
                      make_pow(P, 1, Cplx(Real(N - j), Real(0)), lP, {}, 1 / P.rs)};
    return d;
}

VertexDescriptor current_F(const QParams& P, int j) {
    require_range(j, 1, P.N - 1, "current_F");
    const int N = P.N;
    VertexDescriptor d;
    d.name = "F" + std::to_string(j);

    const ExpPair sh = P.sl_int(-(N - j));
    const SMap num = sshift(sconst(), sh);
    d.sym[j] = SymRow{sneg(num), {}, 1};
    d.sym[j + 1] = SymRow{num, {}, 1};

    const Cplx sig(Real(N - j), Real(0));
    d.osc = {OscTerm{j, OscKind::InvM, sig, Real(-1)},
             OscTerm{j + 1, OscKind::InvM, sig, Real(1)}};

    std::vector<Rat> avec, evec;
    alpha_hat_vectors(P, j, avec, evec);
    for (auto& a : avec) a = -a;
    for (auto& e : evec) e = -e;
    std::vector<Real> lh(static_cast<std::size_t>(N), Real(0));  // z^{-h_j}
    lh[static_cast<std::size_t>(j - 1)] = Real(1);
    lh[static_cast<std::size_t>(j)] = Real(-1);
    std::vector<Real> lP(static_cast<std::size_t>(N), Real(0));  // (P_{alpha_j}-1)/r
    lP[static_cast<std::size_t>(j - 1)] = -1 / P.r;
    lP[static_cast<std::size_t>(j)] = 1 / P.r;
    std::vector<Real> lh2(static_cast<std::size_t>(N), Real(0));  // + h_j/r
    lh2[static_cast<std::size_t>(j - 1)] = -1 / P.r;
    lh2[static_cast<std::size_t>(j)] = 1 / P.r;
    d.word.factors = {make_lat(P, avec, evec), make_pow(P, 1, Cplx(Real(0), Real(0)), {}, lh),
                      make_pow(P, 1, Cplx(Real(N - j), Real(0)), lP, lh2, -1 / P.r)};
    return d;
}

VertexDescriptor current_K(const QParams& P, int j) {
    require_range(j, 1, P.N, "current_K");
    const int N = P.N;
    VertexDescriptor d;
    d.name = "K" + std::to_string(j);

    d.sym[j] = SymRow{brm(P.sl_int(1)), {P.sl_rs}, 1};
    d.osc = {OscTerm{j, OscKind::OneRatio, Cplx(Real(0), Real(0)), Real(1)}};

    std::vector<Rat> mvec(static_cast<std::size_t>(N), Rat(0));
    mvec[static_cast<std::size_t>(j - 1)] = Rat(1);
    const Real lc = (1 / P.rs - 1 / P.r) * (N - 1) / (2 * N);
    d.word.factors = {make_qf(P, mvec),
                      make_pow(P, 1, Cplx(Real(0), Real(0)),
                               unit_vec(N, j - 1, 1 / P.rs - 1 / P.r),
                               unit_vec(N, j - 1, -1 / P.r), lc)};
    return d;
}

VertexDescriptor current_H(const QParams& P, int j, int pm) {
    require_range(j, 1, P.N - 1, "current_H");
    if (pm != 1 && pm != -1) throw std::invalid_argument("current_H: pm must be +1 or -1");
    const int N = P.N;
    VertexDescriptor d;
    d.name = std::string("H") + std::to_string(j) + (pm > 0 ? "+" : "-");

    // argument shift q^{N-j+pm(r-c/2)}; exactly (N-j+pm c/2) + pm rstar
    const ExpPair sig_exact{Rat(N - j) + Rat(pm) * Rat(P.c_int, 2), Rat(pm)};
    const SMap num = sshift(brm(P.sl_int(1)), eneg(sig_exact));
    d.sym[j] = SymRow{num, {P.sl_rs}, 1};
    d.sym[j + 1] = SymRow{sneg(num), {P.sl_rs}, 1};

    const Cplx sig(Real(N - j) + pm * (P.r - P.c / 2), Real(0));
    d.osc = osc_k_difference(P, j, sig);

    std::vector<Rat> mvec(static_cast<std::size_t>(N), Rat(0));
    mvec[static_cast<std::size_t>(j - 1)] = Rat(1);
    mvec[static_cast<std::size_t>(j)] = Rat(-1);
    std::vector<Real> lP(static_cast<std::size_t>(N), Real(0));
    lP[static_cast<std::size_t>(j - 1)] = -(1 / P.r - 1 / P.rs);
    lP[static_cast<std::size_t>(j)] = (1 / P.r - 1 / P.rs);
    std::vector<Real> lh(static_cast<std::size_t>(N), Real(0));
    lh[static_cast<std::size_t>(j - 1)] = -1 / P.r;
    lh[static_cast<std::size_t>(j)] = 1 / P.r;
    d.word.factors = {make_qf(P, mvec),
                      make_pow(P, 1, Cplx(Real(N - j) + pm * (P.r - P.c / 2), Real(0)), lP, lh,
                               -(1 / P.r - 1 / P.rs))};
    return d;
}

VertexDescriptor current_PsiN(const QParams& P) {
    const int N = P.N;
    VertexDescriptor d;
    d.name = "PsiN";

    d.sym[N] = SymRow{brm(P.sl_r), {P.sl_rs}, 1};
    d.osc = {OscTerm{N, OscKind::RRatio, Cplx(Real(0), Real(0)), Real(1)}};

    // minus the (N-1)-th fundamental weight in lattice coordinates
    std::vector<Rat> avec(static_cast<std::size_t>(N - 1));
    for (int k = 1; k <= N - 1; ++k) avec[static_cast<std::size_t>(k - 1)] = Rat(-k, N);
    std::vector<Rat> evec(static_cast<std::size_t>(N), Rat(0));
    for (int jj = 1; jj <= N - 1; ++jj) {
        evec[static_cast<std::size_t>(jj - 1)] += Rat(jj, N);
        evec[static_cast<std::size_t>(jj)] += Rat(-jj, N);
    }
    std::vector<Rat> mvec(static_cast<std::size_t>(N), Rat(0));  // +Q_{ebar_N}
    mvec[static_cast<std::size_t>(N - 1)] = Rat(1);
    const Real lc = (1 + 1 / P.rs) * (N - 1) / (2 * N);
    d.word.factors = {make_lat(P, avec, evec),
                      make_pow(P, 1, Cplx(Real(0), Real(0)), {}, unit_vec(N, N - 1, Real(-1))),
                      make_qf(P, mvec),
                      make_pow(P, 1, Cplx(Real(0), Real(0)), unit_vec(N, N - 1, 1 / P.rs), {}, lc)};
    return d;
}

VertexDescriptor current_Psi1(const QParams& P) {
    const int N = P.N;
    VertexDescriptor d;
    d.name = "Psi1";

    d.sym[1] = SymRow{sneg(sshift(brm(P.sl_r), P.sl_int(-N))), {P.sl_rs}, 1};
    d.osc = {OscTerm{1, OscKind::RRatio, Cplx(Real(N), Real(0)), Real(-1)}};

    // plus the first fundamental weight
    std::vector<Rat> avec(static_cast<std::size_t>(N - 1));
    for (int k = 1; k <= N - 1; ++k) avec[static_cast<std::size_t>(k - 1)] = Rat(N - k, N);
    std::vector<Rat> evec(static_cast<std::size_t>(N), Rat(0));
    for (int jj = 1; jj <= N - 1; ++jj) {
        evec[static_cast<std::size_t>(jj - 1)] += Rat(-(N - jj), N);
        evec[static_cast<std::size_t>(jj)] += Rat(N - jj, N);
    }
    std::vector<Rat> mvec(static_cast<std::size_t>(N), Rat(0));  // -Q_{ebar_1}
    mvec[0] = Rat(-1);
    d.word.factors = {make_lat(P, avec, evec),
                      make_pow(P, 1, Cplx(Real(0), Real(0)), {}, unit_vec(N, 0, Real(1))),
                      make_qf(P, mvec),
                      make_pow(P, 1, Cplx(Real(N), Real(0)), unit_vec(N, 0, -1 / P.rs), {},
                               Real(N - 1) / (2 * N * P.rs)),
                      make_pow(P, 1, Cplx(Real(0), Real(0)), {}, {}, Real(N - 1) / (2 * N))};
    return d;
}

VertexDescriptor current_Lambda(const QParams& P, int j) {
    require_range(j, 1, P.N, "current_Lambda");
    const int N = P.N;
    VertexDescriptor d;
    d.name = "Lam" + std::to_string(j);

    d.sym[j] = SymRow{brm(P.sl_r), {}, 1};
    d.osc = {OscTerm{j, OscKind::ThetaDiff, Cplx(Real(0), Real(0)), Real(1)}};

    // zero modes: q^{-2 P_{ebar_j}} pstar^{h_{ebar_j}} and the printed
    // constant; pstar^{h} is encoded as base q (sigma = 1) with an h
    // coefficient of 2 rstar
    d.word.factors = {make_pow(P, 0, Cplx(Real(1), Real(0)), unit_vec(N, j - 1, Real(-2)),
                               unit_vec(N, j - 1, 2 * P.rs))};
    d.word.scalar = Cplx(
        exp((Real(2 * (1 - N)) / N) * P.L + (2 * P.rs) * (Real(-1) / N - j) * P.L), Real(0));
    return d;
}

}  // namespace uqp
