#include "uqp/zeromode.hpp"

#include <stdexcept>

namespace uqp {

namespace {

// log of the base of a power factor, at running argument v
Cplx lbase(const QParams& P, const PowFactor& f, const Cplx& v) {
    Cplx lb = f.sigma * P.L;
    if (f.zslot) lb += Real(2) * v * P.L;
    return lb;
}

Real inner_ee(const QParams& P, int j, int k) {
    return Real(j == k ? 1 : 0) - Real(1) / P.N;
}

// <ebar_j, alpha_k>, j in 0..N-1, k in 0..N-2
Real inner_e_alpha(int j, int k) {
    return Real((j == k + 1 ? 1 : 0) - (j == k ? 1 : 0));
}

int cls(const ZFactor& f) { return static_cast<int>(f.index()); }  // lat=0, Q=1, pow=2

}  // namespace

LatFactor make_lat(const QParams& P, std::vector<Rat> alpha, std::vector<Rat> eta) {
    if (static_cast<int>(alpha.size()) != P.N - 1)
        throw std::invalid_argument("lattice factor: need N-1 root coordinates");
    if (static_cast<int>(eta.size()) != P.N)
        throw std::invalid_argument("lattice factor: need N eta coordinates");
    Rat s(0);
    for (const Rat& e : eta) s += e;
    if (s != Rat(0)) throw std::invalid_argument("lattice factor: eta part must sum to zero");
    return {std::move(alpha), std::move(eta)};
}

QFactor make_qf(const QParams& P, std::vector<Rat> m) {
    if (static_cast<int>(m.size()) != P.N)
        throw std::invalid_argument("Q factor: need N coordinates");
    return {std::move(m)};
}

PowFactor make_pow(const QParams& P, int zslot, const Cplx& sigma, std::vector<Real> lP,
                   std::vector<Real> lh, const Real& lc) {
    const std::size_t N = static_cast<std::size_t>(P.N);
    if (lP.empty()) lP.assign(N, Real(0));
    if (lh.empty()) lh.assign(N, Real(0));
    if (lP.size() != N || lh.size() != N)
        throw std::invalid_argument("power factor: P/h coefficient vectors must have N entries");
    return {zslot, sigma, std::move(lP), std::move(lh), lc};
}

Cplx CommScalar::eval(const QParams& P) const {
    Cplx out(Real(0), pi_real() * P.rat(pi_mult));
    out += P.rat(over_r) / P.r * P.L;
    out += P.rat(r_diff) * (1 / P.r - 1 / P.rs) * P.L;
    out += rest;
    return out;
}

CommScalar commutator_scalar(const QParams& P, const ZFactor& A, const ZFactor& B,
                             const Cplx& va, const Cplx& vb) {
    const int N = P.N;
    CommScalar out;
    const auto* la = std::get_if<LatFactor>(&A);
    const auto* lb_ = std::get_if<LatFactor>(&B);
    const auto* qa = std::get_if<QFactor>(&A);
    const auto* qb = std::get_if<QFactor>(&B);
    const auto* pa = std::get_if<PowFactor>(&A);
    const auto* pb = std::get_if<PowFactor>(&B);

    if (la && lb_) {
        // antisymmetrized two-cocycle on the root lattice: agrees with
        // pi*i*A_jk mod 2 pi*i on integer points and makes the self-exchange
        // of any single lattice exponential trivial (needed for the
        // fractional weight-lattice currents)
        Rat s(0);
        for (int j = 0; j < N - 1; ++j)
            for (int k = 0; k < N - 1; ++k) {
                const int Ajk = (j == k) ? 2 : ((j - k == 1 || k - j == 1) ? -1 : 0);
                s += la->alpha[j] * lb_->alpha[k] * Rat(Ajk * sgn(k - j));
            }
        out.pi_mult = s;
        Rat t(0);
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) t += la->eta[j] * lb_->eta[k] * Rat(sgn(j - k));
        out.over_r = t;
    } else if (la && qb) {
        Rat t(0);
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) t += la->eta[j] * qb->m[k] * Rat(sgn(j - k));
        out.over_r = t;
    } else if (qa && lb_) {
        Rat t(0);
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) t += qa->m[j] * lb_->eta[k] * Rat(sgn(j - k));
        out.over_r = t;
    } else if (qa && qb) {
        Rat t(0);
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) t += qa->m[j] * qb->m[k] * Rat(sgn(j - k));
        out.r_diff = t;
    } else if (pa && lb_) {
        const Cplx lb = lbase(P, *pa, va);
        Real s(0);
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N - 1; ++k)
                s += pa->lh[j] * P.rat(lb_->alpha[k]) * inner_e_alpha(j, k);
        out.rest += lb * s;
    } else if (la && pb) {
        const Cplx lb = lbase(P, *pb, vb);
        Real s(0);
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N - 1; ++k)
                s += pb->lh[j] * P.rat(la->alpha[k]) * inner_e_alpha(j, k);
        out.rest -= lb * s;
    } else if (pa && qb) {
        const Cplx lb = lbase(P, *pa, va);
        Real s(0);
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) s += pa->lP[j] * P.rat(qb->m[k]) * inner_ee(P, j, k);
        out.rest += lb * s;
    } else if (qa && pb) {
        const Cplx lb = lbase(P, *pb, vb);
        Real s(0);
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) s += pb->lP[j] * P.rat(qa->m[k]) * inner_ee(P, j, k);
        out.rest -= lb * s;
    }
    // pow-pow commutators vanish
    return out;
}

Cplx exchange_factor(const QParams& P, const ZeroModeWord& X, const ZeroModeWord& Y,
                     const Cplx& v1, const Cplx& v2) {
    Cplx tot(Real(0), Real(0));
    for (const ZFactor& A : X.factors)
        for (const ZFactor& B : Y.factors) tot += commutator_scalar(P, A, B, v1, v2).eval(P);
    return exp(tot);
}

ZeroModeWord word_inverse(const QParams& P, const ZeroModeWord& w) {
    (void)P;
    ZeroModeWord out;
    out.scalar = Cplx(Real(1), Real(0)) / w.scalar;
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
        if (const auto* l = std::get_if<LatFactor>(&*it)) {
            LatFactor f = *l;
            for (auto& a : f.alpha) a = -a;
            for (auto& e : f.eta) e = -e;
            out.factors.emplace_back(std::move(f));
        } else if (const auto* qf = std::get_if<QFactor>(&*it)) {
            QFactor f = *qf;
            for (auto& m : f.m) m = -m;
            out.factors.emplace_back(std::move(f));
        } else {
            PowFactor f = std::get<PowFactor>(*it);
            for (auto& x : f.lP) x = -x;
            for (auto& x : f.lh) x = -x;
            f.lc = -f.lc;
            out.factors.emplace_back(std::move(f));
        }
    }
    return out;
}

ZeroModeWord absorb_argument(const QParams& P, const ZeroModeWord& w, const Cplx& v) {
    (void)P;
    ZeroModeWord out;
    out.scalar = w.scalar;
    for (const ZFactor& f : w.factors) {
        if (const auto* pf = std::get_if<PowFactor>(&f); pf && pf->zslot == 1) {
            PowFactor g = *pf;
            g.zslot = 0;
            g.sigma = pf->sigma + Real(2) * v;
            out.factors.emplace_back(std::move(g));
        } else {
            out.factors.push_back(f);
        }
    }
    return out;
}

ZeroModeWord word_concat(const ZeroModeWord& a, const ZeroModeWord& b) {
    ZeroModeWord out;
    out.factors = a.factors;
    out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
    out.scalar = a.scalar * b.scalar;
    return out;
}

WordSignature normal_form(const QParams& P, const ZeroModeWord& w, const Cplx& v) {
    const int N = P.N;
    WordSignature sig;
    sig.alpha.assign(static_cast<std::size_t>(N - 1), Rat(0));
    sig.eta.assign(static_cast<std::size_t>(N), Rat(0));
    sig.qm.assign(static_cast<std::size_t>(N), Rat(0));
    sig.Psig.assign(static_cast<std::size_t>(N), Cplx(Real(0), Real(0)));
    sig.hsig.assign(static_cast<std::size_t>(N), Cplx(Real(0), Real(0)));
    sig.scalar = w.scalar;

    // bring the word to class order lat < Q < pow, collecting reorder scalars
    std::vector<ZFactor> facs = w.factors;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < facs.size(); ++i) {
            if (cls(facs[i]) > cls(facs[i + 1])) {
                sig.scalar *= exp(commutator_scalar(P, facs[i], facs[i + 1], v, v).eval(P));
                std::swap(facs[i], facs[i + 1]);
                changed = true;
            }
        }
    }
    // fold same-class factors; merging exponentials costs half a commutator
    for (const ZFactor& f : facs) {
        if (const auto* l = std::get_if<LatFactor>(&f)) {
            LatFactor cur{sig.alpha, sig.eta};
            sig.scalar *= exp(commutator_scalar(P, ZFactor(cur), f, v, v).eval(P) / Real(2));
            for (int j = 0; j < N - 1; ++j) sig.alpha[j] += l->alpha[j];
            for (int j = 0; j < N; ++j) sig.eta[j] += l->eta[j];
        } else if (const auto* qf = std::get_if<QFactor>(&f)) {
            QFactor cur{sig.qm};
            sig.scalar *= exp(commutator_scalar(P, ZFactor(cur), f, v, v).eval(P) / Real(2));
            for (int j = 0; j < N; ++j) sig.qm[j] += qf->m[j];
        } else {
            const PowFactor& pf = std::get<PowFactor>(f);
            const Cplx lb = lbase(P, pf, v);
            for (int j = 0; j < N; ++j) {
                sig.Psig[j] += pf.lP[j] * lb;
                sig.hsig[j] += pf.lh[j] * lb;
            }
            sig.cpow += pf.lc * lb;
        }
    }
    return sig;
}

Real signature_residual(const QParams& P, const WordSignature& s1, const WordSignature& s2) {
    if (s1.alpha != s2.alpha || s1.eta != s2.eta || s1.qm != s2.qm) return Real(1);
    Real res(0);
    for (int j = 0; j < P.N; ++j) {
        res = std::max(res, abs(s1.Psig[j] - s2.Psig[j]));
        res = std::max(res, abs(s1.hsig[j] - s2.hsig[j]));
    }
    res = std::max(res, abs(s1.cpow - s2.cpow));
    res = std::max(res, abs(s1.scalar / s2.scalar - Cplx(Real(1), Real(0))));
    return res;
}

}  // namespace uqp
