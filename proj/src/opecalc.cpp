#include "uqp/opecalc.hpp"

#include "uqp/modealg.hpp"
#include "uqp/qspecial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace uqp {

namespace {

const Cplx kOne(Real(1), Real(0));

Rat rat_abs(const Rat& x) { return x < Rat(0) ? -x : x; }

// mode-commutator template [B^j_m, B^k_{-m}] as an exact Laurent map:
//   num = (q^{rstar m}-q^{-rstar m})(q^{cm}-q^{-cm}) * tailpiece(j,k)
//   den slopes = (r, 1, N), one net power of m in the numerator (mpow = -1)
void bc_template(const QParams& P, int j, int k, SMap& num, std::vector<ExpPair>& den,
                 int& mpow) {
    num = smul(brm(P.sl_rs), brm(P.sl_c));
    if (j == k) {
        num = smul(num, brm(P.sl_int(P.N - 1)));
    } else {
        num = smul(num, sneg(sshift(brm(P.sl_int(1)), P.sl_int(-P.N * sgn(j - k)))));
    }
    den = {P.sl_r, P.sl_int(1), P.sl_int(P.N)};
    mpow = -1;
}

struct PFKeyLess {
    bool operator()(const std::pair<ExpPair, std::vector<ExpPair>>& x,
                    const std::pair<ExpPair, std::vector<ExpPair>>& y) const {
        ExpKeyLess lt;
        if (lt(x.first, y.first)) return true;
        if (lt(y.first, x.first)) return false;
        return exp_vec_less(x.second, y.second);
    }
};

ZeroModeWord word_shift_argument(const ZeroModeWord& w, const Cplx& sigma) {
    ZeroModeWord out;
    out.scalar = w.scalar;
    for (const ZFactor& f : w.factors) {
        if (const auto* pf = std::get_if<PowFactor>(&f); pf && pf->zslot == 1) {
            PowFactor g = *pf;
            g.sigma = pf->sigma + sigma;
            out.factors.emplace_back(std::move(g));
        } else {
            out.factors.push_back(f);
        }
    }
    return out;
}

}  // namespace

// ---- exact Laurent maps -----------------------------------------------------

SMap sadd(const SMap& A, const SMap& B) {
    SMap C = A;
    for (const auto& [e, c] : B) {
        const Rat v = (C.count(e) ? C[e] : Rat(0)) + c;
        if (v != Rat(0))
            C[e] = v;
        else
            C.erase(e);
    }
    return C;
}

SMap smul(const SMap& A, const SMap& B) {
    SMap C;
    for (const auto& [e1, c1] : A)
        for (const auto& [e2, c2] : B) {
            const ExpPair e = eadd(e1, e2);
            const Rat v = (C.count(e) ? C[e] : Rat(0)) + c1 * c2;
            if (v != Rat(0))
                C[e] = v;
            else
                C.erase(e);
        }
    return C;
}

SMap sshift(const SMap& A, const ExpPair& e0) {
    SMap C;
    for (const auto& [e, c] : A) C[eadd(e, e0)] = c;
    return C;
}

SMap sneg(const SMap& A) {
    SMap C;
    for (const auto& [e, c] : A) C[e] = -c;
    return C;
}

SMap sconst(const Rat& c, const ExpPair& e) { return SMap{{e, c}}; }

SMap brm(const ExpPair& b) { return SMap{{b, Rat(1)}, {eneg(b), Rat(-1)}}; }

SMap subst_negm(const SMap& A) {
    SMap C;
    for (const auto& [e, c] : A) C[eneg(e)] = c;
    return C;
}

bool sdiv(const SMap& num, const ExpPair& b, SMap& quotient) {
    SMap n = num;
    SMap q;
    long cap = 10 * static_cast<long>(num.size()) + 200;
    while (!n.empty()) {
        if (--cap < 0) return false;
        // peel the largest surviving exponent (map is ordered by the key)
        const ExpPair e = n.rbegin()->first;
        const Rat c = n.rbegin()->second;
        const ExpPair qe = esub(e, b);
        q[qe] += c;
        if (q[qe] == Rat(0)) q.erase(qe);
        for (const auto& [ee, cc] : {std::pair<ExpPair, Rat>{e, -c},
                                     std::pair<ExpPair, Rat>{esub(qe, b), c}}) {
            const Rat v = (n.count(ee) ? n[ee] : Rat(0)) + cc;
            if (v != Rat(0))
                n[ee] = v;
            else
                n.erase(ee);
        }
    }
    quotient = std::move(q);
    return true;
}

// ---- profiles ---------------------------------------------------------------

SymProfile sym_scale(const SymProfile& prof, const Rat& f) {
    SymProfile out;
    for (const auto& [j, row] : prof) {
        SMap num;
        for (const auto& [e, c] : row.num) num[e] = c * f;
        out[j] = SymRow{std::move(num), row.den, row.mpow};
    }
    return out;
}

OscProfile osc_shift(const OscProfile& prof, const Cplx& sigma) {
    OscProfile out = prof;
    for (auto& t : out) t.sigma += sigma;
    return out;
}

OscProfile osc_scale(const OscProfile& prof, const Real& f) {
    OscProfile out = prof;
    for (auto& t : out) t.scale *= f;
    return out;
}

OscProfile osc_concat(const OscProfile& a, const OscProfile& b) {
    OscProfile out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::map<int, Cplx> osc_coeffs(const QParams& P, const OscProfile& prof, long m) {
    if (m == 0) throw std::invalid_argument("osc_coeffs: mode index must be nonzero");
    std::map<int, Cplx> out;
    for (const OscTerm& t : prof) {
        Real core(0);
        switch (t.kind) {
            case OscKind::RRatio:
                core = qnum(P, P.r, m) / (Real(m) * qnum(P, P.rs, m));
                break;
            case OscKind::InvM:
                core = Real(1) / Real(m);
                break;
            case OscKind::OneRatio:
                core = qnum(P, Real(1), m) / (Real(m) * qnum(P, P.rs, m));
                break;
            case OscKind::ThetaDiff:
                core = (exp(P.r * m * P.L) - exp(-P.r * m * P.L)) / Real(m);
                break;
        }
        const Cplx v = (t.scale * core) * exp(-t.sigma * Real(m) * P.L);
        auto it = out.find(t.j);
        if (it == out.end())
            out.emplace(t.j, v);
        else
            it->second += v;
    }
    return out;
}

// ---- contraction ------------------------------------------------------------

GammaTemplate contraction_template(const QParams& P, const SymProfile& X, const SymProfile& Y) {
    SMap num_total;
    std::vector<ExpPair> den_ref;
    bool have_den = false;
    for (const auto& [j, rx] : X) {
        for (const auto& [k, ry] : Y) {
            SMap bn;
            std::vector<ExpPair> bd;
            int bm = 0;
            bc_template(P, j, k, bn, bd, bm);
            // substitute m -> -m in Y's coefficient; each denominator
            // difference and each 1/m flips sign under the substitution
            SMap nyn = subst_negm(ry.num);
            const int sign_flips = static_cast<int>(ry.den.size()) + ry.mpow;
            if (sign_flips % 2 != 0) nyn = sneg(nyn);
            SMap tn = smul(smul(rx.num, nyn), bn);
            std::vector<ExpPair> td = rx.den;
            td.insert(td.end(), ry.den.begin(), ry.den.end());
            td.insert(td.end(), bd.begin(), bd.end());
            std::sort(td.begin(), td.end(), ExpKeyLess{});
            const int tm = rx.mpow + ry.mpow + bm;
            if (tm != 1)
                throw std::logic_error("contraction_template: gamma_m must carry exactly 1/m");
            if (!have_den) {
                den_ref = td;
                have_den = true;
            } else if (td != den_ref) {
                throw std::logic_error("contraction_template: profiles must share a denominator");
            }
            num_total = sadd(num_total, tn);
        }
    }
    return {std::move(num_total), std::move(den_ref)};
}

Cplx contraction_coeff(const QParams& P, const OscProfile& X, const OscProfile& Y, long m) {
    const auto cx = osc_coeffs(P, X, m);
    const auto cy = osc_coeffs(P, Y, -m);
    Cplx t(Real(0), Real(0));
    for (const auto& [j, a] : cx)
        for (const auto& [k, b] : cy) t += a * b * B_commutator_value(P, j, k, m);
    return t;
}

TruncSeries log_contraction(const QParams& P, const OscProfile& X, const OscProfile& Y,
                            int order, const std::string& var) {
    TruncSeries s(var, order);
    for (long m = 1; m <= order; ++m) s[static_cast<int>(m)] = contraction_coeff(P, X, Y, m);
    return s;
}

Cplx contraction_series_sum(const QParams& P, const OscProfile& X, const OscProfile& Y,
                            const Cplx& x, int M) {
    Cplx s(Real(0), Real(0));
    Cplx xm = kOne;
    for (long m = 1; m <= M; ++m) {
        xm *= x;
        s += contraction_coeff(P, X, Y, m) * xm;
    }
    return s;
}

// ---- product forms ----------------------------------------------------------

ProductForm recognize_products(const QParams& P, const GammaTemplate& g) {
    std::map<std::pair<ExpPair, std::vector<ExpPair>>, Rat, PFKeyLess> out;
    std::vector<std::pair<SMap, std::vector<ExpPair>>> branches;
    branches.emplace_back(g.num, g.den);
    while (!branches.empty()) {
        auto [n, d] = std::move(branches.back());
        branches.pop_back();
        if (n.empty()) continue;
        // greedy exact divisions, largest slope first
        bool progress = true;
        while (progress) {
            progress = false;
            std::set<ExpPair, ExpKeyLess> uniq(d.begin(), d.end());
            for (auto it = uniq.rbegin(); it != uniq.rend(); ++it) {
                SMap qt;
                if (sdiv(n, *it, qt)) {
                    n = std::move(qt);
                    d.erase(std::find(d.begin(), d.end(), *it));
                    progress = !n.empty();
                    break;
                }
            }
        }
        if (n.empty()) continue;
        // partial fractions for a joint r, rstar denominator:
        //   1/([rm][rstar m]) = ( q^{(c-r)m}/[rstar m] - q^{-rm}/[rm] ) / [cm]
        const bool has_r = std::find(d.begin(), d.end(), P.sl_r) != d.end();
        const bool has_rs = std::find(d.begin(), d.end(), P.sl_rs) != d.end();
        if (has_r && has_rs) {
            std::vector<ExpPair> dA = d;
            dA.erase(std::find(dA.begin(), dA.end(), P.sl_r));
            dA.push_back(P.sl_c);
            SMap nA = sshift(n, esub(P.sl_c, P.sl_r));
            std::vector<ExpPair> dB = d;
            dB.erase(std::find(dB.begin(), dB.end(), P.sl_rs));
            dB.push_back(P.sl_c);
            SMap nB = sneg(sshift(n, eneg(P.sl_r)));
            branches.emplace_back(std::move(nA), std::move(dA));
            branches.emplace_back(std::move(nB), std::move(dB));
            continue;
        }
        // remaining slopes turn into product bases:
        //   1/(q^{bm} - q^{-bm}) = -q^{bm} / (1 - q^{2bm})
        std::vector<ExpPair> bases;
        for (const ExpPair& b : d) {
            n = sneg(sshift(n, b));
            bases.push_back(escale(b, Rat(2)));
        }
        std::sort(bases.begin(), bases.end(), ExpKeyLess{});
        for (const auto& [e, c] : n) {
            const auto key = std::make_pair(e, bases);
            out[key] += c;
            if (out[key] == Rat(0)) out.erase(key);
        }
    }
    ProductForm pf;
    pf.reserve(out.size());
    for (const auto& [key, c] : out) {
        for (const ExpPair& b : key.second) {
            if (!(P.qe(b) < 1))
                throw std::domain_error(
                    "recognize_products: denominator slope does not give a base in (0,1)");
        }
        pf.push_back(PFTerm{c, key.first, key.second});
    }
    return pf;
}

Cplx pf_eval(const QParams& P, const ProductForm& pf, const Cplx& x) {
    Cplx tot = kOne;
    for (const PFTerm& t : pf) {
        const Real a = P.qe(t.arg);
        std::vector<Real> bv;
        bv.reserve(t.bases.size());
        for (const ExpPair& b : t.bases) bv.push_back(P.qe(b));
        const PochResult r = pochhammer(P, a * x, bv);
        P.tail += P.rat(rat_abs(t.coef)) * r.bound;
        if (t.coef.denominator() == 1) {
            tot *= powi(r.value, -t.coef.numerator());
        } else {
            tot *= exp(-P.rat(t.coef) * log(r.value));
        }
    }
    return tot;
}

Cplx pf_eval_regularized(const QParams& P, const ProductForm& pf, const Cplx& x0) {
    Cplx tot = kOne;
    for (const PFTerm& t : pf) {
        const Real a = P.qe(t.arg);
        std::vector<Real> bv;
        bv.reserve(t.bases.size());
        for (const ExpPair& b : t.bases) bv.push_back(P.qe(b));
        const Cplx arg = a * x0;
        const bool at_one = abs(arg - kOne) < ldexp(Real(1), -60);
        if (bv.empty() && at_one) {
            if (t.coef != Rat(1))
                throw std::domain_error("pf_eval_regularized: vanishing factor has power != 1");
            continue;  // the dropped simple zero
        }
        const PochResult r = pochhammer(P, arg, bv, -1, !bv.empty() && at_one);
        P.tail += P.rat(rat_abs(t.coef)) * r.bound;
        if (t.coef.denominator() == 1) {
            tot *= powi(r.value, -t.coef.numerator());
        } else {
            tot *= exp(-P.rat(t.coef) * log(r.value));
        }
    }
    return tot;
}

std::map<ExpPair, Rat, ExpKeyLess> pf_singular_exponents(const QParams& P, const ProductForm& pf,
                                                         int depth) {
    (void)P;
    std::map<ExpPair, Rat, ExpKeyLess> locs;
    for (const PFTerm& t : pf) {
        const std::size_t k = t.bases.size();
        std::vector<int> ns(k, 0);
        while (true) {
            ExpPair shift = t.arg;
            for (std::size_t i = 0; i < k; ++i) shift = eadd(shift, escale(t.bases[i], Rat(ns[i])));
            const ExpPair x0 = eneg(shift);  // argument hits 1 at x = q^{x0}
            locs[x0] += -t.coef;             // factor^{-coef}: zero of order -coef
            if (locs[x0] == Rat(0)) locs.erase(x0);
            // advance the tuple counter
            std::size_t i = 0;
            for (; i < k; ++i) {
                if (++ns[i] < depth) break;
                ns[i] = 0;
            }
            if (i == k) break;  // all tuples done (immediately, for a bare factor)
        }
    }
    return locs;
}

Real pf_min_radius(const QParams& P, const ProductForm& pf) {
    Real r(0);
    bool first = true;
    for (const PFTerm& t : pf) {
        const Real cand = 1 / abs(P.qe(t.arg));
        if (first || cand < r) {
            r = cand;
            first = false;
        }
    }
    if (first) return Real(1);
    return r;
}

// ---- exchange ---------------------------------------------------------------

ExchangeFn::ExchangeFn(const QParams& P, const VertexDescriptor& X, const VertexDescriptor& Y)
    : P_(&P),
      txy_(recognize_products(P, contraction_template(P, X.sym, Y.sym))),
      tyx_(recognize_products(P, contraction_template(P, Y.sym, X.sym))),
      wx_(X.word),
      wy_(Y.word) {}

Cplx ExchangeFn::operator()(const Cplx& v1, const Cplx& v2) const {
    const QParams& P = *P_;
    const Cplx x = exp(Real(2) * (v2 - v1) * P.L);
    // X(z1) Y(z2) = e^{gammaXY(x)} :XY: wX wY ; Y(z2) X(z1) = e^{gammaYX(1/x)} :XY: wY wX
    const Cplx zf = exchange_factor(P, wx_, wy_, v1, v2);
    return pf_eval(P, txy_, x) / pf_eval(P, tyx_, kOne / x) * zf;
}

VertexDescriptor specialize_compose(const QParams& P, const VertexDescriptor& X,
                                    const VertexDescriptor& Y, const ExpPair& sigma_q) {
    const GammaTemplate g = contraction_template(P, X.sym, Y.sym);
    const ProductForm pf = recognize_products(P, g);
    const auto sing = pf_singular_exponents(P, pf);
    // composition puts z1 = q^{sigma} z2, i.e. x = z2/z1 = q^{-sigma}
    const ExpPair x0 = eneg(sigma_q);
    const auto it = sing.find(x0);
    const Rat order = (it == sing.end()) ? Rat(0) : it->second;
    if (order < Rat(-1))
        throw std::domain_error("specialize_compose: higher-order pole at the composition point");
    VertexDescriptor out;
    out.name = X.name + "*" + Y.name;
    // argument shift z1 -> q^{sigma} z2 multiplies mode-m coefficients by q^{-sigma m}
    const Cplx sig_val(P.rat(sigma_q.a) + P.rat(sigma_q.b) * P.rs, Real(0));
    for (const auto& [j, row] : X.sym) {
        SymRow shifted{sshift(row.num, eneg(sigma_q)), row.den, row.mpow};
        auto [pos, inserted] = out.sym.emplace(j, std::move(shifted));
        if (!inserted) throw std::logic_error("specialize_compose: duplicate oscillator row");
        (void)pos;
    }
    for (const auto& [j, row] : Y.sym) {
        auto it2 = out.sym.find(j);
        if (it2 == out.sym.end()) {
            out.sym.emplace(j, row);
        } else {
            if (it2->second.den != row.den || it2->second.mpow != row.mpow)
                throw std::domain_error("specialize_compose: incompatible row denominators");
            it2->second.num = sadd(it2->second.num, row.num);
        }
    }
    out.osc = osc_concat(osc_shift(X.osc, sig_val), Y.osc);
    out.word = word_concat(word_shift_argument(X.word, sig_val), Y.word);
    return out;
}

RelationOutcome compare_structure_function(
    const QParams& P, const std::function<Cplx(const Cplx&, const Cplx&)>& fn,
    const std::function<Cplx(const Cplx&, const Cplx&)>& target,
    const std::vector<std::pair<Cplx, Cplx>>& samples) {
    if (samples.empty())
        throw std::invalid_argument("compare_structure_function: no sample points");
    RelationOutcome out;
    for (const auto& [v1, v2] : samples) {
        P.reset_tail();
        const Cplx a = fn(v1, v2);
        const Cplx b = target(v1, v2);
        if (!(abs(b) > 0))
            throw std::domain_error("compare_structure_function: degenerate sample (target 0)");
        const Real resid = abs(a / b - kOne);
        if (resid > out.max_residual) out.max_residual = resid;
        if (P.tail > out.bound) out.bound = P.tail;
    }
    return out;
}

}  // namespace uqp
