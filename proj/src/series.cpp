#include "uqp/series.hpp"

#include <stdexcept>
#include <utility>

namespace uqp {

namespace {

void require_same_var(const TruncSeries& a, const TruncSeries& b, const char* op) {
    if (a.var() != b.var())
        throw std::invalid_argument(std::string(op) + ": series variable mismatch ('" + a.var() +
                                    "' vs '" + b.var() + "')");
}

}  // namespace

TruncSeries::TruncSeries(std::string var, int order) : var_(std::move(var)) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coeff_.assign(static_cast<std::size_t>(order) + 1, Cplx(Real(0), Real(0)));
}

TruncSeries TruncSeries::constant(std::string var, int order, const Cplx& c0) {
    TruncSeries s(std::move(var), order);
    s.coeff_[0] = c0;
    return s;
}

Cplx& TruncSeries::operator[](int k) {
    if (k < 0 || k > order()) throw std::out_of_range("series coefficient index out of range");
    return coeff_[static_cast<std::size_t>(k)];
}

const Cplx& TruncSeries::operator[](int k) const {
    if (k < 0 || k > order()) throw std::out_of_range("series coefficient index out of range");
    return coeff_[static_cast<std::size_t>(k)];
}

Cplx TruncSeries::eval(const Cplx& x) const {
    Cplx acc(Real(0), Real(0));
    for (int k = order(); k >= 0; --k) acc = acc * x + coeff_[static_cast<std::size_t>(k)];
    if (lead_ != 0) acc *= exp(Cplx(lead_, Real(0)) * log(x));
    return acc;
}

TruncSeries& TruncSeries::operator*=(const Cplx& s) {
    for (auto& c : coeff_) c *= s;
    return *this;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    require_same_var(a, b, "series add");
    if (a.lead() != b.lead())
        throw std::invalid_argument("series add: leading exponents differ");
    TruncSeries out(a.var(), std::min(a.order(), b.order()));
    out.set_lead(a.lead());
    for (int k = 0; k <= out.order(); ++k) out[k] = a[k] + b[k];
    return out;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    require_same_var(a, b, "series subtract");
    if (a.lead() != b.lead())
        throw std::invalid_argument("series subtract: leading exponents differ");
    TruncSeries out(a.var(), std::min(a.order(), b.order()));
    out.set_lead(a.lead());
    for (int k = 0; k <= out.order(); ++k) out[k] = a[k] - b[k];
    return out;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    require_same_var(a, b, "series_mul");
    const int M = std::min(a.order(), b.order());
    TruncSeries out(a.var(), M);
    out.set_lead(a.lead() + b.lead());
    for (int k = 0; k <= M; ++k) {
        Cplx s(Real(0), Real(0));
        for (int j = 0; j <= k; ++j) s += a[j] * b[k - j];
        out[k] = s;
    }
    return out;
}

TruncSeries series_exp(const TruncSeries& a) {
    if (a.lead() != 0)
        throw std::invalid_argument("series_exp: leading exponent must be zero");
    const int M = a.order();
    TruncSeries out(a.var(), M);
    out[0] = exp(a[0]);
    // b' = a' b   =>   k b_k = sum_{j=1..k} j a_j b_{k-j}
    for (int k = 1; k <= M; ++k) {
        Cplx s(Real(0), Real(0));
        for (int j = 1; j <= k; ++j) s += Real(j) * a[j] * out[k - j];
        out[k] = s / Real(k);
    }
    return out;
}

TruncSeries series_log(const TruncSeries& a) {
    if (a.lead() != 0)
        throw std::invalid_argument("series_log: leading exponent must be zero");
    if (a[0] == Cplx(Real(0), Real(0)))
        throw std::invalid_argument("series_log: constant term must be nonzero");
    const int M = a.order();
    TruncSeries out(a.var(), M);
    out[0] = log(a[0]);
    // a' = c' a   =>   k a_k = sum_{j=1..k} j c_j a_{k-j}
    for (int k = 1; k <= M; ++k) {
        Cplx s = Real(k) * a[k];
        for (int j = 1; j < k; ++j) s -= Real(j) * out[j] * a[k - j];
        out[k] = s / (Real(k) * a[0]);
    }
    return out;
}

}  // namespace uqp
