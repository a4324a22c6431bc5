#include "uqp/modealg.hpp"

#include "uqp/qspecial.hpp"

#include <cmath>
#include <stdexcept>

namespace uqp {

namespace {

void require_row(const QParams& P, int j, const char* who) {
    if (j < 1 || j > P.N) throw std::out_of_range(std::string(who) + ": row index outside 1..N");
}

// solve A x = b (dense, partial pivoting); A and b are overwritten
std::vector<Real> gauss_solve(std::vector<std::vector<Real>> A, std::vector<Real> b) {
    const int n = static_cast<int>(A.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int i = col + 1; i < n; ++i)
            if (abs(A[i][col]) > abs(A[piv][col])) piv = i;
        if (A[piv][col] == 0) throw std::runtime_error("solve_B_from_b: singular system");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (int i = col + 1; i < n; ++i) {
            const Real f = A[i][col] / A[col][col];
            if (f == 0) continue;
            for (int jj = col; jj < n; ++jj) A[i][jj] -= f * A[col][jj];
            b[i] -= f * b[col];
        }
    }
    std::vector<Real> x(static_cast<std::size_t>(n), Real(0));
    for (int i = n - 1; i >= 0; --i) {
        Real s = b[static_cast<std::size_t>(i)];
        for (int jj = i + 1; jj < n; ++jj) s -= A[i][jj] * x[static_cast<std::size_t>(jj)];
        x[static_cast<std::size_t>(i)] = s / A[i][i];
    }
    return x;
}

Real det(const std::vector<std::vector<Real>>& A) {
    const int n = static_cast<int>(A.size());
    if (n == 1) return A[0][0];
    Real s(0);
    for (int j = 0; j < n; ++j) {
        if (A[0][j] == 0) continue;
        std::vector<std::vector<Real>> minor;
        minor.reserve(static_cast<std::size_t>(n) - 1);
        for (int i = 1; i < n; ++i) {
            std::vector<Real> row;
            row.reserve(static_cast<std::size_t>(n) - 1);
            for (int jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(A[i][jj]);
            minor.push_back(std::move(row));
        }
        const Real term = A[0][j] * det(minor);
        s += (j % 2 == 0) ? term : -term;
    }
    return s;
}

// the difference-plus-constraint system matrix and the rhs column for b_{col,m}
void build_system(const QParams& P, long m, std::vector<std::vector<Real>>& A,
                  std::vector<std::vector<Real>>& rhs_cols) {
    const int N = P.N;
    A.assign(static_cast<std::size_t>(N), std::vector<Real>(static_cast<std::size_t>(N), Real(0)));
    for (int i = 0; i < N - 1; ++i) {
        A[i][i] = Real(-1);
        A[i][i + 1] = Real(1);
    }
    for (int j = 1; j <= N; ++j) A[N - 1][j - 1] = exp(Real(2 * j * m) * P.L);
    rhs_cols.assign(static_cast<std::size_t>(N - 1),
                    std::vector<Real>(static_cast<std::size_t>(N), Real(0)));
    const Real mq = Real(m) / qnum(P, Real(1), m);
    for (int j = 1; j <= N - 1; ++j)
        rhs_cols[j - 1][j - 1] = mq * exp(Real((P.N - j) * m) * P.L);
}

}  // namespace

Real B_commutator_value(const QParams& P, int j, int k, long m) {
    require_row(P, j, "B_commutator");
    require_row(P, k, "B_commutator");
    if (m == 0) throw std::invalid_argument("B_commutator: mode index must be nonzero");
    const Real pref = m * qnum(P, P.rs, m) * qnum(P, P.c, m) /
                      (qnum(P, P.r, m) * qnum(P, Real(1), m) * qnum(P, Real(P.N), m));
    if (j == k) return pref * qnum(P, Real(P.N - 1), m);
    return pref * (-exp(Real(-m * P.N * sgn(j - k)) * P.L) * qnum(P, Real(1), m));
}

Cplx B_commutator(const QParams& P, int j, int k, long m, long mprime) {
    if (m + mprime != 0) return Cplx(Real(0), Real(0));
    return Cplx(B_commutator_value(P, j, k, m), Real(0));
}

std::vector<std::vector<Real>> solve_B_from_b(const QParams& P, long m) {
    if (m == 0) throw std::invalid_argument("solve_B_from_b: mode index must be nonzero");
    std::vector<std::vector<Real>> A;
    std::vector<std::vector<Real>> rhs_cols;
    build_system(P, m, A, rhs_cols);
    const int N = P.N;
    std::vector<std::vector<Real>> map(static_cast<std::size_t>(N),
                                       std::vector<Real>(static_cast<std::size_t>(N - 1), Real(0)));
    for (int col = 0; col < N - 1; ++col) {
        std::vector<Real> x = gauss_solve(A, rhs_cols[static_cast<std::size_t>(col)]);
        for (int i = 0; i < N; ++i) map[i][col] = x[static_cast<std::size_t>(i)];
    }
    return map;
}

std::vector<std::vector<Real>> solve_B_from_b_oracle(const QParams& P, long m) {
    if (m == 0) throw std::invalid_argument("solve_B_from_b_oracle: mode index must be nonzero");
    std::vector<std::vector<Real>> A;
    std::vector<std::vector<Real>> rhs_cols;
    build_system(P, m, A, rhs_cols);
    const int N = P.N;
    const Real dA = det(A);
    if (dA == 0) throw std::runtime_error("solve_B_from_b_oracle: singular system");
    std::vector<std::vector<Real>> map(static_cast<std::size_t>(N),
                                       std::vector<Real>(static_cast<std::size_t>(N - 1), Real(0)));
    for (int col = 0; col < N - 1; ++col) {
        for (int i = 0; i < N; ++i) {
            std::vector<std::vector<Real>> Ai = A;
            for (int row = 0; row < N; ++row) Ai[row][i] = rhs_cols[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)];
            map[i][col] = det(Ai) / dA;
        }
    }
    return map;
}

unsigned elevated_bits_for_modes(const QParams& P, long m_max) {
    const double qd = std::stod(P.q_dec);
    const double extra_digits = 2.0 * P.N * static_cast<double>(m_max) * (-std::log10(qd)) + 15.0;
    return precision_bits() + static_cast<unsigned>(std::ceil(extra_digits * 3.3220));
}

ModeConsistency consistency_check(const QParams& P, long m_max) {
    PrecisionGuard guard(elevated_bits_for_modes(P, m_max));
    QParams Pw(P.q_dec, P.r_dec, P.N, P.c_int);
    Real mx(0), mxt(0);
    for (long m = -m_max; m <= m_max; ++m) {
        if (m == 0) continue;
        for (int k = 1; k <= Pw.N; ++k) {
            Real s(0);
            for (int j = 1; j <= Pw.N; ++j) {
                const Real term = exp(Real(2 * j * m) * Pw.L) * B_commutator_value(Pw, j, k, m);
                if (abs(term) > mxt) mxt = abs(term);
                s += term;
            }
            if (abs(s) > mx) mx = abs(s);
        }
    }
    return {mx, mxt, precision_bits()};
}

}  // namespace uqp
