#include "spectral_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace spectral_oracle {

namespace {

// Householder reduction of a symmetric matrix (row-major, destroyed) to
// tridiagonal form. Returns the diagonal in d and the subdiagonal in e,
// where e[i] couples rows i-1 and i (e[0] unused).
void tridiagonalize(std::vector<double>& a, std::size_t m, std::vector<double>& d,
                    std::vector<double>& e) {
    std::vector<double> v(m), w(m), q(m);
    for (std::size_t col = 0; col + 2 < m; ++col) {
        double norm2 = 0.0;
        for (std::size_t r = col + 1; r < m; ++r) norm2 += a[r * m + col] * a[r * m + col];
        const double norm = std::sqrt(norm2);
        if (norm < 1e-290) continue;

        const double x0 = a[(col + 1) * m + col];
        const double alpha = x0 >= 0.0 ? -norm : norm;
        std::fill(v.begin(), v.end(), 0.0);
        v[col + 1] = x0 - alpha;
        for (std::size_t r = col + 2; r < m; ++r) v[r] = a[r * m + col];
        double vn2 = 0.0;
        for (std::size_t r = col + 1; r < m; ++r) vn2 += v[r] * v[r];
        if (vn2 < 1e-290) continue;

        // A <- P A P with P = I - beta v v^T:
        // w = A v, q = beta w - (beta^2 (v.w) / 2) v, A <- A - v q^T - q v^T
        const double beta = 2.0 / vn2;
        for (std::size_t i = 0; i < m; ++i) {
            double s = 0.0;
            for (std::size_t j = col + 1; j < m; ++j) s += a[i * m + j] * v[j];
            w[i] = s;
        }
        double vw = 0.0;
        for (std::size_t i = col + 1; i < m; ++i) vw += v[i] * w[i];
        for (std::size_t i = 0; i < m; ++i) q[i] = beta * w[i] - 0.5 * beta * beta * vw * v[i];
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) a[i * m + j] -= v[i] * q[j] + q[i] * v[j];
    }
    d.resize(m);
    e.assign(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) d[i] = a[i * m + i];
    for (std::size_t i = 1; i < m; ++i) e[i] = a[i * m + (i - 1)];
}

// Number of eigenvalues of the tridiagonal matrix strictly below x.
std::size_t count_below(const std::vector<double>& d, const std::vector<double>& e, double x) {
    std::size_t count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const double e2 = i == 0 ? 0.0 : e[i] * e[i];
        if (std::abs(q) < 1e-300) q = q < 0.0 ? -1e-300 : 1e-300;
        q = d[i] - x - e2 / q;
        if (q < 0.0) ++count;
    }
    return count;
}

std::vector<double> sturm_eigenvalues(const std::vector<double>& d, const std::vector<double>& e) {
    const std::size_t m = d.size();
    double lo = d[0], hi = d[0];
    for (std::size_t i = 0; i < m; ++i) {
        const double r = (i > 0 ? std::abs(e[i]) : 0.0) + (i + 1 < m ? std::abs(e[i + 1]) : 0.0);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    const double pad = 1e-10 * std::max({std::abs(lo), std::abs(hi), 1.0});
    lo -= pad;
    hi += pad;

    std::vector<double> eig(m);
    for (std::size_t k = 0; k < m; ++k) {
        double a = lo, b = hi;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (a + b);
            if (count_below(d, e, mid) <= k)
                a = mid;
            else
                b = mid;
        }
        eig[k] = 0.5 * (a + b);
    }
    std::sort(eig.begin(), eig.end());
    return eig;
}

} // namespace

std::vector<double> hermitian_eigenvalues(const qsdc::DensityMatrix& m) {
    const std::size_t n = m.dim;
    const std::size_t n2 = 2 * n;
    std::vector<double> b(n2 * n2, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double x = m.at(i, j).real();
            const double y = m.at(i, j).imag();
            b[i * n2 + j] = x;
            b[(n + i) * n2 + (n + j)] = x;
            b[i * n2 + (n + j)] = -y;
            b[(n + i) * n2 + j] = y;
        }
    std::vector<double> d, e;
    tridiagonalize(b, n2, d, e);
    const std::vector<double> doubled = sturm_eigenvalues(d, e);
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    return eig;
}

double entropy_bits(const qsdc::DensityMatrix& rho) {
    double s = 0.0;
    for (double lam : spectral_oracle::hermitian_eigenvalues(rho)) {
        if (lam < 1e-12) continue;
        s -= lam * std::log2(lam);
    }
    return s;
}

} // namespace spectral_oracle
