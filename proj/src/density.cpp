#include "qsdc/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsdc {

DensityMatrix DensityMatrix::zero(std::size_t dim) {
    DensityMatrix m;
    m.dim = dim;
    m.entries.assign(dim * dim, ComplexAmp(0.0));
    return m;
}

DensityMatrix DensityMatrix::identity(std::size_t dim) {
    DensityMatrix m = zero(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

DensityMatrix DensityMatrix::pure(const StateVector& s) {
    DensityMatrix m = zero(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            m.at(i, j) = s.amps[i] * std::conj(s.amps[j]);
    return m;
}

ComplexAmp DensityMatrix::trace() const {
    ComplexAmp t = 0.0;
    for (std::size_t i = 0; i < dim; ++i) t += at(i, i);
    return t;
}

double DensityMatrix::hermiticity_error() const {
    double e = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j)
            e = std::max(e, std::abs(at(i, j) - std::conj(at(j, i))));
    return e;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    DensityMatrix out = DensityMatrix::zero(a.dim * b.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < b.dim; ++k)
                for (std::size_t l = 0; l < b.dim; ++l)
                    out.at(i * b.dim + k, j * b.dim + l) = a.at(i, j) * b.at(k, l);
    return out;
}

DensityMatrix scaled(const DensityMatrix& a, double w) {
    DensityMatrix out = a;
    for (auto& e : out.entries) e *= w;
    return out;
}

DensityMatrix sum(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim != b.dim) throw std::invalid_argument("sum: dimension mismatch");
    DensityMatrix out = a;
    for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] += b.entries[i];
    return out;
}

DensityMatrix conjugate_by(const std::vector<ComplexAmp>& u, const DensityMatrix& rho) {
    const std::size_t n = rho.dim;
    if (u.size() != n * n) throw std::invalid_argument("conjugate_by: operator size mismatch");
    // tmp = U rho
    DensityMatrix tmp = DensityMatrix::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const ComplexAmp uik = u[i * n + k];
            if (uik == ComplexAmp(0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) tmp.at(i, j) += uik * rho.at(k, j);
        }
    // out = tmp U^dagger
    DensityMatrix out = DensityMatrix::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ComplexAmp s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += tmp.at(i, k) * std::conj(u[j * n + k]);
            out.at(i, j) = s;
        }
    return out;
}

DensityMatrix partial_trace_leading(const DensityMatrix& rho, std::size_t lead_dim) {
    if (lead_dim == 0 || rho.dim % lead_dim != 0)
        throw std::invalid_argument("partial_trace_leading: dimension mismatch");
    const std::size_t m = rho.dim / lead_dim;
    DensityMatrix out = DensityMatrix::zero(m);
    for (std::size_t b = 0; b < lead_dim; ++b)
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t s = 0; s < m; ++s)
                out.at(r, s) += rho.at(b * m + r, b * m + s);
    return out;
}

DensityMatrix partial_trace_trailing(const DensityMatrix& rho, std::size_t trail_dim) {
    if (trail_dim == 0 || rho.dim % trail_dim != 0)
        throw std::invalid_argument("partial_trace_trailing: dimension mismatch");
    const std::size_t m = rho.dim / trail_dim;
    DensityMatrix out = DensityMatrix::zero(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t a = 0; a < trail_dim; ++a)
                out.at(i, j) += rho.at(i * trail_dim + a, j * trail_dim + a);
    return out;
}

namespace {

// Cyclic Jacobi sweeps on a real symmetric matrix, row-major, destroyed.
std::vector<double> jacobi_symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
    double fro2 = 0.0;
    for (double v : a) fro2 += v * v;
    const double off_target = 1e-28 * std::max(fro2, 1e-30);

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off2 = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off2 += a[p * n + q] * a[p * n + q];
        if (off2 <= off_target) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) < 1e-300) {
                    a[p * n + q] = a[q * n + p] = 0.0;
                    continue;
                }
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = a[q * n + p] = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a[r * n + p];
                    const double arq = a[r * n + q];
                    a[r * n + p] = a[p * n + r] = c * arp - s * arq;
                    a[r * n + q] = a[q * n + r] = s * arp + c * arq;
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

} // namespace

std::vector<double> hermitian_eigenvalues(const DensityMatrix& m) {
    const std::size_t n = m.dim;
    // Real symmetric embedding [[X, -Y], [Y, X]]; each eigenvalue of the
    // Hermitian matrix appears twice in the embedding.
    std::vector<double> b(4 * n * n, 0.0);
    const std::size_t n2 = 2 * n;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double x = m.at(i, j).real();
            const double y = m.at(i, j).imag();
            b[i * n2 + j] = x;
            b[(n + i) * n2 + (n + j)] = x;
            b[i * n2 + (n + j)] = -y;
            b[(n + i) * n2 + j] = y;
        }
    }
    std::vector<double> doubled = jacobi_symmetric_eigenvalues(std::move(b), n2);
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    return eig;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    if (rho.dim == 0) throw std::invalid_argument("von_neumann_entropy: empty matrix");
    if (rho.hermiticity_error() > 1e-12)
        throw std::invalid_argument("von_neumann_entropy: matrix is not Hermitian");
    if (std::abs(rho.trace() - ComplexAmp(1.0)) > 1e-12)
        throw std::invalid_argument("von_neumann_entropy: trace is not 1");

    double s = 0.0;
    for (double lam : hermitian_eigenvalues(rho)) {
        if (lam < 1e-12) continue;
        s -= lam * std::log2(lam);
    }
    return s;
}

bool is_valid_density(const DensityMatrix& rho, double tol_herm, double tol_trace,
                      double eig_floor) {
    if (rho.dim == 0 || rho.entries.size() != rho.dim * rho.dim) return false;
    if (rho.hermiticity_error() > tol_herm) return false;
    if (std::abs(rho.trace() - ComplexAmp(1.0)) > tol_trace) return false;
    const auto eig = hermitian_eigenvalues(rho);
    return eig.front() >= eig_floor;
}

} // namespace qsdc
