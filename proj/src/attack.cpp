#include "qsdc/attack.hpp"

#include <cmath>
#include <stdexcept>

#include "qsdc/rate.hpp"

namespace qsdc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kUnitarityTol = 1e-10;

// Gram-Schmidt completion: columns [0, fixed) of m (dim x dim, row-major) are
// assumed orthonormal; the rest are filled with an orthonormal extension.
void complete_columns(std::vector<ComplexAmp>& m, std::size_t dim, std::size_t fixed) {
    std::size_t next = fixed;
    for (std::size_t cand = 0; cand < dim && next < dim; ++cand) {
        std::vector<ComplexAmp> v(dim, ComplexAmp(0.0));
        v[cand] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t c = 0; c < next; ++c) {
                ComplexAmp ov = 0.0;
                for (std::size_t r = 0; r < dim; ++r) ov += std::conj(m[r * dim + c]) * v[r];
                for (std::size_t r = 0; r < dim; ++r) v[r] -= ov * m[r * dim + c];
            }
        }
        double nrm2 = 0.0;
        for (const auto& x : v) nrm2 += std::norm(x);
        if (nrm2 < 1e-8) continue; // candidate already spanned
        const double inv = 1.0 / std::sqrt(nrm2);
        for (std::size_t r = 0; r < dim; ++r) m[r * dim + next] = v[r] * inv;
        ++next;
    }
    if (next != dim) throw std::logic_error("complete_columns: failed to extend basis");
}

StateVector basis_ancilla(std::size_t dim, std::size_t index) {
    StateVector s;
    s.amps.assign(dim, ComplexAmp(0.0));
    s.amps[index] = 1.0;
    return s;
}

// Magnitude and normalized residual for one decomposition row.
void set_row(AttackCoefficients& out, CoeffIndex idx, const std::vector<ComplexAmp>& component,
             std::size_t d_e) {
    double nrm2 = 0.0;
    for (const auto& a : component) nrm2 += std::norm(a);
    const double nrm = std::sqrt(nrm2);
    out.c[idx] = nrm;
    if (nrm > 1e-12) {
        StateVector e;
        e.amps.resize(d_e);
        for (std::size_t r = 0; r < d_e; ++r) e.amps[r] = component[r] / nrm;
        out.ancilla_states[idx] = std::move(e);
        out.defined[idx] = true;
    } else {
        out.ancilla_states[idx] = basis_ancilla(d_e, 0); // placeholder
        out.defined[idx] = false;
    }
}

} // namespace

double AttackUnitary::unitarity_error() const {
    const std::size_t n = total_dim();
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            ComplexAmp s = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                s += std::conj(matrix[k * n + i]) * matrix[k * n + j];
            if (i == j) s -= 1.0;
            err = std::max(err, std::abs(s));
        }
    }
    return err;
}

StateVector AttackUnitary::apply(const StateVector& qubit) const {
    if (qubit.dim() != 2) throw std::invalid_argument("attack applies to a single qubit");
    const StateVector joint = tensor(qubit, initial_ancilla);
    const std::size_t n = total_dim();
    StateVector out;
    out.amps.assign(n, ComplexAmp(0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.amps[i] += matrix[i * n + j] * joint.amps[j];
    return out;
}

void AttackUnitary::validate() const {
    if (ancilla_dim < 2 || ancilla_dim > 8)
        throw std::invalid_argument("ancilla dimension must be in [2, 8]");
    const std::size_t n = total_dim();
    if (matrix.size() != n * n) throw std::invalid_argument("attack matrix has wrong size");
    if (initial_ancilla.dim() != ancilla_dim)
        throw std::invalid_argument("initial ancilla has wrong dimension");
    if (std::abs(initial_ancilla.squared_norm() - 1.0) > 1e-10)
        throw std::invalid_argument("initial ancilla is not normalized");
    if (unitarity_error() > kUnitarityTol)
        throw std::invalid_argument("attack matrix is not unitary");
}

AttackUnitary standard_attack(StandardAttack kind, double theta) {
    AttackUnitary a;
    a.ancilla_dim = 2;
    a.initial_ancilla = basis_ancilla(2, 0);
    const std::size_t n = 4;
    a.matrix.assign(n * n, ComplexAmp(0.0));

    switch (kind) {
    case StandardAttack::Identity:
        for (std::size_t i = 0; i < n; ++i) a.matrix[i * n + i] = 1.0;
        break;
    case StandardAttack::Cnot:
        // control = qubit (leading), target = ancilla
        a.matrix[0 * n + 0] = 1.0;
        a.matrix[1 * n + 1] = 1.0;
        a.matrix[2 * n + 3] = 1.0;
        a.matrix[3 * n + 2] = 1.0;
        break;
    case StandardAttack::PhaseCovariant: {
        if (!(theta >= 0.0 && theta <= M_PI / 2.0))
            throw std::invalid_argument("theta must lie in [0, pi/2]");
        // |0>|E> -> |0>|e0>, |1>|E> -> |1>|e1> with <e0|e1> = cos(theta),
        // |e0> = |0>, |e1> = cos|0> + sin|1>. The two defined columns are the
        // inputs |0>|0> and |1>|0>; stage them first, extend orthonormally,
        // then permute into column slots 0 and 2.
        std::vector<ComplexAmp> m(n * n, ComplexAmp(0.0));
        m[0 * n + 0] = 1.0;
        m[2 * n + 1] = std::cos(theta);
        m[3 * n + 1] = std::sin(theta);
        complete_columns(m, n, 2);
        for (std::size_t r = 0; r < n; ++r) {
            a.matrix[r * n + 0] = m[r * n + 0];
            a.matrix[r * n + 2] = m[r * n + 1];
            a.matrix[r * n + 1] = m[r * n + 2];
            a.matrix[r * n + 3] = m[r * n + 3];
        }
        break;
    }
    }

    a.validate();
    return a;
}

AttackUnitary random_attack(std::size_t ancilla_dim, Rng& rng) {
    AttackUnitary a;
    a.ancilla_dim = ancilla_dim;
    const std::size_t n = a.total_dim();

    auto gauss = [&rng]() {
        // Box-Muller
        const double u1 = std::max(uniform_double(rng), 1e-300);
        const double u2 = uniform_double(rng);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    };

    a.matrix.resize(n * n);
    for (auto& e : a.matrix) e = ComplexAmp(gauss(), gauss());
    // modified Gram-Schmidt over columns, two passes for stability
    for (std::size_t c = 0; c < n; ++c) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t p = 0; p < c; ++p) {
                ComplexAmp ov = 0.0;
                for (std::size_t r = 0; r < n; ++r)
                    ov += std::conj(a.matrix[r * n + p]) * a.matrix[r * n + c];
                for (std::size_t r = 0; r < n; ++r) a.matrix[r * n + c] -= ov * a.matrix[r * n + p];
            }
        }
        double nrm2 = 0.0;
        for (std::size_t r = 0; r < n; ++r) nrm2 += std::norm(a.matrix[r * n + c]);
        const double inv = 1.0 / std::sqrt(nrm2);
        for (std::size_t r = 0; r < n; ++r) a.matrix[r * n + c] *= inv;
    }

    a.initial_ancilla.amps.resize(ancilla_dim);
    for (auto& e : a.initial_ancilla.amps) e = ComplexAmp(gauss(), gauss());
    a.initial_ancilla.normalize();

    a.validate();
    return a;
}

AttackCoefficients extract_coefficients(const AttackUnitary& attack) {
    attack.validate();
    const std::size_t d = attack.ancilla_dim;

    AttackCoefficients out;
    const StateVector psi0 = attack.apply(prepare_state(Basis::Z, 0));
    const StateVector psi1 = attack.apply(prepare_state(Basis::Z, 1));
    const StateVector psip = attack.apply(prepare_state(Basis::X, 0));
    const StateVector psim = attack.apply(prepare_state(Basis::X, 1));

    auto z_component = [d](const StateVector& psi, int bit) {
        std::vector<ComplexAmp> v(d);
        for (std::size_t r = 0; r < d; ++r) v[r] = psi.amps[static_cast<std::size_t>(bit) * d + r];
        return v;
    };
    auto x_component = [d](const StateVector& psi, int bit) {
        const double sign = bit == 0 ? 1.0 : -1.0;
        std::vector<ComplexAmp> v(d);
        for (std::size_t r = 0; r < d; ++r)
            v[r] = kInvSqrt2 * (psi.amps[r] + sign * psi.amps[d + r]);
        return v;
    };

    set_row(out, k00, z_component(psi0, 0), d);
    set_row(out, k01, z_component(psi0, 1), d);
    set_row(out, k10, z_component(psi1, 0), d);
    set_row(out, k11, z_component(psi1, 1), d);
    set_row(out, kpp, x_component(psip, 0), d);
    set_row(out, kpm, x_component(psip, 1), d);
    set_row(out, kmp, x_component(psim, 0), d);
    set_row(out, kmm, x_component(psim, 1), d);
    return out;
}

DisturbanceReport disturbance(const AttackCoefficients& coeffs) {
    const auto& c = coeffs.c;
    DisturbanceReport r;
    r.e_z = 0.5 * (c[k01] * c[k01] + c[k10] * c[k10]);
    r.e_x = 0.5 * (c[kpm] * c[kpm] + c[kmp] * c[kmp]);
    r.e = 0.5 * (r.e_z + r.e_x);
    r.xi = c[kpm] * c[kpm];
    return r;
}

DensityMatrix forward_joint_state(const AttackUnitary& attack) {
    attack.validate();
    // rho_B (x) |E><E| with rho_B maximally mixed, conjugated by the attack.
    const DensityMatrix rho_in =
        tensor(scaled(DensityMatrix::identity(2), 0.5), DensityMatrix::pure(attack.initial_ancilla));
    return conjugate_by(attack.matrix, rho_in);
}

DensityMatrix encoded_cq_state(double p0, const DensityMatrix& rho_be) {
    if (!(p0 >= 0.0 && p0 <= 1.0)) throw std::invalid_argument("p0 out of [0,1]");
    if (rho_be.dim % 2 != 0 || rho_be.dim == 0)
        throw std::invalid_argument("rho_be must live on qubit (x) ancilla");

    const std::size_t m = rho_be.dim;
    // flip on the qubit factor of rho_be
    const Mat2 u = encode_matrix(EncodeOp::U);
    std::vector<ComplexAmp> flip(m * m, ComplexAmp(0.0));
    const std::size_t half = m / 2;
    for (std::size_t r = 0; r < half; ++r) {
        flip[r * m + r] = u[0][0];
        flip[r * m + (half + r)] = u[0][1];
        flip[(half + r) * m + r] = u[1][0];
        flip[(half + r) * m + (half + r)] = u[1][1];
    }
    const DensityMatrix rho1 = conjugate_by(flip, rho_be);

    DensityMatrix out = DensityMatrix::zero(2 * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            out.at(i, j) = p0 * rho_be.at(i, j);
            out.at(m + i, m + j) = (1.0 - p0) * rho1.at(i, j);
        }
    return out;
}

double secure_rate_numeric(const DensityMatrix& rho_abe) {
    if (rho_abe.dim % 2 != 0 || rho_abe.dim == 0)
        throw std::invalid_argument("rho_abe must carry a leading bit register");
    const std::size_t m = rho_abe.dim / 2;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (std::abs(rho_abe.at(i, m + j)) > 1e-10 || std::abs(rho_abe.at(m + i, j)) > 1e-10)
                throw std::invalid_argument("state is not classical on the message register");

    const DensityMatrix rho_be = partial_trace_leading(rho_abe, 2);
    return von_neumann_entropy(rho_abe) - von_neumann_entropy(rho_be);
}

double secure_rate_closed_form(double p0, double xi) {
    return binary_entropy(p0) - binary_entropy(xi);
}

} // namespace qsdc
