#include "qsdc/state.hpp"

#include <cmath>
#include <stdexcept>

namespace qsdc {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

double StateVector::squared_norm() const {
    double n = 0.0;
    for (const auto& a : amps) n += std::norm(a);
    return n;
}

void StateVector::normalize() {
    const double n = std::sqrt(squared_norm());
    if (n <= 0.0) throw std::invalid_argument("cannot normalize a zero state");
    for (auto& a : amps) a /= n;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    StateVector out;
    out.amps.resize(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            out.amps[i * b.dim() + j] = a.amps[i] * b.amps[j];
    return out;
}

ComplexAmp inner(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
    ComplexAmp s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a.amps[i]) * b.amps[i];
    return s;
}

double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(inner(a, b));
}

Mat2 encode_matrix(EncodeOp op) {
    if (op == EncodeOp::I) return {{{1.0, 0.0}, {0.0, 1.0}}};
    // |0><1| - |1><0|
    return {{{0.0, 1.0}, {-1.0, 0.0}}};
}

Mat2 pauli_x() { return {{{0.0, 1.0}, {1.0, 0.0}}}; }
Mat2 pauli_z() { return {{{1.0, 0.0}, {0.0, -1.0}}}; }

StateVector apply_leading_qubit(const Mat2& u, const StateVector& s) {
    const std::size_t d = s.dim();
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("apply_leading_qubit: dimension must be even");
    const std::size_t m = d / 2;
    StateVector out;
    out.amps.resize(d);
    for (std::size_t r = 0; r < m; ++r) {
        const ComplexAmp a0 = s.amps[r];
        const ComplexAmp a1 = s.amps[m + r];
        out.amps[r] = u[0][0] * a0 + u[0][1] * a1;
        out.amps[m + r] = u[1][0] * a0 + u[1][1] * a1;
    }
    return out;
}

StateVector prepare_state(Basis basis, int bit) {
    if (bit != 0 && bit != 1) throw std::invalid_argument("prepare_state: bit must be 0 or 1");
    StateVector s;
    if (basis == Basis::Z) {
        s.amps = {ComplexAmp(bit == 0 ? 1.0 : 0.0), ComplexAmp(bit == 1 ? 1.0 : 0.0)};
    } else {
        s.amps = {ComplexAmp(kInvSqrt2), ComplexAmp(bit == 0 ? kInvSqrt2 : -kInvSqrt2)};
    }
    return s;
}

StateVector apply_encode(EncodeOp op, const StateVector& s) {
    if (s.dim() != 2) throw std::invalid_argument("apply_encode: expected a single qubit");
    return apply_leading_qubit(encode_matrix(op), s);
}

double outcome_probability(const StateVector& s, Basis basis, int bit) {
    const std::size_t d = s.dim();
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("outcome_probability: dimension must be even");
    if (bit != 0 && bit != 1) throw std::invalid_argument("outcome_probability: bit must be 0 or 1");
    const std::size_t m = d / 2;
    double p = 0.0;
    if (basis == Basis::Z) {
        for (std::size_t r = 0; r < m; ++r) p += std::norm(s.amps[bit * m + r]);
    } else {
        const double sign = bit == 0 ? 1.0 : -1.0;
        for (std::size_t r = 0; r < m; ++r)
            p += std::norm(kInvSqrt2 * (s.amps[r] + sign * s.amps[m + r]));
    }
    return p;
}

MeasureResult measure_in_basis(const StateVector& s, Basis basis, Rng& rng) {
    const std::size_t d = s.dim();
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("measure_in_basis: dimension must be even");
    const std::size_t m = d / 2;

    const double p0 = outcome_probability(s, basis, 0);
    const int bit = uniform_double(rng) < p0 ? 0 : 1;

    StateVector post;
    post.amps.assign(d, ComplexAmp(0.0));
    if (basis == Basis::Z) {
        for (std::size_t r = 0; r < m; ++r) post.amps[bit * m + r] = s.amps[bit * m + r];
    } else {
        const double sign = bit == 0 ? 1.0 : -1.0;
        for (std::size_t r = 0; r < m; ++r) {
            const ComplexAmp c = kInvSqrt2 * (s.amps[r] + sign * s.amps[m + r]);
            post.amps[r] = kInvSqrt2 * c;
            post.amps[m + r] = sign * kInvSqrt2 * c;
        }
    }
    post.normalize();
    return {bit, std::move(post)};
}

} // namespace qsdc
