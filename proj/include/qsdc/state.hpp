#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "qsdc/rng.hpp"

namespace qsdc {

using ComplexAmp = std::complex<double>;

/// Measurement / preparation basis: Z is the computational basis {|0>,|1>},
/// X is the diagonal basis {|+>,|->}.
enum class Basis { Z, X };

/// Alice's encoding operations. I leaves the state alone, U = |0><1| - |1><0|
/// flips the bit value in both the Z and the X basis (up to a global phase).
enum class EncodeOp { I, U };

/// Pure state on `dim` levels. Composite systems are indexed with the
/// transmitted qubit as the leading tensor factor:
/// amps[b * (dim/2) + r] is the component with qubit value b.
struct StateVector {
    std::vector<ComplexAmp> amps;

    std::size_t dim() const { return amps.size(); }
    double squared_norm() const;
    void normalize();
};

StateVector tensor(const StateVector& a, const StateVector& b);
ComplexAmp inner(const StateVector& a, const StateVector& b);

/// |<a|b>|^2. Two unit states are equal up to global phase iff this is 1.
double fidelity(const StateVector& a, const StateVector& b);

using Mat2 = std::array<std::array<ComplexAmp, 2>, 2>;

Mat2 encode_matrix(EncodeOp op);
Mat2 pauli_x();
Mat2 pauli_z();

/// Applies a one-qubit operator to the leading qubit factor (dim must be even).
StateVector apply_leading_qubit(const Mat2& u, const StateVector& s);

/// One of |0>, |1>, |+>, |-> for (basis, bit).
StateVector prepare_state(Basis basis, int bit);

/// op applied to a single qubit; throws if s.dim != 2.
StateVector apply_encode(EncodeOp op, const StateVector& s);

/// Born probability of reading `bit` when the leading qubit of s is measured
/// in `basis`.
double outcome_probability(const StateVector& s, Basis basis, int bit);

struct MeasureResult {
    int bit;
    StateVector post;
};

/// Born-rule measurement of the leading qubit factor; post is the renormalized
/// projection. dim must be even and positive.
MeasureResult measure_in_basis(const StateVector& s, Basis basis, Rng& rng);

} // namespace qsdc
