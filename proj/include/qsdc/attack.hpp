#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "qsdc/density.hpp"
#include "qsdc/rng.hpp"
#include "qsdc/state.hpp"

namespace qsdc {

/// Eve's collective attack: one fixed unitary on qubit (x) ancilla applied to
/// every forward photon, together with the ancilla's initial state |E>.
/// The qubit is the leading tensor factor of the (2 * ancilla_dim)-dimensional
/// joint space.
struct AttackUnitary {
    std::size_t ancilla_dim = 2;    // 2..8
    std::vector<ComplexAmp> matrix; // (2*ancilla_dim)^2 entries, row-major
    StateVector initial_ancilla;

    std::size_t total_dim() const { return 2 * ancilla_dim; }
    /// max entry of |U^dagger U - I|
    double unitarity_error() const;
    /// U (qubit (x) |E>) for a single-qubit input state.
    StateVector apply(const StateVector& qubit) const;

    void validate() const; // throws if not a well-formed unitary attack
};

enum class StandardAttack { Identity, Cnot, PhaseCovariant };

/// Fixture attacks. Identity leaves photons alone; Cnot copies the Z-basis
/// value into a fresh ancilla; PhaseCovariant(theta) tags |0> and |1> with
/// ancilla states of overlap cos(theta) without flipping either. theta is only
/// meaningful for PhaseCovariant and must lie in [0, pi/2].
AttackUnitary standard_attack(StandardAttack kind, double theta = 0.0);

/// Haar-style random attack via Gram-Schmidt on Gaussian columns; the initial
/// ancilla is an independent random unit vector.
AttackUnitary random_attack(std::size_t ancilla_dim, Rng& rng);

/// Index order of the eight decomposition rows/coefficients.
enum CoeffIndex { k00 = 0, k01, k10, k11, kpp, kpm, kmp, kmm };

/// Magnitudes and residual ancilla states of the attack's action on the four
/// preparation states, decomposed in the matching qubit basis. c[k01] is the
/// flip component of input |0>, c[kpm] the flip component of input |+>, and so
/// on. Rows with zero magnitude keep a placeholder ancilla state and are
/// flagged undefined.
struct AttackCoefficients {
    std::array<double, 8> c{};
    std::array<StateVector, 8> ancilla_states;
    std::array<bool, 8> defined{};
};

AttackCoefficients extract_coefficients(const AttackUnitary& attack);

/// Observable error rates induced by an attack. e_z and e_x are the flip
/// probabilities seen in control mode per basis, e their uniform average, and
/// xi the conjugate-basis disturbance entering the closed-form rate.
struct DisturbanceReport {
    double e_z;
    double e_x;
    double e;
    double xi;
};

DisturbanceReport disturbance(const AttackCoefficients& coeffs);

/// Joint state of the forward qubit and Eve's ancilla after the attack acts on
/// the maximally mixed preparation.
DensityMatrix forward_joint_state(const AttackUnitary& attack);

/// Classical-quantum state of Alice's bit register (leading factor, dim 2) and
/// the attacked qubit (x) ancilla after encoding: bit 0 keeps rho_be, bit 1
/// conjugates it by the flip operation on the qubit factor.
DensityMatrix encoded_cq_state(double p0, const DensityMatrix& rho_be);

/// S(rho_abe) - S(rho_be) in bits, with rho_be the partial trace over the
/// message register. Requires the block structure of encoded_cq_state.
double secure_rate_numeric(const DensityMatrix& rho_abe);

/// h(p0) - h(xi); the closed-form counterpart, exact for the fixture attacks.
double secure_rate_closed_form(double p0, double xi);

} // namespace qsdc
