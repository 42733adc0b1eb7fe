#pragma once

#include <cstddef>
#include <vector>

namespace qsdc {

/// Binary Shannon entropy h(x) = -x log2 x - (1-x) log2 (1-x), h(0) = h(1) = 0.
/// Throws outside [0, 1].
double binary_entropy(double x);

/// Control-mode acceptance test: true iff e < 1/4 (strict).
bool threshold_check(double e);

/// Inputs of the composite secure-qubit-rate formula.
struct RateInputs {
    double p0 = 0.5;    // probability of message bit 0
    double xi = 0.0;    // conjugate-basis disturbance of the attack
    double e = 0.0;     // control-mode error rate
    double eta_b = 0.0; // backward-channel loss, subtracted as a raw term
};

struct RateSplit {
    double r_s;  // i_ab - i_ae
    double i_ab; // h(p0) - h(e) - eta_b
    double i_ae; // h(xi)
};

RateSplit secure_qubit_rate(const RateInputs& in);

/// Parameters of the forward-error-correction security analysis. Loss rates
/// are per-receiver; p_a is Alice's encoding error, p_c the channel error.
struct FecInputs {
    double eta_e = 0.0; // Eve's loss rate
    double eta_b = 0.0; // Bob's loss rate
    double p_a = 0.0;
    double p_c = 0.0;

    double p1() const { return p_a + p_c; } // Bob's effective error rate
};

/// Per-symbol entropy of a binary channel with loss eta and error p1; a lost
/// symbol carries a fair coin, so the loss term saturates at 1 bit.
double lossy_channel_entropy(double eta, double p1);

/// 1 - lossy_channel_entropy.
double channel_capacity(double eta, double p1);

/// Per-symbol exponent of a receiver's ambiguity sphere: (1-eta) h(p) + eta.
/// Same formula as lossy_channel_entropy; kept separate because it is applied
/// with (eta_e, p_a) for Eve and (eta_b, p1) for Bob.
double typical_exponent(double eta, double p);

struct SecurityConditions {
    bool reliable; // Bob's sphere exponent + code rate fits in one bit/symbol
    bool secure;   // Eve's sphere exceeds Bob's by more than `gap` bits per block
};

SecurityConditions security_conditions(std::size_t n, double rate, const FecInputs& f,
                                       double gap = 2.0);

/// Per-qubit gap between Eve's and Bob's sphere exponents; positive means
/// secret bits are encodable.
double secure_efficiency(const FecInputs& f);

/// Combined report of the closed-form quantities for one parameter point.
struct RateReport {
    double r_s;
    double i_ab;
    double i_ae;
    double r;        // secure_efficiency
    double capacity; // Bob's channel capacity 1 - H
    bool cond_reliable;
    bool cond_secure;
};

RateReport rate_report(const RateInputs& ri, const FecInputs& fi, std::size_t n,
                       double code_rate, double gap = 2.0);

/// Loss rate at which Eve's and Bob's exponents match, as a function of Bob's
/// loss: the r = 0 curve.
double boundary_eta_e(double eta_b, double p_a, double p_c);

struct ScanPoint {
    double eta_e;
    double eta_b;
    double r;
};

struct BoundaryPoint {
    double eta_b;
    double eta_e_star;
};

struct ScanResult {
    std::size_t steps = 0;
    std::vector<ScanPoint> grid;         // eta_b outer, eta_e inner (fastest)
    std::vector<BoundaryPoint> boundary; // one point per eta_b grid value
};

/// secure_efficiency on a uniform (grid_steps+1)^2 grid over [0,1]^2 plus the
/// analytic r = 0 boundary curve.
ScanResult boundary_scan(std::size_t grid_steps, double p_a, double p_c);

} // namespace qsdc
