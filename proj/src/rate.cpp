#include "qsdc/rate.hpp"

#include <cmath>
#include <stdexcept>

namespace qsdc {

namespace {

void require_unit_range(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument(std::string(what) + " out of [0,1]");
}

void validate_fec(const FecInputs& f) {
    require_unit_range(f.eta_e, "eta_e");
    require_unit_range(f.eta_b, "eta_b");
    require_unit_range(f.p_a, "p_a");
    require_unit_range(f.p_c, "p_c");
    if (f.p1() > 0.5)
        throw std::invalid_argument("p_a + p_c exceeds 1/2");
}

} // namespace

double binary_entropy(double x) {
    require_unit_range(x, "binary_entropy argument");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

bool threshold_check(double e) {
    require_unit_range(e, "error rate");
    return e < 0.25;
}

RateSplit secure_qubit_rate(const RateInputs& in) {
    require_unit_range(in.p0, "p0");
    require_unit_range(in.xi, "xi");
    require_unit_range(in.e, "e");
    require_unit_range(in.eta_b, "eta_b");
    RateSplit out;
    out.i_ab = binary_entropy(in.p0) - binary_entropy(in.e) - in.eta_b;
    out.i_ae = binary_entropy(in.xi);
    out.r_s = out.i_ab - out.i_ae;
    return out;
}

double lossy_channel_entropy(double eta, double p1) {
    require_unit_range(eta, "eta");
    return (1.0 - eta) * binary_entropy(p1) + eta;
}

double channel_capacity(double eta, double p1) {
    return 1.0 - lossy_channel_entropy(eta, p1);
}

double typical_exponent(double eta, double p) {
    return lossy_channel_entropy(eta, p);
}

SecurityConditions security_conditions(std::size_t n, double rate, const FecInputs& f,
                                       double gap) {
    if (n == 0) throw std::invalid_argument("block length must be positive");
    require_unit_range(rate, "code rate");
    validate_fec(f);
    SecurityConditions c;
    c.reliable = typical_exponent(f.eta_b, f.p1()) + rate <= 1.0;
    c.secure =
        static_cast<double>(n) *
            (typical_exponent(f.eta_e, f.p_a) - typical_exponent(f.eta_b, f.p1())) > gap;
    return c;
}

double secure_efficiency(const FecInputs& f) {
    validate_fec(f);
    return typical_exponent(f.eta_e, f.p_a) - typical_exponent(f.eta_b, f.p1());
}

RateReport rate_report(const RateInputs& ri, const FecInputs& fi, std::size_t n,
                       double code_rate, double gap) {
    const RateSplit split = secure_qubit_rate(ri);
    const SecurityConditions cond = security_conditions(n, code_rate, fi, gap);
    RateReport rep;
    rep.r_s = split.r_s;
    rep.i_ab = split.i_ab;
    rep.i_ae = split.i_ae;
    rep.r = secure_efficiency(fi);
    rep.capacity = channel_capacity(fi.eta_b, fi.p1());
    rep.cond_reliable = cond.reliable;
    rep.cond_secure = cond.secure;
    return rep;
}

double boundary_eta_e(double eta_b, double p_a, double p_c) {
    require_unit_range(eta_b, "eta_b");
    const double h_a = binary_entropy(p_a);
    const double h_1 = binary_entropy(p_a + p_c);
    return ((1.0 - eta_b) * h_1 + eta_b - h_a) / (1.0 - h_a);
}

ScanResult boundary_scan(std::size_t grid_steps, double p_a, double p_c) {
    if (grid_steps < 2) throw std::invalid_argument("grid_steps must be at least 2");
    FecInputs f;
    f.p_a = p_a;
    f.p_c = p_c;
    validate_fec(f);

    ScanResult out;
    out.steps = grid_steps;
    out.grid.reserve((grid_steps + 1) * (grid_steps + 1));
    out.boundary.reserve(grid_steps + 1);
    for (std::size_t ib = 0; ib <= grid_steps; ++ib) {
        const double eta_b = static_cast<double>(ib) / static_cast<double>(grid_steps);
        f.eta_b = eta_b;
        for (std::size_t ie = 0; ie <= grid_steps; ++ie) {
            const double eta_e = static_cast<double>(ie) / static_cast<double>(grid_steps);
            f.eta_e = eta_e;
            out.grid.push_back({eta_e, eta_b, secure_efficiency(f)});
        }
        out.boundary.push_back({eta_b, boundary_eta_e(eta_b, p_a, p_c)});
    }
    return out;
}

} // namespace qsdc
