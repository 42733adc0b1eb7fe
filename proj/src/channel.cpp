#include "qsdc/channel.hpp"

#include <stdexcept>

namespace qsdc {

void ChannelParams::validate() const {
    if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("eta out of [0,1]");
    if (!(p_flip >= 0.0 && p_flip <= 0.5)) throw std::invalid_argument("p_flip out of [0,1/2]");
}

TransmitOutcome transmit_qubit(const StateVector& s, const ChannelParams& ch, Rng& rng) {
    if (uniform_double(rng) >= ch.eta) return std::nullopt;
    StateVector out = s;
    if (uniform_double(rng) < ch.p_flip) out = apply_leading_qubit(pauli_x(), out);
    if (uniform_double(rng) < ch.p_flip) out = apply_leading_qubit(pauli_z(), out);
    return out;
}

} // namespace qsdc
