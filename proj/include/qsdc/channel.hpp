#pragma once

#include <optional>

#include "qsdc/rng.hpp"
#include "qsdc/state.hpp"

namespace qsdc {

/// Lossy, noisy qubit channel. The noise model applies a bit flip with
/// probability p_flip and, independently, a phase flip with probability
/// p_flip, so the observed error rate equals p_flip in both check bases.
struct ChannelParams {
    double eta = 1.0;    // transmission probability
    double p_flip = 0.0; // in [0, 1/2]

    void validate() const;
};

/// Empty on loss, otherwise the (possibly flipped) state.
using TransmitOutcome = std::optional<StateVector>;

/// One use of the channel. For composite states the flips act on the leading
/// qubit factor; loss discards the photon irrespective of any attached
/// ancilla.
TransmitOutcome transmit_qubit(const StateVector& s, const ChannelParams& ch, Rng& rng);

} // namespace qsdc
