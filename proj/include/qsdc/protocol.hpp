#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qsdc/attack.hpp"
#include "qsdc/channel.hpp"

namespace qsdc {

/// Full parameter set for one protocol block.
struct ProtocolConfig {
    std::size_t n_e = 10000;      // photons Bob prepares
    double check_fraction = 0.25; // C, in (0, 1/2]
    double p0 = 0.5;              // probability of bit 0 for generated message bits
    double e_threshold = 0.25;    // abort when the control-mode estimate exceeds this
    ChannelParams forward;
    ChannelParams backward;
    double p_alice = 0.0; // probability Alice's encoder inverts the intended op
    /// When set, the attack replaces forward-channel noise (loss still
    /// applies) and every surviving photon drags Eve's ancilla through the
    /// rest of the run. Backward noise stays channel noise.
    std::optional<AttackUnitary> attack;
    std::uint64_t seed = 0;

    void validate() const;
};

enum class PhotonFate {
    LostForward,
    ControlChecked,
    AliceCheckBit,
    MessageCarrier,
    LostBackward,
};

struct PhotonRecord {
    Basis prep_basis = Basis::Z;
    int prep_bit = 0;
    PhotonFate fate = PhotonFate::LostForward;
    std::optional<EncodeOp> encode_op; // only for AliceCheckBit / MessageCarrier
    std::optional<int> bob_measured;
};

struct RunStats {
    std::size_t n_e = 0;
    std::size_t n_received = 0; // forward survivors
    std::size_t n_decoded = 0;  // encode-mode carriers that completed the round trip
    double e_hat_fwd = 0.0;     // control-mode estimate over basis-matched photons
    double e_hat_bwd = 0.0;     // check-bit estimate on the backward pass
    double ber = 0.0;           // decoded-vs-intended error rate over delivered carriers
    bool aborted = false;

    std::size_t control_compared = 0; // basis-matched control photons
    std::size_t check_compared = 0;   // check bits that survived the round trip
    double e_hat_fwd_stderr = 0.0;    // binomial standard error of e_hat_fwd
};

struct RunResult {
    RunStats stats;
    /// One entry per supplied message bit; nullopt marks a photon lost on the
    /// backward pass (an erasure). Empty when the run aborted.
    std::vector<std::optional<int>> decoded;
    std::vector<PhotonRecord> photons; // one record per prepared photon
};

/// Executes one block: preparation, forward pass, control mode with the abort
/// gate, check-bit and message encoding, backward pass, deterministic decode.
/// Carrier positions beyond message.size() are filled with generated bits
/// (P(0) = p0); they count toward n_decoded and ber but not toward `decoded`.
/// Throws if the block realizes fewer carriers than message.size().
RunResult run_protocol(const ProtocolConfig& cfg, const std::vector<int>& message);

struct ExpectedCounts {
    double n_received; // n_e * eta_f
    double n_decoded;  // (1-C)^2 * n_e * eta_f * eta_b
};

ExpectedCounts expected_counts(const ProtocolConfig& cfg);

} // namespace qsdc
