#include "qsdc/protocol.hpp"

#include <cmath>
#include <stdexcept>

namespace qsdc {

namespace {

// substream tags
constexpr std::uint64_t kPhotonStream = 0x70686f746f6eULL; // per-photon draws
constexpr std::uint64_t kBlockStream = 0x626c6f636bULL;    // subset selection

// First `count` entries of a Fisher-Yates partial shuffle of `items`.
std::vector<std::size_t> sample_without_replacement(std::vector<std::size_t> items,
                                                    std::size_t count, Rng& rng) {
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + uniform_below(rng, items.size() - i);
        std::swap(items[i], items[j]);
    }
    items.resize(count);
    return items;
}

} // namespace

void ProtocolConfig::validate() const {
    if (n_e == 0) throw std::invalid_argument("block size must be positive");
    if (!(check_fraction > 0.0 && check_fraction <= 0.5))
        throw std::invalid_argument("check fraction must lie in (0, 1/2]");
    if (!(p0 >= 0.0 && p0 <= 1.0)) throw std::invalid_argument("p0 out of [0,1]");
    if (!(e_threshold >= 0.0 && e_threshold <= 1.0))
        throw std::invalid_argument("e_threshold out of [0,1]");
    if (!(p_alice >= 0.0 && p_alice <= 1.0)) throw std::invalid_argument("p_alice out of [0,1]");
    forward.validate();
    backward.validate();
    if (attack) attack->validate();
}

ExpectedCounts expected_counts(const ProtocolConfig& cfg) {
    cfg.validate();
    const double n_r = static_cast<double>(cfg.n_e) * cfg.forward.eta;
    const double keep = 1.0 - cfg.check_fraction;
    return {n_r, keep * keep * n_r * cfg.backward.eta};
}

RunResult run_protocol(const ProtocolConfig& cfg, const std::vector<int>& message) {
    cfg.validate();

    RunResult out;
    out.stats.n_e = cfg.n_e;
    out.photons.assign(cfg.n_e, PhotonRecord{});

    std::vector<Rng> photon_rng;
    photon_rng.reserve(cfg.n_e);

    // (1) Bob prepares the block; forward transmission.
    std::vector<std::size_t> survivors;     // photon indices
    std::vector<StateVector> states;        // states of the survivors
    std::vector<std::size_t> state_of;      // photon index -> slot in `states`
    state_of.assign(cfg.n_e, 0);
    for (std::size_t i = 0; i < cfg.n_e; ++i) {
        photon_rng.push_back(derive_rng(cfg.seed, kPhotonStream, i));
        Rng& rng = photon_rng.back();

        PhotonRecord& rec = out.photons[i];
        rec.prep_basis = uniform_bit(rng) == 0 ? Basis::Z : Basis::X;
        rec.prep_bit = uniform_bit(rng);
        StateVector s = prepare_state(rec.prep_basis, rec.prep_bit);

        if (cfg.attack) {
            if (uniform_double(rng) >= cfg.forward.eta) continue; // lost
            s = cfg.attack->apply(s);
        } else {
            TransmitOutcome t = transmit_qubit(s, cfg.forward, rng);
            if (!t) continue;
            s = std::move(*t);
        }
        state_of[i] = states.size();
        survivors.push_back(i);
        states.push_back(std::move(s));
    }
    out.stats.n_received = survivors.size();

    Rng block_rng = derive_rng(cfg.seed, kBlockStream);

    // (2) Control mode: Alice measures a random C-fraction in random bases;
    // basis-matched photons estimate the forward error rate.
    const std::size_t n_control = static_cast<std::size_t>(
        std::floor(cfg.check_fraction * static_cast<double>(survivors.size())));
    const std::vector<std::size_t> control = sample_without_replacement(survivors, n_control, block_rng);
    std::vector<bool> in_control(cfg.n_e, false);

    std::size_t compared = 0;
    std::size_t disagreements = 0;
    for (std::size_t i : control) {
        in_control[i] = true;
        PhotonRecord& rec = out.photons[i];
        rec.fate = PhotonFate::ControlChecked;
        Rng& rng = photon_rng[i];
        const Basis alice_basis = uniform_bit(rng) == 0 ? Basis::Z : Basis::X;
        const MeasureResult m = measure_in_basis(states[state_of[i]], alice_basis, rng);
        if (alice_basis == rec.prep_basis) {
            ++compared;
            if (m.bit != rec.prep_bit) ++disagreements;
        }
    }
    out.stats.control_compared = compared;
    out.stats.e_hat_fwd =
        compared == 0 ? 0.0 : static_cast<double>(disagreements) / static_cast<double>(compared);
    out.stats.e_hat_fwd_stderr =
        compared == 0 ? 0.0
                      : std::sqrt(out.stats.e_hat_fwd * (1.0 - out.stats.e_hat_fwd) /
                                  static_cast<double>(compared));

    if (out.stats.e_hat_fwd > cfg.e_threshold) { // ties pass
        out.stats.aborted = true;
        return out;
    }

    // (3) Encode mode: check bits among the remainder, message bits (and
    // generated padding) on the rest.
    std::vector<std::size_t> remaining;
    remaining.reserve(survivors.size() - n_control);
    for (std::size_t i : survivors)
        if (!in_control[i]) remaining.push_back(i);

    const std::size_t n_check = static_cast<std::size_t>(
        std::floor(cfg.check_fraction * (1.0 - cfg.check_fraction) *
                   static_cast<double>(survivors.size())));
    std::vector<std::size_t> check = sample_without_replacement(remaining, n_check, block_rng);
    std::vector<bool> is_check(cfg.n_e, false);
    for (std::size_t i : check) is_check[i] = true;

    const std::size_t n_carriers = remaining.size() - n_check;
    if (message.size() > n_carriers)
        throw std::invalid_argument("message longer than the block's carrier capacity");
    out.decoded.assign(message.size(), std::nullopt);

    std::size_t next_message_pos = 0;
    std::size_t delivered = 0;
    std::size_t carrier_errors = 0;
    std::size_t check_arrived = 0;
    std::size_t check_errors = 0;
    for (std::size_t i : remaining) {
        PhotonRecord& rec = out.photons[i];
        Rng& rng = photon_rng[i];

        int intended;
        std::optional<std::size_t> message_pos;
        if (is_check[i]) {
            intended = uniform_bit(rng); // check ops are uniformly random
        } else if (next_message_pos < message.size()) {
            message_pos = next_message_pos;
            intended = message[next_message_pos++] != 0 ? 1 : 0;
        } else {
            intended = uniform_double(rng) < cfg.p0 ? 0 : 1; // generated padding
        }

        EncodeOp op = intended == 1 ? EncodeOp::U : EncodeOp::I;
        if (cfg.p_alice > 0.0 && uniform_double(rng) < cfg.p_alice)
            op = op == EncodeOp::U ? EncodeOp::I : EncodeOp::U; // faulty encoder

        StateVector s = apply_leading_qubit(encode_matrix(op), states[state_of[i]]);

        // (4) backward transmission and Bob's deterministic decode
        TransmitOutcome t = transmit_qubit(s, cfg.backward, rng);
        if (!t) {
            rec.fate = PhotonFate::LostBackward;
            continue;
        }
        rec.fate = is_check[i] ? PhotonFate::AliceCheckBit : PhotonFate::MessageCarrier;
        rec.encode_op = op;
        const MeasureResult m = measure_in_basis(*t, rec.prep_basis, rng);
        rec.bob_measured = m.bit;
        const int decoded_bit = m.bit ^ rec.prep_bit;

        if (is_check[i]) {
            ++check_arrived;
            if (decoded_bit != intended) ++check_errors;
        } else {
            ++delivered;
            if (decoded_bit != intended) ++carrier_errors;
            if (message_pos) out.decoded[*message_pos] = decoded_bit;
        }
    }

    out.stats.n_decoded = delivered;
    out.stats.check_compared = check_arrived;
    out.stats.e_hat_bwd = check_arrived == 0
                              ? 0.0
                              : static_cast<double>(check_errors) / static_cast<double>(check_arrived);
    out.stats.ber =
        delivered == 0 ? 0.0 : static_cast<double>(carrier_errors) / static_cast<double>(delivered);
    return out;
}

} // namespace qsdc
