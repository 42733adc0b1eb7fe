#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsdc/rate.hpp"
#include "qsdc/rng.hpp"

namespace qsdc {

using u128 = unsigned __int128;

std::string u128_to_string(u128 v);

/// Number of n-bit words within Hamming distance t of a fixed word,
/// sum_{j<=t} C(n, j), computed exactly. Requires t <= n <= 64.
u128 sphere_volume(unsigned n, unsigned t);

/// Explicit n-bit codeword set for exhaustive decoding experiments.
struct Codebook {
    unsigned n = 0;
    std::vector<std::uint32_t> codewords; // distinct; order unspecified
    std::optional<unsigned> k;            // log2(size) when size is a power of two
    unsigned min_distance = 0;            // 0 when fewer than two codewords
};

/// Codebook spanned by k random generator rows over GF(2). A rank-deficient
/// draw retries deterministically with seed + 1. Requires k <= n <= 24 and
/// k <= 16.
Codebook random_linear_code(unsigned n, unsigned k, std::uint64_t seed);

/// Word with erased positions; erased bits are ignored by the decoder.
struct ReceivedWord {
    std::uint32_t bits = 0;
    std::uint32_t erased = 0; // mask
};

struct DecodeResult {
    std::uint32_t codeword = 0; // smallest codeword attaining the minimum
    unsigned distance = 0;      // Hamming distance over non-erased positions
    std::size_t ties = 0;       // codewords attaining the minimum
    bool ambiguous = false;     // ties > 1; never silently broken
};

/// Minimum-distance decoding with erasures skipped.
DecodeResult ml_decode(const Codebook& book, const ReceivedWord& received);

/// Fraction of trials in which a random codeword of a fresh random linear code
/// at rate ceil(rate*n)/n survives bit flips (p1) and erasures (eta) and is
/// decoded back correctly and unambiguously. Requires n <= 20, trials >= 1000.
double shannon_experiment(unsigned n, double rate, double p1, double eta, std::size_t trials,
                          std::uint64_t seed);

struct EveAmbiguity {
    double bob_success = 0.0;       // correct-and-unambiguous decodes / trials
    double eve_list_exponent = 0.0; // (1/n) log2 of Eve's mean tie-list size
    unsigned k = 0;                 // message bits per block, from the reliability condition
    bool cond_reliable = false;
    bool cond_secure = false;
};

/// Bob observes each codeword through (flip p1, erase eta_b), Eve through
/// (flip p_a, erase eta_e). Eve's ambiguity is the number of codewords tied at
/// her minimum attained distance; its mean log-size per symbol tracks
/// secure_efficiency as a trend. Requires n <= 20, trials >= 1.
EveAmbiguity eve_ambiguity_experiment(unsigned n, const FecInputs& f, std::size_t trials,
                                      std::uint64_t seed);

} // namespace qsdc
