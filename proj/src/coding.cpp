#include "qsdc/coding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qsdc {

namespace {

constexpr std::uint64_t kCodeStream = 0x636f6465ULL;    // generator rows
constexpr std::uint64_t kChannelStream = 0x6368616eULL; // per-trial channel draws

unsigned rank_gf2(std::vector<std::uint32_t> rows) {
    unsigned rank = 0;
    for (unsigned bit = 0; bit < 32 && rank < rows.size(); ++bit) {
        const std::uint32_t mask = 1u << bit;
        std::size_t found = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r] & mask) {
                found = r;
                break;
            }
        if (found == rows.size()) continue;
        std::swap(rows[rank], rows[found]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

} // namespace

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

u128 sphere_volume(unsigned n, unsigned t) {
    if (n > 64 || t > n) throw std::invalid_argument("sphere_volume: need t <= n <= 64");
    u128 total = 0;
    u128 binom = 1; // C(n, 0)
    for (unsigned j = 0;; ++j) {
        total += binom;
        if (j == t) break;
        // C(n, j+1) = C(n, j) * (n - j) / (j + 1); exact at every step
        binom = binom * (n - j) / (j + 1);
    }
    return total;
}

Codebook random_linear_code(unsigned n, unsigned k, std::uint64_t seed) {
    if (n == 0 || n > 24 || k > n || k > 16)
        throw std::invalid_argument("random_linear_code: need k <= n <= 24 and k <= 16");

    Codebook book;
    book.n = n;
    book.k = k;

    if (k == 0) {
        book.codewords = {0};
        book.min_distance = 0;
        return book;
    }

    const std::uint32_t word_mask = n == 32 ? ~0u : ((1u << n) - 1u);
    std::vector<std::uint32_t> rows(k);
    for (;;) {
        Rng rng = derive_rng(seed, kCodeStream);
        for (auto& r : rows) r = static_cast<std::uint32_t>(rng()) & word_mask;
        if (rank_gf2(rows) == k) break;
        ++seed; // degenerate generator: retry deterministically
    }

    const std::size_t size = std::size_t(1) << k;
    book.codewords.resize(size);
    book.codewords[0] = 0;
    // Gray-code enumeration: each message flips one generator row. The full
    // rank guarantees all 2^k words are distinct.
    std::uint32_t word = 0;
    for (std::size_t m = 1; m < size; ++m) {
        word ^= rows[std::countr_zero(m)];
        book.codewords[m] = word;
    }

    // For a linear code the minimum pairwise distance is the minimum nonzero
    // weight (the difference of two codewords is a codeword).
    unsigned d = n + 1;
    for (std::uint32_t w : book.codewords)
        if (w != 0) d = std::min(d, static_cast<unsigned>(std::popcount(w)));
    book.min_distance = d;
    return book;
}

DecodeResult ml_decode(const Codebook& book, const ReceivedWord& received) {
    if (book.codewords.empty()) throw std::invalid_argument("ml_decode: empty codebook");
    const std::uint32_t keep = ~received.erased;
    DecodeResult best;
    best.distance = book.n + 1;
    for (const std::uint32_t c : book.codewords) {
        const unsigned d = static_cast<unsigned>(std::popcount((c ^ received.bits) & keep));
        if (d < best.distance) {
            best.distance = d;
            best.codeword = c;
            best.ties = 1;
        } else if (d == best.distance) {
            ++best.ties;
            if (c < best.codeword) best.codeword = c;
        }
    }
    best.ambiguous = best.ties > 1;
    return best;
}

double shannon_experiment(unsigned n, double rate, double p1, double eta, std::size_t trials,
                          std::uint64_t seed) {
    if (n == 0 || n > 20) throw std::invalid_argument("shannon_experiment: need n <= 20");
    if (trials < 1000) throw std::invalid_argument("shannon_experiment: need trials >= 1000");
    if (!(rate >= 0.0 && rate <= 1.0)) throw std::invalid_argument("rate out of [0,1]");
    if (!(p1 >= 0.0 && p1 <= 1.0) || !(eta >= 0.0 && eta <= 1.0))
        throw std::invalid_argument("channel parameters out of range");
    const unsigned k = static_cast<unsigned>(std::ceil(rate * n));
    if (k > 16) throw std::invalid_argument("rate too high: code dimension exceeds 16");

    std::size_t successes = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const Codebook book = random_linear_code(n, k, splitmix64_mix(seed ^ splitmix64_mix(t)));
        Rng rng = derive_rng(seed, kChannelStream, t);
        const std::uint32_t sent = book.codewords[uniform_below(rng, book.codewords.size())];

        ReceivedWord rec;
        rec.bits = sent;
        for (unsigned b = 0; b < n; ++b) {
            if (uniform_double(rng) < eta) {
                rec.erased |= 1u << b;
            } else if (uniform_double(rng) < p1) {
                rec.bits ^= 1u << b;
            }
        }

        const DecodeResult d = ml_decode(book, rec);
        if (!d.ambiguous && d.codeword == sent) ++successes;
    }
    return static_cast<double>(successes) / static_cast<double>(trials);
}

EveAmbiguity eve_ambiguity_experiment(unsigned n, const FecInputs& f, std::size_t trials,
                                      std::uint64_t seed) {
    if (n == 0 || n > 20) throw std::invalid_argument("eve_ambiguity_experiment: need n <= 20");
    if (trials == 0) throw std::invalid_argument("need at least one trial");

    EveAmbiguity out;
    // Largest message size the reliability condition allows, clamped to the
    // generator limits.
    const double room = 1.0 - typical_exponent(f.eta_b, f.p1());
    const unsigned k_max = std::min(16u, n);
    out.k = static_cast<unsigned>(
        std::clamp(std::floor(room * static_cast<double>(n)), 1.0, static_cast<double>(k_max)));
    const double code_rate = static_cast<double>(out.k) / static_cast<double>(n);
    const SecurityConditions cond = security_conditions(n, code_rate, f);
    out.cond_reliable = cond.reliable;
    out.cond_secure = cond.secure;

    std::size_t bob_ok = 0;
    double list_sum = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const Codebook book = random_linear_code(n, out.k, splitmix64_mix(seed ^ splitmix64_mix(t)));
        Rng rng = derive_rng(seed, kChannelStream, t);
        const std::uint32_t sent = book.codewords[uniform_below(rng, book.codewords.size())];

        ReceivedWord bob;
        bob.bits = sent;
        ReceivedWord eve;
        eve.bits = sent;
        for (unsigned b = 0; b < n; ++b) {
            const std::uint32_t mask = 1u << b;
            if (uniform_double(rng) < f.eta_b) {
                bob.erased |= mask;
            } else if (uniform_double(rng) < f.p1()) {
                bob.bits ^= mask;
            }
            if (uniform_double(rng) < f.eta_e) {
                eve.erased |= mask;
            } else if (uniform_double(rng) < f.p_a) {
                eve.bits ^= mask;
            }
        }

        const DecodeResult db = ml_decode(book, bob);
        if (!db.ambiguous && db.codeword == sent) ++bob_ok;
        list_sum += static_cast<double>(ml_decode(book, eve).ties);
    }
    out.bob_success = static_cast<double>(bob_ok) / static_cast<double>(trials);
    out.eve_list_exponent =
        std::log2(list_sum / static_cast<double>(trials)) / static_cast<double>(n);
    return out;
}

} // namespace qsdc
