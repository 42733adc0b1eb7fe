#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <set>

#include "qsdc/coding.hpp"
#include "qsdc/rate.hpp"

using namespace qsdc;

namespace {

Codebook make_book(unsigned n, std::vector<std::uint32_t> words, unsigned min_distance) {
    Codebook b;
    b.n = n;
    b.codewords = std::move(words);
    b.min_distance = min_distance;
    return b;
}

unsigned exhaustive_pairwise_min_distance(const Codebook& b) {
    unsigned d = b.n + 1;
    for (std::size_t i = 0; i < b.codewords.size(); ++i)
        for (std::size_t j = i + 1; j < b.codewords.size(); ++j)
            d = std::min(d, static_cast<unsigned>(
                                std::popcount(b.codewords[i] ^ b.codewords[j])));
    return d;
}

} // namespace

TEST_SUITE("coding") {

TEST_CASE("sphere volumes") {
    CHECK(static_cast<std::uint64_t>(sphere_volume(5, 0)) == 1);
    CHECK(static_cast<std::uint64_t>(sphere_volume(5, 1)) == 6);
    CHECK(static_cast<std::uint64_t>(sphere_volume(10, 3)) == 176); // 1+10+45+120
    CHECK(sphere_volume(20, 20) == (u128(1) << 20));
    CHECK(sphere_volume(64, 64) == (u128(1) << 64)); // exceeds 64-bit range
    CHECK(u128_to_string(sphere_volume(64, 64)) == "18446744073709551616");
    CHECK_THROWS_AS(sphere_volume(65, 0), std::invalid_argument);
    CHECK_THROWS_AS(sphere_volume(5, 6), std::invalid_argument);
}

TEST_CASE("sphere exponents approach the entropy from below") {
    // The exact exponent stays under h(p); it grows along n wherever the
    // realized radius fraction floor(p n)/n does not shrink. (At p = 0.1 the
    // step to n = 64 drops the fraction to 6/64 and with it the exponent.)
    for (double p : {0.1, 0.25}) {
        const double target = binary_entropy(p);
        double prev_exponent = -1.0;
        double prev_fraction = -1.0;
        double prev_gap = 2.0;
        for (unsigned n : {10u, 20u, 40u, 64u}) {
            const unsigned t = static_cast<unsigned>(p * n);
            const double exponent =
                std::log2(static_cast<double>(sphere_volume(n, t))) / static_cast<double>(n);
            const double fraction = static_cast<double>(t) / static_cast<double>(n);
            CHECK(exponent < target);
            if (fraction >= prev_fraction) {
                CHECK(exponent > prev_exponent);
                CHECK(target - exponent < prev_gap);
                prev_gap = target - exponent;
            }
            prev_exponent = exponent;
            prev_fraction = fraction;
        }
    }
}

TEST_CASE("degenerate code dimensions") {
    const Codebook zero = random_linear_code(8, 0, 1);
    REQUIRE(zero.codewords.size() == 1);
    CHECK(zero.codewords[0] == 0);
    CHECK(zero.min_distance == 0);

    const Codebook full = random_linear_code(10, 10, 1);
    CHECK(full.codewords.size() == 1024);
    std::set<std::uint32_t> uniq(full.codewords.begin(), full.codewords.end());
    CHECK(uniq.size() == 1024);
    CHECK(full.min_distance == 1);
}

TEST_CASE("random linear codes are linear with distinct words") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Codebook b = random_linear_code(12, 6, seed);
        REQUIRE(b.codewords.size() == 64);
        std::set<std::uint32_t> words(b.codewords.begin(), b.codewords.end());
        CHECK(words.size() == 64);
        for (std::uint32_t x : b.codewords)
            for (std::uint32_t y : b.codewords) CHECK(words.count(x ^ y) == 1);
    }
}

TEST_CASE("recorded minimum distance matches the exhaustive pairwise check") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const unsigned n = 6 + seed % 7; // 6..12
        const unsigned k = 1 + seed % n;
        const Codebook b = random_linear_code(n, k, seed);
        CHECK(b.min_distance == exhaustive_pairwise_min_distance(b));
    }
}

TEST_CASE("rank-deficient draws regenerate deterministically") {
    // square generators are singular most of the time; the retry loop must
    // still deliver a full-rank code, and repeatably so
    const Codebook a = random_linear_code(16, 16, 123);
    const Codebook b = random_linear_code(16, 16, 123);
    CHECK(a.codewords.size() == 65536);
    CHECK(a.codewords == b.codewords);
}

TEST_CASE("ml decoding on hand-built books") {
    const Codebook rep5 = make_book(5, {0b00000, 0b11111}, 5);

    SUBCASE("clean codeword decodes to itself") {
        const DecodeResult r = ml_decode(rep5, {0b11111, 0});
        CHECK(r.codeword == 0b11111);
        CHECK(r.distance == 0);
        CHECK_FALSE(r.ambiguous);
    }
    SUBCASE("one flip stays inside the sphere") {
        const DecodeResult r = ml_decode(rep5, {0b00010, 0});
        CHECK(r.codeword == 0);
        CHECK(r.distance == 1);
        CHECK_FALSE(r.ambiguous);
    }
    SUBCASE("erasures are skipped positions") {
        const DecodeResult r = ml_decode(rep5, {0b00011, 0b00011});
        CHECK(r.codeword == 0);
        CHECK(r.distance == 0);
        CHECK_FALSE(r.ambiguous);
    }
    SUBCASE("fully erased words tie every codeword") {
        const Codebook two = make_book(2, {0b00, 0b11}, 2);
        const DecodeResult r = ml_decode(two, {0b01, 0b11});
        CHECK(r.ambiguous);
        CHECK(r.ties == 2);
        CHECK(r.distance == 0);
    }
}

TEST_CASE("weight-t errors decode unambiguously inside the packing radius") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const unsigned n = 4 + seed % 7; // 4..10
        const unsigned k = 1 + seed % 4;
        const Codebook book = random_linear_code(n, std::min(k, n), seed * 19);
        const unsigned t = (book.min_distance - 1) / 2;
        for (const std::uint32_t c : book.codewords) {
            for (std::uint32_t err = 0; err < (1u << n); ++err) {
                if (static_cast<unsigned>(std::popcount(err)) > t) continue;
                const DecodeResult r = ml_decode(book, {c ^ err, 0});
                CHECK_FALSE(r.ambiguous);
                CHECK(r.codeword == c);
            }
        }
    }
}

TEST_CASE("noiseless transmission always succeeds") {
    CHECK(shannon_experiment(15, 0.2, 0.0, 0.0, 1000, 3) == doctest::Approx(1.0));
}

TEST_CASE("uncoded transmission cannot correct errors") {
    CHECK(shannon_experiment(15, 1.0, 0.05, 0.0, 1000, 3) < 1.0);
}

TEST_CASE("success is nonincreasing in the code rate") {
    const double slack = 3.0 * std::sqrt(0.25 / 5000.0);
    double prev = 2.0;
    for (double rate : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double s = shannon_experiment(15, rate, 0.05, 0.0, 5000, 11);
        CHECK(s <= prev + slack);
        prev = s;
    }
}

TEST_CASE("shannon experiment validates its inputs") {
    CHECK_THROWS_AS(shannon_experiment(25, 0.5, 0.0, 0.0, 1000, 1), std::invalid_argument);
    CHECK_THROWS_AS(shannon_experiment(15, 0.5, 0.0, 0.0, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(shannon_experiment(20, 0.9, 0.0, 0.0, 1000, 1), std::invalid_argument);
}

TEST_CASE("a blind Eve is left with the whole codebook") {
    FecInputs f;
    f.eta_e = 1.0;
    f.eta_b = 0.0;
    f.p_a = 0.01;
    f.p_c = 0.03;
    const EveAmbiguity r = eve_ambiguity_experiment(16, f, 500, 5);
    CHECK(r.eve_list_exponent ==
          doctest::Approx(static_cast<double>(r.k) / 16.0).epsilon(1e-12));
}

TEST_CASE("a perfect Eve pins the codeword") {
    FecInputs f;
    f.eta_e = 0.0;
    f.eta_b = 0.0;
    f.p_a = 0.0;
    f.p_c = 0.03;
    const EveAmbiguity r = eve_ambiguity_experiment(16, f, 500, 5);
    CHECK(r.eve_list_exponent == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.bob_success > 0.0);
}

TEST_CASE("eve's ambiguity grows with her loss") {
    FecInputs f;
    f.eta_b = 0.0;
    f.p_a = 0.01;
    f.p_c = 0.03;
    double prev = -1.0;
    for (double eta_e : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        f.eta_e = eta_e;
        const EveAmbiguity r = eve_ambiguity_experiment(16, f, 2000, 7);
        CHECK(r.eve_list_exponent >= prev - 1e-9);
        prev = r.eve_list_exponent;
    }
}

} // TEST_SUITE
