#include "oracles.hpp"
#include "support.hpp"

#include "qobs/complexity.hpp"
#include "qobs/error.hpp"

#include <doctest.h>

#include <cmath>

using namespace qobs;
using qt::bs;

TEST_CASE("lz76 phrase counts of small strings") {
    CHECK(lz76_phrase_count(bs("")) == 0);
    CHECK(lz76_phrase_count(bs("0")) == 1);
    CHECK(lz76_phrase_count(bs("0000000000")) == 2);
    CHECK(lz76_phrase_count(bs("01")) == 2);
    CHECK(lz76_phrase_count(bs("0101101000101")) == qt::oracle::lz76_count("0101101000101"));
    CHECK(lz76_phrase_count(qt::repeat("01", 8)) == 3);
}

TEST_CASE("lz76 parse matches the brute-force parser on every string up to length 12") {
    for (std::size_t n = 1; n <= 12; ++n)
        for (const auto& s : qt::all_strings(n)) {
            const auto text = s.to_text();
            const auto expected = qt::oracle::lz76_starts(text);
            REQUIRE_MESSAGE(lz76_phrase_starts(s.bits()) == expected, text);
        }
}

TEST_CASE("lz76 parse matches the brute-force parser on longer random strings") {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const double p = trial % 3 == 0 ? 0.5 : rng.uniform01();
        const auto s = qt::random_bits(rng, 1 + rng.next() % 300, p);
        REQUIRE(lz76_phrase_starts(s.bits()) == qt::oracle::lz76_starts(s.to_text()));
    }
}

TEST_CASE("lz76 normalized bits") {
    const auto e = lz76_bits(bs("0000000000"));
    CHECK(e.value_bits == doctest::Approx(2.0 * std::log2(10.0)));
    CHECK(e.value_bits == doctest::Approx(6.64).epsilon(0.001));
    CHECK(e.estimator == Estimator::Lz76NormalizedBits);
    CHECK(e.input_length == 10);
    CHECK(lz76_bits(bs("01")).value_bits == doctest::Approx(2.0));
    CHECK_THROWS_AS(lz76_bits(bs("1")), Error);
    CHECK_THROWS_AS(lz76_bits(bs("")), Error);
}

TEST_CASE("lz76 per-symbol bits approach the source entropy") {
    for (double p : {0.5, 0.1}) {
        const double h = -p * std::log2(p) - (1 - p) * std::log2(1 - p);
        double sum = 0.0;
        const int seeds = 20;
        for (int seed = 0; seed < seeds; ++seed) {
            Rng rng(1000 + seed);
            const auto s = qt::random_bits(rng, std::size_t{1} << 17, p);
            sum += lz76_bits(s).value_bits / static_cast<double>(s.size());
        }
        CHECK(sum / seeds == doctest::Approx(h).epsilon(0.05));
    }
}

TEST_CASE("repetition grows sub-linearly") {
    const std::string unit = "0110100";
    std::uint64_t previous = 0;
    for (std::size_t k : {8, 64, 512, 4096}) {
        const auto c = lz76_phrase_count(qt::repeat(unit, k));
        CHECK(c <= 8);
        CHECK(c >= previous);
        previous = c;
    }
    double per_symbol = 2.0;
    for (std::size_t k : {64, 512, 4096}) {
        const auto s = qt::repeat(unit, k);
        const double now = dictionary_code_length(s).value_bits / static_cast<double>(s.size());
        CHECK(now < per_symbol);
        per_symbol = now;
    }
}

TEST_CASE("dictionary code of the empty string is the header") {
    CHECK(dictionary_code_length(bs("")).value_bits == kDictionaryHeaderBits);
    CHECK(dictionary_decode(dictionary_encode(bs(""))) == bs(""));
}

TEST_CASE("dictionary code round-trips every short string") {
    for (std::size_t n = 1; n <= 12; ++n)
        for (const auto& s : qt::all_strings(n)) {
            const auto code = dictionary_encode(s);
            REQUIRE(dictionary_decode(code) == s);
            REQUIRE(code.size() <= n + kDictionaryHeaderBits);
            REQUIRE(dictionary_code_length(s).value_bits == static_cast<double>(code.size()));
        }
}

TEST_CASE("dictionary code round-trips random strings of many shapes") {
    Rng rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        const double p = trial % 2 ? 0.5 : rng.uniform01() * 0.2;
        const auto s = qt::random_bits(rng, rng.next() % 5000, p);
        const auto code = dictionary_encode(s);
        REQUIRE(dictionary_decode(code) == s);
        REQUIRE(code.size() <= s.size() + kDictionaryHeaderBits);
    }
}

TEST_CASE("dictionary code of a long constant string is small") {
    const auto zeros = qt::repeat("0", 4096);
    CHECK(dictionary_code_length(zeros).value_bits < 0.25 * 4096);
    CHECK(dictionary_decode(dictionary_encode(zeros)) == zeros);
}

TEST_CASE("corrupted dictionary codes are rejected") {
    const auto code = dictionary_encode(qt::repeat("0010111", 20)).to_text();
    CHECK_THROWS_AS(dictionary_decode(bs(code.substr(0, code.size() - 3))), Error);
    CHECK_THROWS_AS(dictionary_decode(bs(code + "0")), Error);
    CHECK_THROWS_AS(dictionary_decode(bs(code.substr(0, 20))), Error);
    // Literal mode announcing 5 payload bits but carrying 4.
    CHECK_THROWS_AS(dictionary_decode(bs("1" + std::string(29, '0') + "101" + "0110")), Error);
}

// L(ab) <= L(a) + L(b) + header holds when both parts come from one source or
// when the inputs are short. Mixed sources (a compressible prefix followed by
// incompressible data) break any constant: the later phrases pay for wider
// dictionary indices, an excess that grows with the length of the prefix.
TEST_CASE("dictionary concatenation bound") {
    const double c = kDictionaryHeaderBits;
    auto L = [](const BitString& s) { return dictionary_code_length(s).value_bits; };
    auto check_pair = [&](const BitString& a, const BitString& b) {
        std::vector<BitString> ab{a, b};
        REQUIRE(L(concat(ab)) <= L(a) + L(b) + c);
    };

    SUBCASE("all pairs of strings up to length 7") {
        std::vector<BitString> small{bs("")};
        for (std::size_t n = 1; n <= 7; ++n)
            for (auto& s : qt::all_strings(n)) small.push_back(s);
        for (const auto& a : small)
            for (const auto& b : small) check_pair(a, b);
    }
    SUBCASE("same-source pairs up to 4096 bits each") {
        Rng rng(5);
        for (int trial = 0; trial < 300; ++trial) {
            const double p = rng.uniform01();
            check_pair(qt::random_bits(rng, rng.next() % 4097, p), qt::random_bits(rng, rng.next() % 4097, p));
        }
    }
    SUBCASE("a string followed by itself") {
        Rng rng(6);
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = qt::random_bits(rng, rng.next() % 4097, rng.uniform01());
            check_pair(a, a);
        }
    }
}

TEST_CASE("prefix estimates equal direct estimates of each prefix") {
    Rng rng(9);
    for (auto est : {Estimator::Lz76Phrases, Estimator::Lz76NormalizedBits, Estimator::DictionaryCodeLength}) {
        for (int trial = 0; trial < 40; ++trial) {
            const auto s = qt::random_bits(rng, 1 + rng.next() % 600, trial % 2 ? 0.5 : 0.1);
            std::vector<std::size_t> ends;
            for (std::size_t q = 0; q <= s.size(); q += 1 + rng.next() % 7) ends.push_back(q);
            ends.push_back(s.size());
            const auto got = prefix_estimates(s.bits(), ends, est);
            REQUIRE(got.size() == ends.size());
            for (std::size_t k = 0; k < ends.size(); ++k) {
                const auto prefix = s.bits().first(ends[k]);
                const double expected = est == Estimator::Lz76NormalizedBits && ends[k] < 2
                                            ? 0.0
                                            : estimate(prefix, est).value_bits;
                REQUIRE(got[k].value_bits == doctest::Approx(expected).epsilon(1e-12));
                REQUIRE(got[k].input_length == ends[k]);
            }
        }
    }
}

TEST_CASE("estimates are non-negative and deterministic") {
    Rng rng(4);
    const auto s = qt::random_bits(rng, 777);
    for (auto est : {Estimator::Lz76Phrases, Estimator::Lz76NormalizedBits, Estimator::DictionaryCodeLength}) {
        const auto a = estimate(s, est), b = estimate(s, est);
        CHECK(a.value_bits >= 0.0);
        CHECK(a.value_bits == b.value_bits);
        CHECK(a.estimator == est);
    }
}

TEST_CASE("estimator names") {
    for (auto est : {Estimator::Lz76Phrases, Estimator::Lz76NormalizedBits, Estimator::DictionaryCodeLength})
        CHECK(estimator_from_string(to_string(est)) == est);
    CHECK(to_string(Estimator::DictionaryCodeLength) == "DICTIONARY_CODE_LENGTH");
    CHECK_FALSE(estimator_from_string("gzip").has_value());
}

TEST_CASE("degrees-of-freedom bound") {
    const auto spin = SystemSpec::spins("spin", 1);
    for (std::int64_t v : {-1, 1}) {
        const auto code = encode_parameters(spin, std::vector<std::int64_t>{v});
        CHECK(check_dof_bound(estimate(code, Estimator::Lz76Phrases), spin));
        CHECK(check_dof_bound(estimate(code, Estimator::DictionaryCodeLength), spin));
    }
    const auto eight = SystemSpec::spins("eight", 8);
    for (const auto& s : qt::all_strings(8)) CHECK(check_dof_bound(dictionary_code_length(s), eight));
}
