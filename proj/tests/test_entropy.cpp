#include "oracles.hpp"
#include "support.hpp"

#include "qobs/controls.hpp"
#include "qobs/entropy.hpp"
#include "qobs/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace qobs;
using qt::bs;

namespace {

std::vector<BitString> texts_to_bits(const std::vector<std::string>& texts) {
    std::vector<BitString> out;
    for (const auto& t : texts) out.push_back(bs(t));
    return out;
}

std::vector<std::string> bits_to_texts(std::span<const BitString> seq) {
    std::vector<std::string> out;
    for (const auto& s : seq) out.push_back(s.to_text());
    return out;
}

} // namespace

TEST_CASE("shannon entropy of small tables") {
    CHECK(shannon_entropy(std::vector<double>{1.0}) == 0.0);
    CHECK(shannon_entropy(std::vector<double>{0.5, 0.5}) == doctest::Approx(1.0));
    CHECK(shannon_entropy(std::vector<double>{0.5, 0.25, 0.25}) == doctest::Approx(1.5));
    CHECK(shannon_entropy(std::vector<double>{0.0, 1.0}) == 0.0);

    const ProbabilityTable t({bs("00"), bs("01"), bs("10")}, {0.5, 0.25, 0.25});
    CHECK(shannon_entropy(t) == doctest::Approx(1.5));
    CHECK(t.string_length() == 2);
}

TEST_CASE("invalid probability tables") {
    CHECK_THROWS_AS(ProbabilityTable({bs("0"), bs("1")}, {0.5, 0.6}), Error);
    CHECK_THROWS_AS(ProbabilityTable({bs("0"), bs("0")}, {0.5, 0.5}), Error);
    CHECK_THROWS_AS(ProbabilityTable({bs("0"), bs("10")}, {0.5, 0.5}), Error);
    CHECK_THROWS_AS(ProbabilityTable({bs("0"), bs("1")}, {1.5, -0.5}), Error);
    CHECK_THROWS_AS(ProbabilityTable({bs("0")}, {1.0, 0.0}), Error);
}

TEST_CASE("uniform tables reach r bits and the value ignores order") {
    for (std::size_t r = 1; r <= 8; ++r) {
        const auto outcomes = qt::all_strings(r);
        std::vector<double> q(outcomes.size(), 1.0 / static_cast<double>(outcomes.size()));
        CHECK(shannon_entropy(ProbabilityTable(outcomes, q)) == doctest::Approx(static_cast<double>(r)));
    }
    std::vector<double> q{0.1, 0.2, 0.3, 0.4};
    const double h = shannon_entropy(q);
    std::sort(q.begin(), q.end());
    do {
        CHECK(shannon_entropy(q) == doctest::Approx(h).epsilon(1e-14));
    } while (std::next_permutation(q.begin(), q.end()));
    CHECK(h < 2.0);
}

TEST_CASE("block entropy of constant and alternating sequences") {
    const auto constant = texts_to_bits(std::vector<std::string>(20, "01"));
    for (std::size_t m = 1; m <= 5; ++m) CHECK(block_entropy(constant, m) == 0.0);

    std::vector<std::string> alt;
    for (int k = 0; k < 20; ++k) alt.push_back(k % 2 ? "1" : "00");
    const auto seq = texts_to_bits(alt);
    CHECK(block_entropy(seq, 1) == doctest::Approx(1.0));
    CHECK(block_entropy(seq, 2) == doctest::Approx(qt::oracle::block_entropy(alt, 2)));
    CHECK(block_entropy(seq, 2) == doctest::Approx(1.0).epsilon(0.01));
    CHECK_THROWS_AS(block_entropy(seq, 21), Error);
    CHECK_THROWS_AS(block_entropy(seq, 0), Error);
}

TEST_CASE("block entropy matches direct enumeration") {
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::string> seq;
        const auto len = 5 + rng.next() % 60;
        for (std::size_t k = 0; k < len; ++k) seq.push_back(qt::random_bits(rng, rng.next() % 3).to_text());
        const auto bits = texts_to_bits(seq);
        for (std::size_t m = 1; m <= 4; ++m)
            REQUIRE(block_entropy(bits, m) == doctest::Approx(qt::oracle::block_entropy(seq, m)).epsilon(1e-12));
    }
}

TEST_CASE("block entropy of an iid source over four strings") {
    const ProbabilityTable t({bs("00"), bs("01"), bs("10"), bs("11")}, {0.25, 0.25, 0.25, 0.25});
    const auto seq = generate(ProcessModel::iid(t, 4), 100000);
    CHECK(block_entropy(seq, 1) == doctest::Approx(2.0).epsilon(0.025));
}

TEST_CASE("plug-in rate") {
    const auto constant = generate(ProcessModel::constant_string(bs("0110")), 100);
    const auto r = entropy_rate_plugin(constant, 3);
    CHECK(r.rate == 0.0);
    CHECK(r.block_entropy.size() == 4);

    const ProbabilityTable coin({bs("0"), bs("1")}, {0.5, 0.5});
    const auto flips = generate(ProcessModel::iid(coin, 8), 100000);
    CHECK(entropy_rate_plugin(flips, 2).rate == doctest::Approx(1.0).epsilon(0.05));

    const auto markov = generate(ProcessModel::binary_flip(0.1, 12), 100000);
    CHECK(entropy_rate_plugin(markov, 2).rate == doctest::Approx(binary_entropy(0.1)).epsilon(0.1));

    CHECK_THROWS_AS(entropy_rate_plugin(constant, 11), Error);
}

TEST_CASE("plug-in rate of periodic sequences vanishes once the block exceeds the period") {
    std::vector<BitString> seq;
    const std::vector<std::string> period{"0", "10", "0", "111"};
    for (int k = 0; k < 200; ++k) seq.push_back(bs(period[k % period.size()]));
    // Preperiod of three distinct strings before the cycle.
    seq.insert(seq.begin(), {bs("1111"), bs("000"), bs("01")});
    for (std::size_t m = period.size() + 1; m <= 8; ++m) CHECK(entropy_rate_plugin(seq, m).rate == 0.0);
}

TEST_CASE("lz rate") {
    const auto zeros = generate(ProcessModel::constant_string(bs("0")), 1 << 14);
    CHECK(entropy_rate_lz(zeros) < 0.05);
    const auto alternating = generate(ProcessModel::constant_string(bs("01")), 1 << 13);
    CHECK(entropy_rate_lz(alternating) < 0.05);
    CHECK_THROWS_AS(entropy_rate_lz(texts_to_bits({"1"})), Error);
}

TEST_CASE("the two rate estimators agree on synthetic sources") {
    const ProbabilityTable coin({bs("0"), bs("1")}, {0.5, 0.5});
    const ProbabilityTable biased({bs("0"), bs("1")}, {0.8, 0.2});
    for (const auto& model : {ProcessModel::iid(coin, 1), ProcessModel::iid(biased, 2),
                              ProcessModel::binary_flip(0.1, 3), ProcessModel::binary_flip(0.3, 4)}) {
        const auto seq = generate(model, 100000);
        const double plugin = entropy_rate_plugin(seq, 2).rate;
        CHECK(entropy_rate_lz(seq) == doctest::Approx(plugin).epsilon(0.1));
    }
}

TEST_CASE("generation") {
    CHECK(generate(ProcessModel::constant_string(bs("01")), 3) == texts_to_bits({"01", "01", "01"}));

    const ProbabilityTable degenerate({bs("01")}, {1.0});
    CHECK(generate(ProcessModel::iid(degenerate, 99), 5) ==
          generate(ProcessModel::constant_string(bs("01")), 5));

    const MarkovChain still{{bs("0"), bs("1")}, {{1.0, 0.0}, {0.0, 1.0}}, {1.0, 0.0}};
    CHECK(bits_to_texts(generate(ProcessModel::markov_chain(still, 5), 6)) ==
          std::vector<std::string>(6, "0"));

    const auto a = generate(ProcessModel::binary_flip(0.2, 77), 500);
    CHECK(a == generate(ProcessModel::binary_flip(0.2, 77), 500));
    CHECK(a != generate(ProcessModel::binary_flip(0.2, 78), 500));

    const MarkovChain leaky{{bs("0"), bs("1")}, {{0.5, 0.6}, {0.0, 1.0}}, {1.0, 0.0}};
    CHECK_THROWS_AS(generate(ProcessModel::markov_chain(leaky, 1), 3), Error);
}

TEST_CASE("ensemble construction checks its shape") {
    CHECK_THROWS_AS(ObservationEnsemble({1, 2}, {"S"}, {{bs("0")}}), Error);
    CHECK_THROWS_AS(ObservationEnsemble({2, 1}, {"S"}, {{bs("0"), bs("1")}}), Error);
    CHECK_THROWS_AS(ObservationEnsemble({1, 2}, {"S", "S"}, {{bs("0"), bs("1")}, {bs("0"), bs("1")}}), Error);
    const ObservationEnsemble e({1, 2}, {"A", "B"}, {{bs("0"), bs("1")}, {bs("11"), bs("")}});
    CHECK(e.find_system("B") == 1u);
    CHECK_FALSE(e.find_system("C"));
    CHECK_THROWS_AS(e.column(2), Error);
}

TEST_CASE("zero entropy rate") {
    const auto same = identical_observers(qt::repeat("10", 64), 64);
    CHECK(is_zero_entropy_rate(same, 0, 0.01));

    const auto random = independent_observers(64, 64, 5);
    const auto r = zero_rate_report(random, 0);
    CHECK_FALSE(r.zero);
    CHECK(r.lz_rate > 0.9);

    const auto single = ObservationEnsemble::from_column("S", {bs("01")});
    CHECK_THROWS_AS(is_zero_entropy_rate(single, 0, 0.01), Error);
    CHECK_THROWS_AS(is_zero_entropy_rate(same, 1, 0.01), Error);
    CHECK_THROWS_AS(is_zero_entropy_rate(same, 0, 0.0), Error);
}

TEST_CASE("short ensembles fall back to single-string blocks") {
    const auto few = independent_observers(9, 8, 1);
    const auto r = zero_rate_report(few, 0, 0.01, 2);
    CHECK(r.block_used == 1);
    CHECK(r.plugin_rate == doctest::Approx(qt::oracle::block_entropy(bits_to_texts(few.column(0)), 1)));
    CHECK(zero_rate_report(independent_observers(40, 8, 1), 0, 0.01, 9).block_used == 4);
}
