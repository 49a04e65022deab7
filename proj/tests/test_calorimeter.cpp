#include "oracles.hpp"
#include "support.hpp"

#include "qobs/calorimeter.hpp"
#include "qobs/error.hpp"

#include <doctest.h>

#include <cmath>

using namespace qobs;
using qt::bs;

TEST_CASE("landauer heat") {
    CHECK(landauer_heat(0.0, 300.0) == 0.0);
    CHECK(landauer_heat(1.0, 300.0) == doctest::Approx(qt::oracle::joules_per_bit(300.0)).epsilon(1e-15));
    CHECK(landauer_heat(1.0, 300.0) == doctest::Approx(2.870978885e-21).epsilon(1e-9));
    CHECK(landauer_heat(10.0, 300.0) == doctest::Approx(10 * landauer_heat(1.0, 300.0)).epsilon(1e-15));
    CHECK_THROWS_AS(landauer_heat(1.0, 0.0), Error);
    CHECK_THROWS_AS(landauer_heat(-1.0, 300.0), Error);
}

TEST_CASE("photon entropy") {
    CHECK(photon_entropy(1.0) == doctest::Approx(1.0));
    CHECK(photon_entropy(0.0) == 0.0);
    // Eigenvalues (0.75, 0.25).
    CHECK(photon_entropy(0.5) == doctest::Approx(0.8112781244591328));
    CHECK_THROWS_AS(photon_entropy(1.5), Error);
    CHECK_THROWS_AS(photon_entropy(-0.1), Error);
}

TEST_CASE("absorb") {
    SimConfig cfg;
    const PhotonEvent photon{1, 308.0, 10, 1.0};
    Rng rng(1);

    const auto first = absorb(ObserverSIA("f", 100), photon, qt::random_bits(rng, 10), cfg);
    CHECK(first.event.outcome == EventOutcome::Recorded);
    CHECK(first.event.heat_joules == 0.0);
    CHECK(first.event.memory_bits_after == 10);

    const auto full = qt::random_bits(rng, 100);
    const auto burst = absorb(ObserverSIA("f", 100, full), photon, qt::random_bits(rng, 10), cfg);
    CHECK(burst.event.outcome == EventOutcome::HeatBurst);
    CHECK(burst.event.memory_bits_after == 10);
    CHECK(burst.event.erased_complexity_bits == dictionary_code_length(full).value_bits);
    CHECK(burst.event.heat_joules >= landauer_heat(dictionary_code_length(full).value_bits, 300.0));
    CHECK(burst.event.heat_joules > 0.0);

    CHECK_THROWS_AS(absorb(ObserverSIA("f", 5), photon, qt::random_bits(rng, 10), cfg), Error);
    CHECK_THROWS_AS(absorb(ObserverSIA("f", 100), photon, qt::random_bits(rng, 9), cfg), Error);
}

TEST_CASE("erasing incompressible memory costs close to its full length") {
    SimConfig cfg;
    const PhotonEvent photon{1, 308.0, 10, 1.0};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        const auto r = absorb(ObserverSIA("f", 100, qt::random_bits(rng, 100)), photon, qt::random_bits(rng, 10), cfg);
        CHECK(r.event.erased_complexity_bits >= 100.0);
        CHECK(r.event.erased_complexity_bits <= 100.0 + kDictionaryHeaderBits);
    }
}

TEST_CASE("erase-oldest drops whole records") {
    SimConfig cfg;
    cfg.policy = SaturationPolicy::EraseOldest;
    const PhotonEvent photon{1, 308.0, 10, 1.0};
    const auto memory = qt::repeat("0110011010", 10);
    const auto r = absorb(ObserverSIA("f", 100, memory), photon, bs("1111111111"), cfg);
    CHECK(r.event.outcome == EventOutcome::HeatBurst);
    CHECK(r.observer.recorded_bits() == 100);
    CHECK(r.observer.memory().to_text().substr(90) == "1111111111");
    CHECK(r.event.erased_complexity_bits == dictionary_code_length(bs("0110011010")).value_bits);
}

TEST_CASE("ten-record memory saturates at the eleventh photon") {
    SimConfig cfg;
    cfg.record_bits_per_photon = 10;
    cfg.capacity_bits = 100;
    cfg.num_photons = 12;
    const auto r = run_experiment(cfg);
    REQUIRE(r.trace.size() == 12);
    for (std::size_t k = 0; k < 10; ++k) CHECK(r.trace[k].outcome == EventOutcome::Recorded);
    CHECK(r.trace[10].outcome == EventOutcome::HeatBurst);
    CHECK(r.trace[11].outcome == EventOutcome::Recorded);
    CHECK(r.trace[10].heat_joules == landauer_heat(r.trace[10].erased_complexity_bits, 300.0));
}

TEST_CASE("minimal capacity bursts on every photon after the first") {
    SimConfig cfg;
    cfg.capacity_bits = 10;
    cfg.num_photons = 3;
    const auto r = run_experiment(cfg);
    CHECK(r.trace[0].outcome == EventOutcome::Recorded);
    CHECK(r.trace[1].outcome == EventOutcome::HeatBurst);
    CHECK(r.trace[2].outcome == EventOutcome::HeatBurst);
}

TEST_CASE("no photons, no events") {
    SimConfig cfg;
    cfg.num_photons = 0;
    const auto r = run_experiment(cfg);
    CHECK(r.trace.empty());
    CHECK(r.final_ledger().total_bits == 0.0);
    CHECK(r.final_ledger().cumulative_heat_joules == 0.0);
}

TEST_CASE("burst positions match a replay of the memory") {
    for (std::size_t m = 1; m <= 6; ++m)
        for (std::size_t record = 1; record <= 4; ++record)
            for (double slack : {0.0, 0.5}) {
                SimConfig cfg;
                cfg.record_bits_per_photon = record;
                cfg.capacity_bits = static_cast<double>(m * record) + slack;
                cfg.num_photons = 40;
                const auto r = run_experiment(cfg);
                std::vector<std::size_t> bursts;
                for (const auto& ev : r.trace)
                    if (ev.outcome == EventOutcome::HeatBurst) bursts.push_back(ev.arrival_index);
                REQUIRE(bursts == qt::oracle::burst_photons(m * record, record, 40));
                // Closed form: photon k*m + 1 for k >= 1.
                for (std::size_t k = 0; k < bursts.size(); ++k) REQUIRE(bursts[k] == (k + 1) * m + 1);
            }
}

TEST_CASE("trace and ledger accounting") {
    for (auto policy : {SaturationPolicy::EraseAll, SaturationPolicy::EraseOldest})
        for (auto mode : {RecordMode::Random, RecordMode::Compressible})
            for (double mixedness : {0.0, 0.3, 1.0}) {
                SimConfig cfg;
                cfg.capacity_bits = 47;
                cfg.record_bits_per_photon = 6;
                cfg.num_photons = 60;
                cfg.policy = policy;
                cfg.record_mode = mode;
                cfg.polarization_mixedness = mixedness;
                const auto r = run_experiment(cfg);
                double heat = 0.0;
                for (std::size_t k = 0; k < r.trace.size(); ++k) {
                    const auto& ev = r.trace[k];
                    const auto& l = r.ledger[k];
                    CHECK(static_cast<double>(ev.memory_bits_after) <= cfg.capacity_bits);
                    if (ev.outcome == EventOutcome::Recorded) {
                        CHECK(ev.heat_joules == 0.0);
                        if (k > 0) CHECK(l.total_bits >= r.ledger[k - 1].total_bits);
                    } else {
                        CHECK(ev.heat_joules > 0.0);
                        CHECK(ev.heat_joules >= landauer_heat(ev.erased_complexity_bits, cfg.temperature_kelvin));
                    }
                    heat += ev.heat_joules;
                    CHECK(l.cumulative_heat_joules == doctest::Approx(heat));
                    CHECK(l.total_bits == l.shannon_term_bits + l.kolmogorov_term_bits);
                    CHECK(l.shannon_term_bits == doctest::Approx((k + 1) * photon_entropy(mixedness)));
                    CHECK(l.kolmogorov_term_bits >= 0.0);
                }
            }
}

TEST_CASE("compressible records give smaller bursts") {
    SimConfig random_cfg;
    random_cfg.record_bits_per_photon = 50;
    random_cfg.capacity_bits = 500;
    auto compressible_cfg = random_cfg;
    compressible_cfg.record_mode = RecordMode::Compressible;
    const auto a = run_experiment(random_cfg), b = run_experiment(compressible_cfg);
    CHECK(b.trace[10].heat_joules < 0.5 * a.trace[10].heat_joules);
}

TEST_CASE("runs are reproducible and seed-dependent") {
    SimConfig cfg;
    cfg.num_photons = 30;
    const auto a = run_experiment(cfg), b = run_experiment(cfg);
    cfg.seed = 2;
    const auto c = run_experiment(cfg);
    bool differs = false;
    for (std::size_t k = 0; k < a.trace.size(); ++k) {
        CHECK(a.trace[k].heat_joules == b.trace[k].heat_joules);
        CHECK(a.ledger[k].total_bits == b.ledger[k].total_bits);
        differs |= a.ledger[k].kolmogorov_term_bits != c.ledger[k].kolmogorov_term_bits;
    }
    CHECK(differs);
}

TEST_CASE("invalid configurations") {
    SimConfig cfg;
    cfg.capacity_bits = 5;
    CHECK_THROWS_AS(run_experiment(cfg), Error);
    cfg = {};
    cfg.temperature_kelvin = 0;
    CHECK_THROWS_AS(run_experiment(cfg), Error);
    cfg = {};
    cfg.polarization_mixedness = 2;
    CHECK_THROWS_AS(run_experiment(cfg), Error);
    cfg = {};
    cfg.record_bits_per_photon = 0;
    CHECK_THROWS_AS(run_experiment(cfg), Error);
}
