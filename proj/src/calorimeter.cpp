#include "qobs/calorimeter.hpp"

#include "qobs/complexity.hpp"
#include "qobs/entropy.hpp"
#include "qobs/error.hpp"
#include "qobs/rng.hpp"

#include <cmath>
#include <numbers>

namespace qobs {

double landauer_heat(double bits, double temperature_kelvin) {
    require(std::isfinite(temperature_kelvin) && temperature_kelvin > 0.0,
            "temperature must be positive");
    require(std::isfinite(bits) && bits >= 0.0, "erased bits must be non-negative");
    return bits * kBoltzmann * temperature_kelvin * std::numbers::ln2;
}

double photon_entropy(double mixedness) {
    require(mixedness >= 0.0 && mixedness <= 1.0, "polarization mixedness must lie in [0, 1]");
    return binary_entropy(mixedness / 2.0);
}

std::string_view to_string(SaturationPolicy p) {
    return p == SaturationPolicy::EraseAll ? "ERASE_ALL" : "ERASE_OLDEST";
}

std::string_view to_string(RecordMode m) {
    return m == RecordMode::Random ? "RANDOM" : "COMPRESSIBLE";
}

std::string_view to_string(EventOutcome o) {
    return o == EventOutcome::Recorded ? "RECORDED" : "HEAT_BURST";
}

void SimConfig::validate() const {
    require(std::isfinite(capacity_bits) && capacity_bits > 0.0, "capacity_bits must be positive");
    require(record_bits_per_photon >= 1, "record_bits_per_photon must be at least 1");
    require(capacity_bits >= static_cast<double>(record_bits_per_photon),
            "capacity_bits must hold at least one photon record");
    require(std::isfinite(temperature_kelvin) && temperature_kelvin > 0.0,
            "temperature_kelvin must be positive");
    require(polarization_mixedness >= 0.0 && polarization_mixedness <= 1.0,
            "polarization_mixedness must lie in [0, 1]");
    require(std::isfinite(wavelength_nm) && wavelength_nm > 0.0, "wavelength_nm must be positive");
}

namespace {

double memory_complexity(const BitString& memory) {
    return memory.empty() ? 0.0 : dictionary_code_length(memory).value_bits;
}

} // namespace

AbsorbResult absorb(const ObserverSIA& observer, const PhotonEvent& photon, const BitString& info,
                    const SimConfig& config) {
    require(photon.record_bits >= 1, "a photon record has at least one bit");
    require(photon.polarization_mixedness >= 0.0 && photon.polarization_mixedness <= 1.0,
            "polarization mixedness must lie in [0, 1]");
    require(info.size() == photon.record_bits, "record length must match photon.record_bits");
    require(static_cast<double>(photon.record_bits) <= observer.capacity_bits(),
            "photon record exceeds the observer's total capacity");

    auto first = record(observer, info);
    if (first.status == RecordStatus::Recorded) {
        const HeatEvent ev{photon.arrival_index, EventOutcome::Recorded, 0.0,
                           first.observer.recorded_bits(), 0.0};
        return {std::move(first.observer), ev};
    }

    const auto& memory = observer.memory();
    std::size_t erase = memory.size();
    if (config.policy == SaturationPolicy::EraseOldest) {
        // Drop whole oldest records until the new one fits.
        const auto cap = static_cast<std::size_t>(std::floor(observer.capacity_bits()));
        const auto excess = memory.size() + info.size() - cap;
        const auto chunk = photon.record_bits;
        erase = std::min(memory.size(), (excess + chunk - 1) / chunk * chunk);
    }
    const auto split = memory.bits().begin() + static_cast<std::ptrdiff_t>(erase);
    const BitString erased(std::vector<std::uint8_t>(memory.bits().begin(), split));
    const BitString kept(std::vector<std::uint8_t>(split, memory.bits().end()));

    const double erased_k = dictionary_code_length(erased).value_bits;
    auto second = record(ObserverSIA(observer.label(), observer.capacity_bits(), kept), info);
    if (second.status != RecordStatus::Recorded)
        fail(ErrorKind::InvalidArgument, "record does not fit after erasure");
    HeatEvent ev{photon.arrival_index, EventOutcome::HeatBurst,
                 landauer_heat(erased_k, config.temperature_kelvin), second.observer.recorded_bits(),
                 erased_k};
    return {std::move(second.observer), ev};
}

ExperimentResult run_experiment(const SimConfig& config) {
    config.validate();
    Rng rng(config.seed);
    ObserverSIA observer("fullerene", config.capacity_bits);
    ExperimentResult out;
    out.trace.reserve(config.num_photons);
    out.ledger.reserve(config.num_photons);

    LedgerEntry ledger;
    for (std::size_t k = 1; k <= config.num_photons; ++k) {
        const PhotonEvent photon{k, config.wavelength_nm, config.record_bits_per_photon,
                                 config.polarization_mixedness};
        const BitString rec = config.record_mode == RecordMode::Random
                                  ? BitString(rng.bits(photon.record_bits))
                                  : BitString(std::vector<std::uint8_t>(photon.record_bits, 0));
        auto result = absorb(observer, photon, rec, config);
        observer = std::move(result.observer);

        ledger.shannon_term_bits += photon_entropy(photon.polarization_mixedness);
        ledger.kolmogorov_term_bits = memory_complexity(observer.memory());
        ledger.total_bits = ledger.shannon_term_bits + ledger.kolmogorov_term_bits;
        ledger.cumulative_heat_joules += result.event.heat_joules;
        ledger.cumulative_erased_bits += result.event.erased_complexity_bits;

        out.trace.push_back(result.event);
        out.ledger.push_back(ledger);
    }
    return out;
}

} // namespace qobs
