#pragma once

#include "qobs/bitstring.hpp"
#include "qobs/observer.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace qobs {

// Discrete-event model of a single molecule in a calorimeter acting as an
// observer of absorbed photons. Each absorption writes a record into the
// molecule's finite memory; once the memory cannot take the next record the
// memory is erased and the calorimeter sees Landauer heat for the erased
// complexity.

inline constexpr double kBoltzmann = 1.380649e-23; // J/K, exact SI

/// bits * k_B * T * ln 2. Throws unless T > 0 and bits >= 0.
double landauer_heat(double bits, double temperature_kelvin);

/// Von Neumann entropy (bits) of a polarization state with eigenvalues
/// (1 - m/2, m/2): 0 for a pure state, 1 for the fully mixed one.
/// Throws unless mixedness lies in [0, 1].
double photon_entropy(double mixedness);

struct PhotonEvent {
    std::size_t arrival_index = 0;
    double wavelength_nm = 308.0;  // metadata only
    std::size_t record_bits = 1;
    double polarization_mixedness = 1.0;
};

enum class SaturationPolicy { EraseAll, EraseOldest };
enum class RecordMode { Random, Compressible };

std::string_view to_string(SaturationPolicy p);
std::string_view to_string(RecordMode m);

struct SimConfig {
    double capacity_bits = 100.0;
    std::size_t record_bits_per_photon = 10;
    double temperature_kelvin = 300.0;
    std::size_t num_photons = 12;
    SaturationPolicy policy = SaturationPolicy::EraseAll;
    RecordMode record_mode = RecordMode::Random;
    double wavelength_nm = 308.0;
    double polarization_mixedness = 1.0;
    std::uint64_t seed = 1;

    /// Throws unless the values are physical and one record fits in memory.
    void validate() const;
};

enum class EventOutcome { Recorded, HeatBurst };

std::string_view to_string(EventOutcome o);

/// What the calorimeter sees per photon. Memory contents are deliberately
/// absent: only timing, heat and occupancy are observable from outside.
struct HeatEvent {
    std::size_t arrival_index = 0;
    EventOutcome outcome = EventOutcome::Recorded;
    double heat_joules = 0.0;
    std::size_t memory_bits_after = 0;
    double erased_complexity_bits = 0.0;  // dictionary estimate of the erased string
};

struct LedgerEntry {
    double shannon_term_bits = 0.0;     // external observer's missing information
    double kolmogorov_term_bits = 0.0;  // estimate of the current memory record
    double total_bits = 0.0;            // S = H + K
    double cumulative_heat_joules = 0.0;
    double cumulative_erased_bits = 0.0;
};

struct AbsorbResult {
    ObserverSIA observer;
    HeatEvent event;
};

/// One absorption. `info` is the information the molecule stores for this
/// photon (photon.record_bits long). On saturation the configured policy
/// erases memory, the heat equals landauer_heat of the dictionary estimate of
/// the erased bits, and the new record is then stored.
AbsorbResult absorb(const ObserverSIA& observer, const PhotonEvent& photon, const BitString& info,
                    const SimConfig& config);

struct ExperimentResult {
    std::vector<HeatEvent> trace;
    std::vector<LedgerEntry> ledger;  // one entry per event
    LedgerEntry final_ledger() const { return ledger.empty() ? LedgerEntry{} : ledger.back(); }
};

/// Streams config.num_photons photons through absorb. Deterministic in the config.
ExperimentResult run_experiment(const SimConfig& config);

} // namespace qobs
