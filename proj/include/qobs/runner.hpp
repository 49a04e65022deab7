#pragma once

#include "qobs/calorimeter.hpp"
#include "qobs/complexity.hpp"
#include "qobs/entropy.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace qobs {

// Flat key-value scenario configuration:
//
//   # comment
//   command = reality
//   ensemble = data/observers.csv
//   tol = 0.01
//
// Keys (unknown keys are rejected):
//   command                complexity | entropy | reality | calorimeter | demo
//   in, bits               complexity input: file of '0'/'1' text, or the text itself
//   ensemble               ensemble CSV path (entropy, reality)
//   estimator              LZ76_PHRASES | LZ76_NORMALIZED_BITS | DICTIONARY_CODE_LENGTH
//   tol, max_block         zero-rate tolerance (bits) and plug-in block length
//   capacity_bits          observer capacity; reality adds an observer-bound column
//   record_bits_per_photon, temperature_kelvin, num_photons, policy,
//   record_mode, wavelength_nm, polarization_mixedness   calorimeter parameters
//   seed                   RNG seed for every stochastic step
//   out                    output directory
//
// Numbers are written with fixed rules: bits and rates "%.6f", joules "%.6e".

struct ScenarioConfig {
    std::string command;
    std::string in;
    std::optional<std::string> bits;
    std::string ensemble;
    Estimator estimator = Estimator::Lz76NormalizedBits;
    double tol = kDefaultZeroRateTolerance;
    std::size_t max_block = kDefaultMaxBlock;
    std::optional<double> capacity_bits;
    std::size_t record_bits_per_photon = 10;
    double temperature_kelvin = 300.0;
    std::size_t num_photons = 12;
    SaturationPolicy policy = SaturationPolicy::EraseAll;
    RecordMode record_mode = RecordMode::Random;
    double wavelength_nm = 308.0;
    double polarization_mixedness = 1.0;
    std::uint64_t seed = 1;
    std::string out;

    /// Throws Error(Parse) for unknown keys or malformed values.
    void set(std::string_view key, std::string_view value);

    /// Applies every `key = value` line of the text.
    void merge_text(std::string_view text);
    void merge_file(const std::filesystem::path& path);

    /// Throws Error(InvalidArgument) for out-of-range values.
    void validate() const;

    /// Calorimeter parameters with defaults resolved: capacity defaults to
    /// ten photon records.
    SimConfig sim_config() const;

    /// Effective configuration for the command, every default resolved.
    std::string to_text() const;
};

/// Runs the configured command, writing human-readable output to `out` and
/// data files under config.out. Identical config and inputs give
/// byte-identical files. Throws qobs::Error on any failure.
void run(const ScenarioConfig& config, std::ostream& out);

/// Formats one number by the fixed rules above.
std::string format_bits(double v);
std::string format_joules(double v);

} // namespace qobs
