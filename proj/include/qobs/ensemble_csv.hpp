#pragma once

#include "qobs/entropy.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace qobs {

// Ensemble CSV:
//
//   observer_index,system_label,bits
//   1,S1,0101
//   ...
//
// One row per (observer, system) pair; every observer must report every
// system. Systems keep their order of first appearance, observers are sorted
// by index. Blank lines are skipped; the bits column may be empty.

/// Throws Error(Parse) naming the offending line.
ObservationEnsemble parse_ensemble_csv(std::string_view text);

/// Throws Error(Io) naming the path if it cannot be read.
ObservationEnsemble load_ensemble_csv(const std::filesystem::path& path);

std::string format_ensemble_csv(const ObservationEnsemble& ensemble);

} // namespace qobs
