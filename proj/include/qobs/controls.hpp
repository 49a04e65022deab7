#pragma once

#include "qobs/entropy.hpp"

#include <cstdint>
#include <string>

namespace qobs {

// Synthetic single-system ensembles with known growth laws, used as positive
// and negative controls for the reality analysis.

/// Every observer emits the same identification string.
ObservationEnsemble identical_observers(const BitString& identification, std::size_t observers,
                                        std::string label = "S1");

/// Observer i emits a fresh uniform string of `bits` bits.
ObservationEnsemble independent_observers(std::size_t observers, std::size_t bits,
                                          std::uint64_t seed, std::string label = "S1");

/// Observer i emits common + tag_i, where tag_i is the first ceil(log2 i)
/// bits of one uniform random tag string. A fresh incompressible bit enters
/// only when the tag lengthens (i = 2^k + 1), so the information in the first
/// i identifications grows as log2(i).
ObservationEnsemble log_tag_observers(const BitString& common, std::size_t observers,
                                      std::uint64_t seed, std::string label = "S1");

/// ceil(log2 i) for i >= 1.
std::size_t ceil_log2(std::size_t i);

} // namespace qobs
