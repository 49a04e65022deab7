#pragma once

#include "qobs/bitstring.hpp"
#include "qobs/complexity.hpp"

#include <string>
#include <string_view>
#include <utility>

namespace qobs {

inline constexpr double kDefaultClosenessFactor = 2.0;

/// An observer as a system identification algorithm: a complexity budget
/// (its K, supplied from outside since it is not computable) and a finite
/// memory of recorded measurement bits. Immutable; record() returns a new value.
class ObserverSIA {
public:
    /// Throws unless capacity_bits > 0 and memory fits in the capacity.
    ObserverSIA(std::string label, double capacity_bits, BitString memory = {});

    const std::string& label() const noexcept { return label_; }
    double capacity_bits() const noexcept { return capacity_bits_; }
    const BitString& memory() const noexcept { return memory_; }
    std::size_t recorded_bits() const noexcept { return memory_.size(); }

private:
    std::string label_;
    double capacity_bits_;
    BitString memory_;
};

enum class Classification { Quantum, Classical };

std::string_view to_string(Classification c);

/// Quantum iff system complexity < observer capacity; equality is classical.
Classification classify(const ComplexityEstimate& system_complexity, const ObserverSIA& observer);
Classification classify(double system_bits, double observer_capacity_bits);

/// How `watcher` sees the system and the other observer. The other observer
/// is quantum to the watcher only when it is smaller by more than
/// closeness_factor; comparable capacities make it classical.
/// Throws unless closeness_factor > 1.
std::pair<Classification, Classification> relative_view(const ObserverSIA& watcher,
                                                        const ObserverSIA& other,
                                                        const ComplexityEstimate& system_complexity,
                                                        double closeness_factor = kDefaultClosenessFactor);

enum class RecordStatus { Recorded, Saturated };

struct RecordOutcome {
    RecordStatus status;
    ObserverSIA observer; // updated on Recorded, untouched on Saturated
};

/// All-or-nothing append of info to the observer's memory.
RecordOutcome record(const ObserverSIA& observer, const BitString& info);

} // namespace qobs
