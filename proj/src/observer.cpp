#include "qobs/observer.hpp"

#include "qobs/error.hpp"

#include <cmath>

namespace qobs {

ObserverSIA::ObserverSIA(std::string label, double capacity_bits, BitString memory)
    : label_(std::move(label)), capacity_bits_(capacity_bits), memory_(std::move(memory)) {
    require(std::isfinite(capacity_bits_) && capacity_bits_ > 0.0,
            "observer capacity must be a positive number of bits");
    require(static_cast<double>(memory_.size()) <= capacity_bits_,
            "observer memory exceeds its capacity");
}

std::string_view to_string(Classification c) {
    return c == Classification::Quantum ? "QUANTUM" : "CLASSICAL";
}

Classification classify(double system_bits, double observer_capacity_bits) {
    return system_bits < observer_capacity_bits ? Classification::Quantum : Classification::Classical;
}

Classification classify(const ComplexityEstimate& system_complexity, const ObserverSIA& observer) {
    return classify(system_complexity.value_bits, observer.capacity_bits());
}

std::pair<Classification, Classification> relative_view(const ObserverSIA& watcher,
                                                        const ObserverSIA& other,
                                                        const ComplexityEstimate& system_complexity,
                                                        double closeness_factor) {
    require(std::isfinite(closeness_factor) && closeness_factor > 1.0,
            "closeness factor must exceed 1");
    return {classify(system_complexity, watcher),
            classify(other.capacity_bits() * closeness_factor, watcher.capacity_bits())};
}

RecordOutcome record(const ObserverSIA& observer, const BitString& info) {
    const auto after = static_cast<double>(observer.recorded_bits() + info.size());
    if (after > observer.capacity_bits()) return {RecordStatus::Saturated, observer};
    const BitString parts[] = {observer.memory(), info};
    return {RecordStatus::Recorded,
            ObserverSIA(observer.label(), observer.capacity_bits(), concat(parts))};
}

} // namespace qobs
