#include "qobs/controls.hpp"

#include "qobs/error.hpp"
#include "qobs/rng.hpp"

#include <bit>

namespace qobs {

std::size_t ceil_log2(std::size_t i) {
    require(i >= 1, "ceil_log2 needs a positive argument");
    return i == 1 ? 0 : static_cast<std::size_t>(std::bit_width(i - 1));
}

ObservationEnsemble identical_observers(const BitString& identification, std::size_t observers,
                                        std::string label) {
    return ObservationEnsemble::from_column(std::move(label),
                                            std::vector<BitString>(observers, identification));
}

ObservationEnsemble independent_observers(std::size_t observers, std::size_t bits,
                                          std::uint64_t seed, std::string label) {
    Rng rng(seed);
    std::vector<BitString> column;
    column.reserve(observers);
    for (std::size_t i = 0; i < observers; ++i) column.emplace_back(rng.bits(bits));
    return ObservationEnsemble::from_column(std::move(label), std::move(column));
}

ObservationEnsemble log_tag_observers(const BitString& common, std::size_t observers,
                                      std::uint64_t seed, std::string label) {
    Rng rng(seed);
    const auto tag = rng.bits(observers == 0 ? 0 : ceil_log2(observers));
    std::vector<BitString> column;
    column.reserve(observers);
    for (std::size_t i = 1; i <= observers; ++i) {
        std::vector<std::uint8_t> bits(common.bits().begin(), common.bits().end());
        bits.insert(bits.end(), tag.begin(), tag.begin() + static_cast<std::ptrdiff_t>(ceil_log2(i)));
        column.emplace_back(std::move(bits));
    }
    return ObservationEnsemble::from_column(std::move(label), std::move(column));
}

} // namespace qobs
