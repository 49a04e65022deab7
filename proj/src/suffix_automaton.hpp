#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace qobs::detail {

/// Online suffix automaton over the binary alphabet {0, 1}.
///
/// A state stands for the substrings whose lengths lie in
/// (len[link[v]], len[v]]. Extending the text may split a state, moving its
/// shorter strings into a clone; callers holding a (state, length) pair
/// re-anchor it with canonical().
class SuffixAutomaton {
public:
    static constexpr std::int32_t kNone = -1;

    explicit SuffixAutomaton(std::size_t expected_length);

    void extend(std::uint8_t symbol);

    std::int32_t transition(std::int32_t state, std::uint8_t symbol) const {
        return next_[static_cast<std::size_t>(state)][symbol];
    }

    /// Climbs suffix links until `state` is the one holding the length-`length`
    /// string it used to hold.
    std::int32_t canonical(std::int32_t state, std::size_t length) const;

private:
    std::int32_t add_state(std::int32_t len, std::int32_t link, std::array<std::int32_t, 2> next);

    std::vector<std::array<std::int32_t, 2>> next_;
    std::vector<std::int32_t> link_;
    std::vector<std::int32_t> len_;
    std::int32_t last_ = 0;
};

} // namespace qobs::detail
