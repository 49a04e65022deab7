#include "suffix_automaton.hpp"

namespace qobs::detail {

SuffixAutomaton::SuffixAutomaton(std::size_t expected_length) {
    next_.reserve(2 * expected_length + 1);
    link_.reserve(2 * expected_length + 1);
    len_.reserve(2 * expected_length + 1);
    add_state(0, kNone, {kNone, kNone});
}

std::int32_t SuffixAutomaton::add_state(std::int32_t len, std::int32_t link,
                                        std::array<std::int32_t, 2> next) {
    next_.push_back(next);
    link_.push_back(link);
    len_.push_back(len);
    return static_cast<std::int32_t>(len_.size() - 1);
}

void SuffixAutomaton::extend(std::uint8_t c) {
    const auto cur = add_state(len_[last_] + 1, 0, {kNone, kNone});
    auto p = last_;
    while (p != kNone && next_[p][c] == kNone) {
        next_[p][c] = cur;
        p = link_[p];
    }
    if (p != kNone) {
        const auto q = next_[p][c];
        if (len_[p] + 1 == len_[q]) {
            link_[cur] = q;
        } else {
            const auto clone = add_state(len_[p] + 1, link_[q], next_[q]);
            while (p != kNone && next_[p][c] == q) {
                next_[p][c] = clone;
                p = link_[p];
            }
            link_[q] = clone;
            link_[cur] = clone;
        }
    }
    last_ = cur;
}

std::int32_t SuffixAutomaton::canonical(std::int32_t state, std::size_t length) const {
    while (state != 0 && length <= static_cast<std::size_t>(len_[link_[state]])) state = link_[state];
    return state;
}

} // namespace qobs::detail
