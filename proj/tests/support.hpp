#pragma once

#include "qobs/bitstring.hpp"
#include "qobs/rng.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qt {

inline qobs::BitString bs(std::string_view text) { return qobs::BitString::from_text(text); }

inline qobs::BitString repeat(std::string_view unit, std::size_t times) {
    std::string s;
    for (std::size_t k = 0; k < times; ++k) s += unit;
    return bs(s);
}

inline qobs::BitString random_bits(qobs::Rng& rng, std::size_t n, double p_one = 0.5) {
    std::vector<std::uint8_t> v(n);
    for (auto& b : v) b = rng.bernoulli(p_one) ? 1 : 0;
    return qobs::BitString(std::move(v));
}

/// Every binary string of exactly n symbols, in counting order.
inline std::vector<qobs::BitString> all_strings(std::size_t n) {
    std::vector<qobs::BitString> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        std::vector<std::uint8_t> v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = (code >> (n - 1 - k)) & 1;
        out.emplace_back(std::move(v));
    }
    return out;
}

} // namespace qt
