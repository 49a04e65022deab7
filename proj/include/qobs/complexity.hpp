#pragma once

#include "qobs/bitstring.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace qobs {

// Computable upper-bound proxies for the Kolmogorov complexity of a string.
// True K is not computable; every consumer carries the estimator tag along
// with the number it reports.

enum class Estimator {
    Lz76Phrases,          // phrase count of the exhaustive-history LZ76 parse
    Lz76NormalizedBits,   // phrase count * log2(length)
    DictionaryCodeLength, // exact bit length of the in-repo LZ78 code
};

std::string_view to_string(Estimator e);
std::optional<Estimator> estimator_from_string(std::string_view name);

struct ComplexityEstimate {
    double value_bits = 0.0;
    Estimator estimator = Estimator::DictionaryCodeLength;
    std::size_t input_length = 0;
};

/// Start offsets of the phrases of the LZ76 exhaustive-history parse. Each
/// phrase is the longest prefix of the remainder that already occurs starting
/// at an earlier position (overlap allowed), plus one innovation symbol; the
/// final phrase may end at the string end without innovation.
///
/// The parse is prefix-stable: the parse of s[0, q) is the set of starts
/// below q, so one call yields the phrase count of every prefix.
std::vector<std::size_t> lz76_phrase_starts(std::span<const std::uint8_t> symbols);

std::uint64_t lz76_phrase_count(std::span<const std::uint8_t> symbols);
std::uint64_t lz76_phrase_count(const BitString& s);

/// phrase_count * log2(n). Throws Error(InsufficientData) if n < 2.
ComplexityEstimate lz76_bits(const BitString& s);
ComplexityEstimate lz76_bits(std::span<const std::uint8_t> symbols);

// Dictionary code layout (all fields MSB first):
//
//   bit 0       mode: 0 = LZ78 dictionary payload, 1 = literal payload
//   bits 1..32  payload length n in symbols (unsigned, n < 2^32)
//   payload     literal: the n bits verbatim
//               dictionary: for phrase j = 0, 1, ... the index of its longest
//               dictionary prefix in bit_width(j) bits (entries 0..j, entry 0
//               is the empty phrase), then one innovation bit. The final phrase
//               omits the innovation bit when the input ends inside an
//               existing entry; the decoder knows from n when to stop.
//
// The encoder emits whichever payload is shorter (dictionary on ties), so
// the code never exceeds n + kDictionaryHeaderBits.
inline constexpr std::size_t kDictionaryHeaderBits = 33;

BitString dictionary_encode(std::span<const std::uint8_t> symbols);
BitString dictionary_encode(const BitString& s);

/// Throws Error(Parse) on a truncated or inconsistent code.
BitString dictionary_decode(const BitString& code);

ComplexityEstimate dictionary_code_length(const BitString& s);
ComplexityEstimate dictionary_code_length(std::span<const std::uint8_t> symbols);

/// Dispatch on the estimator tag. Lz76NormalizedBits requires n >= 2.
ComplexityEstimate estimate(std::span<const std::uint8_t> symbols, Estimator estimator);
ComplexityEstimate estimate(const BitString& s, Estimator estimator);

/// Estimates for every prefix s[0, q) with q in prefix_ends (non-decreasing),
/// computed from one parse of the full input. Lz76NormalizedBits reports 0
/// for prefixes shorter than two symbols.
std::vector<ComplexityEstimate> prefix_estimates(std::span<const std::uint8_t> symbols,
                                                 std::span<const std::size_t> prefix_ends,
                                                 Estimator estimator);

/// True iff est.value_bits >= system.dof() (the degrees-of-freedom lower
/// bound a faithful complexity must respect).
bool check_dof_bound(const ComplexityEstimate& est, const SystemSpec& system);

} // namespace qobs
