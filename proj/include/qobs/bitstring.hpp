#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qobs {

/// Finite binary string. Symbols are stored one per byte (0 or 1); the
/// textual form is '0'/'1' characters, first symbol leftmost.
class BitString {
public:
    BitString() = default;

    /// Throws Error(InvalidArgument) if any symbol is not 0 or 1.
    explicit BitString(std::vector<std::uint8_t> bits);

    /// Parses '0'/'1' text. Any other character is rejected.
    static BitString from_text(std::string_view text);

    std::string to_text() const;

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    friend bool operator==(const BitString&, const BitString&) = default;
    friend auto operator<=>(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

BitString concat(std::span<const BitString> parts);

/// Raw symbol concatenation, used on hot paths where no BitString is needed.
std::vector<std::uint8_t> concat_symbols(std::span<const BitString> parts);

/// One degree of freedom and its fixed-width code.
///  - Spin: values {-1, +1}, one bit, +1 -> "1", -1 -> "0".
///  - Range: integers in [lo, hi], coded as (value - lo) unsigned, MSB first,
///    in max(1, ceil(log2(hi - lo + 1))) bits.
struct ParameterField {
    enum class Kind { Spin, Range };

    Kind kind = Kind::Spin;
    std::int64_t lo = -1;
    std::int64_t hi = 1;

    static ParameterField spin() { return {}; }
    static ParameterField range(std::int64_t lo, std::int64_t hi);

    unsigned width() const;
    bool admits(std::int64_t value) const;
};

class SystemSpec {
public:
    /// Throws if fields is empty (a system has at least one degree of freedom).
    SystemSpec(std::string label, std::vector<ParameterField> fields);

    /// n spin-1/2 degrees of freedom.
    static SystemSpec spins(std::string label, std::size_t n);

    const std::string& label() const noexcept { return label_; }
    std::size_t dof() const noexcept { return fields_.size(); }
    const std::vector<ParameterField>& fields() const noexcept { return fields_; }
    std::size_t encoded_length() const;

private:
    std::string label_;
    std::vector<ParameterField> fields_;
};

/// Throws Error(InvalidArgument) on arity mismatch or out-of-range value.
BitString encode_parameters(const SystemSpec& system, std::span<const std::int64_t> values);

/// Inverse of encode_parameters; throws if the string has the wrong length or
/// carries a code outside a field's range.
std::vector<std::int64_t> decode_parameters(const SystemSpec& system, const BitString& code);

} // namespace qobs
