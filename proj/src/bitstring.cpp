#include "qobs/bitstring.hpp"

#include "qobs/error.hpp"

#include <bit>

namespace qobs {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_)
        require(b <= 1, "bit symbol must be 0 or 1");
}

BitString BitString::from_text(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            fail(ErrorKind::Parse, std::string("invalid bit character '") + c + "'");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    BitString s;
    s.bits_ = std::move(bits);
    return s;
}

std::string BitString::to_text() const {
    std::string out(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out[i] = '1';
    return out;
}

std::vector<std::uint8_t> concat_symbols(std::span<const BitString> parts) {
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    std::vector<std::uint8_t> out;
    out.reserve(total);
    for (const auto& p : parts) out.insert(out.end(), p.bits().begin(), p.bits().end());
    return out;
}

BitString concat(std::span<const BitString> parts) { return BitString(concat_symbols(parts)); }

ParameterField ParameterField::range(std::int64_t lo, std::int64_t hi) {
    require(lo <= hi, "parameter range must satisfy lo <= hi");
    return {Kind::Range, lo, hi};
}

unsigned ParameterField::width() const {
    if (kind == Kind::Spin) return 1;
    auto span = static_cast<std::uint64_t>(hi - lo);
    // bit_width(span) bits hold codes 0..span; at least one bit per field.
    return std::max(1u, static_cast<unsigned>(std::bit_width(span)));
}

bool ParameterField::admits(std::int64_t value) const {
    if (kind == Kind::Spin) return value == 1 || value == -1;
    return value >= lo && value <= hi;
}

SystemSpec::SystemSpec(std::string label, std::vector<ParameterField> fields)
    : label_(std::move(label)), fields_(std::move(fields)) {
    require(!fields_.empty(), "a system needs at least one degree of freedom");
}

SystemSpec SystemSpec::spins(std::string label, std::size_t n) {
    return SystemSpec(std::move(label), std::vector<ParameterField>(n, ParameterField::spin()));
}

std::size_t SystemSpec::encoded_length() const {
    std::size_t n = 0;
    for (const auto& f : fields_) n += f.width();
    return n;
}

BitString encode_parameters(const SystemSpec& system, std::span<const std::int64_t> values) {
    require(values.size() == system.dof(), "expected " + std::to_string(system.dof()) +
                                               " parameter values, got " +
                                               std::to_string(values.size()));
    std::vector<std::uint8_t> bits;
    bits.reserve(system.encoded_length());
    for (std::size_t k = 0; k < values.size(); ++k) {
        const auto& field = system.fields()[k];
        const auto v = values[k];
        require(field.admits(v), "parameter " + std::to_string(k) + " value " +
                                     std::to_string(v) + " is out of range");
        if (field.kind == ParameterField::Kind::Spin) {
            bits.push_back(v > 0 ? 1 : 0);
            continue;
        }
        auto code = static_cast<std::uint64_t>(v - field.lo);
        for (unsigned b = field.width(); b-- > 0;)
            bits.push_back(static_cast<std::uint8_t>((code >> b) & 1u));
    }
    return BitString(std::move(bits));
}

std::vector<std::int64_t> decode_parameters(const SystemSpec& system, const BitString& code) {
    require(code.size() == system.encoded_length(), "encoded length mismatch");
    std::vector<std::int64_t> values;
    values.reserve(system.dof());
    std::size_t pos = 0;
    for (const auto& field : system.fields()) {
        if (field.kind == ParameterField::Kind::Spin) {
            values.push_back(code[pos++] ? 1 : -1);
            continue;
        }
        std::uint64_t v = 0;
        for (unsigned b = 0; b < field.width(); ++b) v = (v << 1) | code[pos++];
        auto value = field.lo + static_cast<std::int64_t>(v);
        require(field.admits(value), "decoded value outside field range");
        values.push_back(value);
    }
    return values;
}

} // namespace qobs
