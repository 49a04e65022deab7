#include "qobs/complexity.hpp"

#include "qobs/error.hpp"
#include "suffix_automaton.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>

namespace qobs {

std::string_view to_string(Estimator e) {
    switch (e) {
    case Estimator::Lz76Phrases: return "LZ76_PHRASES";
    case Estimator::Lz76NormalizedBits: return "LZ76_NORMALIZED_BITS";
    case Estimator::DictionaryCodeLength: return "DICTIONARY_CODE_LENGTH";
    }
    return "UNKNOWN";
}

std::optional<Estimator> estimator_from_string(std::string_view name) {
    for (auto e : {Estimator::Lz76Phrases, Estimator::Lz76NormalizedBits,
                   Estimator::DictionaryCodeLength})
        if (name == to_string(e)) return e;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// LZ76

std::vector<std::size_t> lz76_phrase_starts(std::span<const std::uint8_t> symbols) {
    for (auto b : symbols) require(b <= 1, "LZ76 parser expects binary symbols");
    const std::size_t n = symbols.size();
    std::vector<std::size_t> starts;
    detail::SuffixAutomaton history(n);
    std::size_t known = 0; // history holds symbols[0, known)

    // The phrase at p extends while symbols[p, p + len] occurs inside
    // symbols[0, p + len), i.e. starts before p with overlap allowed.
    std::size_t p = 0;
    while (p < n) {
        starts.push_back(p);
        std::int32_t state = 0;
        std::size_t len = 0;
        while (p + len < n) {
            while (known < p + len) {
                history.extend(symbols[known++]);
                state = history.canonical(state, len);
            }
            const auto next = history.transition(state, symbols[p + len]);
            if (next == detail::SuffixAutomaton::kNone) break;
            state = next;
            ++len;
        }
        p = (p + len >= n) ? n : p + len + 1;
    }
    return starts;
}

std::uint64_t lz76_phrase_count(std::span<const std::uint8_t> symbols) {
    return lz76_phrase_starts(symbols).size();
}

std::uint64_t lz76_phrase_count(const BitString& s) { return lz76_phrase_count(s.bits()); }

namespace {

double normalized_bits(std::uint64_t phrases, std::size_t n) {
    return static_cast<double>(phrases) * std::log2(static_cast<double>(n));
}

} // namespace

ComplexityEstimate lz76_bits(std::span<const std::uint8_t> symbols) {
    if (symbols.size() < 2)
        fail(ErrorKind::InsufficientData, "LZ76 bit normalization needs at least 2 symbols");
    return {normalized_bits(lz76_phrase_count(symbols), symbols.size()),
            Estimator::Lz76NormalizedBits, symbols.size()};
}

ComplexityEstimate lz76_bits(const BitString& s) { return lz76_bits(s.bits()); }

// ---------------------------------------------------------------------------
// LZ78 dictionary code

namespace {

struct Phrase {
    std::size_t start;
    std::size_t end;       // exclusive
    std::uint32_t parent;  // dictionary entry extended by this phrase
    bool complete;         // carries an innovation bit
};

std::vector<Phrase> lz78_parse(std::span<const std::uint8_t> symbols) {
    // Binary trie; node 0 is the empty phrase. Symbols are 0/1.
    std::vector<std::array<std::uint32_t, 2>> trie(1, {0, 0});
    std::vector<Phrase> phrases;
    std::uint32_t node = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const auto b = symbols[i];
        if (const auto child = trie[node][b]; child != 0) {
            node = child;
            continue;
        }
        const auto id = static_cast<std::uint32_t>(trie.size());
        trie[node][b] = id;
        trie.push_back({0, 0});
        phrases.push_back({start, i + 1, node, true});
        node = 0;
        start = i + 1;
    }
    if (start < symbols.size()) phrases.push_back({start, symbols.size(), node, false});
    return phrases;
}

inline unsigned index_width(std::size_t phrase_number) {
    return static_cast<unsigned>(std::bit_width(phrase_number));
}

void put_bits(std::vector<std::uint8_t>& out, std::uint64_t value, unsigned width) {
    for (unsigned b = width; b-- > 0;) out.push_back(static_cast<std::uint8_t>((value >> b) & 1u));
}

void check_symbols(std::span<const std::uint8_t> symbols) {
    require(symbols.size() <= std::numeric_limits<std::uint32_t>::max(),
            "input too long for the 32-bit length header");
    for (auto b : symbols) require(b <= 1, "dictionary coder expects binary symbols");
}

std::size_t dictionary_payload_bits(std::span<const Phrase> phrases) {
    std::size_t bits = 0;
    for (std::size_t j = 0; j < phrases.size(); ++j)
        bits += index_width(j) + (phrases[j].complete ? 1 : 0);
    return bits;
}

} // namespace

BitString dictionary_encode(std::span<const std::uint8_t> symbols) {
    check_symbols(symbols);
    const auto phrases = lz78_parse(symbols);
    const auto dict_bits = dictionary_payload_bits(phrases);
    const bool literal = dict_bits > symbols.size();

    std::vector<std::uint8_t> out;
    out.reserve(kDictionaryHeaderBits + std::min(dict_bits, symbols.size()));
    out.push_back(literal ? 1 : 0);
    put_bits(out, symbols.size(), 32);
    if (literal) {
        out.insert(out.end(), symbols.begin(), symbols.end());
    } else {
        for (std::size_t j = 0; j < phrases.size(); ++j) {
            put_bits(out, phrases[j].parent, index_width(j));
            if (phrases[j].complete) out.push_back(symbols[phrases[j].end - 1]);
        }
    }
    return BitString(std::move(out));
}

BitString dictionary_encode(const BitString& s) { return dictionary_encode(s.bits()); }

BitString dictionary_decode(const BitString& code) {
    std::size_t pos = 0;
    auto take = [&](unsigned width) {
        if (pos + width > code.size()) fail(ErrorKind::Parse, "truncated dictionary code");
        std::uint64_t v = 0;
        for (unsigned b = 0; b < width; ++b) v = (v << 1) | code[pos++];
        return v;
    };
    const bool literal = take(1) != 0;
    const auto n = static_cast<std::size_t>(take(32));

    std::vector<std::uint8_t> out;
    out.reserve(n);
    if (literal) {
        for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<std::uint8_t>(take(1)));
    } else {
        // Entry k is stored as (parent, last symbol); entry 0 is empty.
        std::vector<std::pair<std::uint32_t, std::uint8_t>> entries(1, {0, 0});
        std::vector<std::uint8_t> scratch;
        for (std::size_t j = 0; out.size() < n; ++j) {
            const auto parent = take(index_width(j));
            if (parent >= entries.size()) fail(ErrorKind::Parse, "dictionary index out of range");
            scratch.clear();
            for (auto k = static_cast<std::uint32_t>(parent); k != 0; k = entries[k].first)
                scratch.push_back(entries[k].second);
            out.insert(out.end(), scratch.rbegin(), scratch.rend());
            if (out.size() > n) fail(ErrorKind::Parse, "dictionary phrase overruns length");
            if (out.size() == n) break;
            const auto bit = static_cast<std::uint8_t>(take(1));
            out.push_back(bit);
            entries.emplace_back(static_cast<std::uint32_t>(parent), bit);
        }
    }
    if (pos != code.size()) fail(ErrorKind::Parse, "trailing bits after dictionary code");
    return BitString(std::move(out));
}

ComplexityEstimate dictionary_code_length(std::span<const std::uint8_t> symbols) {
    check_symbols(symbols);
    const auto payload = std::min(dictionary_payload_bits(lz78_parse(symbols)), symbols.size());
    return {static_cast<double>(kDictionaryHeaderBits + payload), Estimator::DictionaryCodeLength,
            symbols.size()};
}

ComplexityEstimate dictionary_code_length(const BitString& s) {
    return dictionary_code_length(s.bits());
}

// ---------------------------------------------------------------------------

ComplexityEstimate estimate(std::span<const std::uint8_t> symbols, Estimator estimator) {
    switch (estimator) {
    case Estimator::Lz76Phrases:
        return {static_cast<double>(lz76_phrase_count(symbols)), estimator, symbols.size()};
    case Estimator::Lz76NormalizedBits: return lz76_bits(symbols);
    case Estimator::DictionaryCodeLength: return dictionary_code_length(symbols);
    }
    fail(ErrorKind::InvalidArgument, "unknown estimator");
}

ComplexityEstimate estimate(const BitString& s, Estimator estimator) {
    return estimate(s.bits(), estimator);
}

std::vector<ComplexityEstimate> prefix_estimates(std::span<const std::uint8_t> symbols,
                                                 std::span<const std::size_t> prefix_ends,
                                                 Estimator estimator) {
    require(std::is_sorted(prefix_ends.begin(), prefix_ends.end()),
            "prefix ends must be non-decreasing");
    require(prefix_ends.empty() || prefix_ends.back() <= symbols.size(),
            "prefix end beyond input");
    std::vector<ComplexityEstimate> out;
    out.reserve(prefix_ends.size());

    if (estimator == Estimator::DictionaryCodeLength) {
        check_symbols(symbols);
        const auto phrases = lz78_parse(symbols);
        // Cost of the prefix ending at q: all phrases ending at or before q at
        // full cost, plus the index of the phrase cut by q (an existing entry).
        std::size_t j = 0, full = 0;
        for (auto q : prefix_ends) {
            while (j < phrases.size() && phrases[j].end <= q) {
                full += index_width(j) + (phrases[j].complete ? 1 : 0);
                ++j;
            }
            std::size_t payload = full;
            if (j < phrases.size() && phrases[j].start < q) payload += index_width(j);
            payload = std::min(payload, q);
            out.push_back({static_cast<double>(kDictionaryHeaderBits + payload), estimator, q});
        }
        return out;
    }

    const auto starts = lz76_phrase_starts(symbols);
    std::size_t count = 0;
    for (auto q : prefix_ends) {
        while (count < starts.size() && starts[count] < q) ++count;
        double value = static_cast<double>(count);
        if (estimator == Estimator::Lz76NormalizedBits) value = q < 2 ? 0.0 : normalized_bits(count, q);
        out.push_back({value, estimator, q});
    }
    return out;
}

bool check_dof_bound(const ComplexityEstimate& est, const SystemSpec& system) {
    return est.value_bits >= static_cast<double>(system.dof());
}

} // namespace qobs
