#pragma once

#include "qobs/bitstring.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qobs {

inline constexpr double kDefaultZeroRateTolerance = 0.01;
inline constexpr std::size_t kDefaultMaxBlock = 2;

/// H_b(p) in bits, with 0 log 0 = 0.
double binary_entropy(double p);

/// -sum q log2 q over the given probabilities, 0 log 0 = 0.
double shannon_entropy(std::span<const double> probabilities);

/// Distribution over equal-length binary strings.
class ProbabilityTable {
public:
    /// Throws unless probabilities are non-negative and sum to 1 within 1e-12,
    /// outcomes are distinct and all share one length.
    ProbabilityTable(std::vector<BitString> outcomes, std::vector<double> probabilities);

    const std::vector<BitString>& outcomes() const noexcept { return outcomes_; }
    const std::vector<double>& probabilities() const noexcept { return probabilities_; }
    std::size_t string_length() const noexcept;

private:
    std::vector<BitString> outcomes_;
    std::vector<double> probabilities_;
};

double shannon_entropy(const ProbabilityTable& table);

/// Entropy (bits per block) of the empirical distribution of overlapping
/// blocks of block_len consecutive strings. Each whole string is one symbol.
double block_entropy(std::span<const BitString> sequence, std::size_t block_len);

struct PluginRate {
    double rate = 0.0;                  // H(m) - H(m - 1) at m = max_block, matched windows
    std::vector<double> block_entropy;  // H(m) for m = 0..max_block over all windows, H(0) = 0
};

/// Conditional-entropy estimate of the rate in bits per step. Both block
/// entropies in the difference are counted over the n - max_block + 1 windows
/// of length max_block (the shorter block is the window's prefix), so a
/// sequence whose next string is fixed by the previous max_block - 1 strings
/// reports exactly 0. Requires sequence.size() >= 10 * max_block.
PluginRate entropy_rate_plugin(std::span<const BitString> sequence, std::size_t max_block);

/// lz76_bits of the concatenation divided by its length, in bits per symbol.
double entropy_rate_lz(std::span<const BitString> sequence);

/// Identification strings indexed by (observer, system). Observers are kept
/// in ascending id order; each system's column is the observation process.
class ObservationEnsemble {
public:
    /// columns[n][i] is the string observer i produced for system n.
    ObservationEnsemble(std::vector<std::int64_t> observer_ids,
                        std::vector<std::string> system_labels,
                        std::vector<std::vector<BitString>> columns,
                        std::vector<double> observer_capacities = {});

    /// Single-system ensemble with observers numbered 1..column.size().
    static ObservationEnsemble from_column(std::string system_label, std::vector<BitString> column);

    std::size_t num_observers() const noexcept { return observer_ids_.size(); }
    std::size_t num_systems() const noexcept { return system_labels_.size(); }
    const std::vector<std::int64_t>& observer_ids() const noexcept { return observer_ids_; }
    const std::vector<std::string>& system_labels() const noexcept { return system_labels_; }
    const std::vector<double>& observer_capacities() const noexcept { return capacities_; }

    /// Throws Error(InvalidArgument) if system_index is out of range.
    std::span<const BitString> column(std::size_t system_index) const;
    std::optional<std::size_t> find_system(const std::string& label) const;

private:
    std::vector<std::int64_t> observer_ids_;
    std::vector<std::string> system_labels_;
    std::vector<std::vector<BitString>> columns_;
    std::vector<double> capacities_;
};

struct ZeroRateReport {
    bool zero = false;
    double plugin_rate = 0.0;      // bits per step (per observer)
    double lz_rate = 0.0;          // bits per symbol
    std::size_t block_used = 0;
};

/// Both estimators of column n's rate must fall below tol. The plug-in block
/// length is max_block clamped to the data (at least one, at most len / 10).
/// Throws on fewer than two observers, tol <= 0 or a missing column.
ZeroRateReport zero_rate_report(const ObservationEnsemble& ensemble, std::size_t system_index,
                                double tol = kDefaultZeroRateTolerance,
                                std::size_t max_block = kDefaultMaxBlock);

bool is_zero_entropy_rate(const ObservationEnsemble& ensemble, std::size_t system_index,
                          double tol = kDefaultZeroRateTolerance);

struct MarkovChain {
    std::vector<BitString> states;
    std::vector<std::vector<double>> transition; // rows sum to one
    std::vector<double> initial;
};

struct ProcessModel {
    enum class Kind { Constant, IidTable, Markov };

    Kind kind = Kind::Constant;
    BitString constant;
    std::optional<ProbabilityTable> table;
    std::optional<MarkovChain> markov;
    std::uint64_t seed = 0;

    static ProcessModel constant_string(BitString s);
    static ProcessModel iid(ProbabilityTable table, std::uint64_t seed);
    static ProcessModel markov_chain(MarkovChain chain, std::uint64_t seed);
    /// Two states "0"/"1", flip probability p, uniform start.
    static ProcessModel binary_flip(double p, std::uint64_t seed);
};

/// Deterministic in (model, count). Throws on invalid parameters.
std::vector<BitString> generate(const ProcessModel& model, std::size_t count);

} // namespace qobs
