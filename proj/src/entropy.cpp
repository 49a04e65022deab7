#include "qobs/entropy.hpp"

#include "qobs/complexity.hpp"
#include "qobs/error.hpp"
#include "qobs/rng.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

namespace qobs {

namespace {

constexpr double kSumTolerance = 1e-12;

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

void check_distribution(std::span<const double> p, const std::string& what) {
    double sum = 0.0;
    for (double q : p) {
        require(q >= 0.0 && std::isfinite(q), what + ": probabilities must be non-negative");
        sum += q;
    }
    require(std::abs(sum - 1.0) <= kSumTolerance, what + ": probabilities must sum to 1");
}

// Maps each distinct string to a small integer id, in order of first use.
std::vector<std::uint32_t> intern(std::span<const BitString> sequence) {
    std::map<BitString, std::uint32_t> ids;
    std::vector<std::uint32_t> out;
    out.reserve(sequence.size());
    for (const auto& s : sequence) {
        auto [it, inserted] = ids.try_emplace(s, static_cast<std::uint32_t>(ids.size()));
        out.push_back(it->second);
    }
    return out;
}

struct BlockHash {
    std::size_t operator()(const std::vector<std::uint32_t>& block) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto v : block) h = (h ^ v) * 1099511628211ull;
        return static_cast<std::size_t>(h);
    }
};

// Entropy of the blocks of length m starting at positions 0..windows-1.
// Counts are summed in sorted order so equal count multisets give bit-equal
// entropies.
double block_entropy_ids(std::span<const std::uint32_t> ids, std::size_t m, std::size_t windows) {
    if (m == 0) return 0.0;
    std::unordered_map<std::vector<std::uint32_t>, std::size_t, BlockHash> counts;
    counts.reserve(windows);
    std::vector<std::uint32_t> key(m);
    for (std::size_t k = 0; k < windows; ++k) {
        std::copy_n(ids.begin() + static_cast<std::ptrdiff_t>(k), m, key.begin());
        ++counts[key];
    }
    std::vector<std::size_t> sorted;
    sorted.reserve(counts.size());
    for (const auto& [block, c] : counts) sorted.push_back(c);
    std::sort(sorted.begin(), sorted.end());
    double h = 0.0;
    for (auto c : sorted) h += plogp(static_cast<double>(c) / static_cast<double>(windows));
    return h;
}

double block_entropy_ids(std::span<const std::uint32_t> ids, std::size_t m) {
    return block_entropy_ids(ids, m, ids.size() - m + 1);
}

} // namespace

double binary_entropy(double p) {
    require(p >= 0.0 && p <= 1.0, "binary entropy argument must lie in [0, 1]");
    return plogp(p) + plogp(1.0 - p);
}

double shannon_entropy(std::span<const double> probabilities) {
    check_distribution(probabilities, "distribution");
    double h = 0.0;
    for (double q : probabilities) h += plogp(q);
    return h;
}

ProbabilityTable::ProbabilityTable(std::vector<BitString> outcomes, std::vector<double> probabilities)
    : outcomes_(std::move(outcomes)), probabilities_(std::move(probabilities)) {
    require(!outcomes_.empty(), "probability table needs at least one outcome");
    require(outcomes_.size() == probabilities_.size(), "one probability per outcome");
    check_distribution(probabilities_, "probability table");
    std::set<BitString> seen;
    for (const auto& o : outcomes_) {
        require(o.size() == outcomes_.front().size(), "outcomes must share one length");
        require(seen.insert(o).second, "outcomes must be distinct");
    }
}

std::size_t ProbabilityTable::string_length() const noexcept { return outcomes_.front().size(); }

double shannon_entropy(const ProbabilityTable& table) {
    return shannon_entropy(std::span<const double>(table.probabilities()));
}

double block_entropy(std::span<const BitString> sequence, std::size_t block_len) {
    require(block_len >= 1, "block length must be positive");
    if (sequence.size() < block_len)
        fail(ErrorKind::InsufficientData, "sequence shorter than block length");
    return block_entropy_ids(intern(sequence), block_len);
}

PluginRate entropy_rate_plugin(std::span<const BitString> sequence, std::size_t max_block) {
    require(max_block >= 1, "max_block must be positive");
    if (sequence.size() < 10 * max_block)
        fail(ErrorKind::InsufficientData,
             "plug-in rate needs at least 10 * max_block = " + std::to_string(10 * max_block) +
                 " observations, got " + std::to_string(sequence.size()));
    const auto ids = intern(sequence);
    PluginRate out;
    out.block_entropy.push_back(0.0);
    for (std::size_t m = 1; m <= max_block; ++m) out.block_entropy.push_back(block_entropy_ids(ids, m));
    // H(m) - H(m-1) with both counted over the same m-block windows, so a
    // sequence whose successor is fixed by the previous m-1 strings gives 0.
    const std::size_t windows = ids.size() - max_block + 1;
    out.rate = block_entropy_ids(ids, max_block, windows) - block_entropy_ids(ids, max_block - 1, windows);
    return out;
}

double entropy_rate_lz(std::span<const BitString> sequence) {
    const auto symbols = concat_symbols(sequence);
    if (symbols.size() < 2)
        fail(ErrorKind::InsufficientData, "LZ rate needs a concatenation of at least 2 symbols");
    return lz76_bits(symbols).value_bits / static_cast<double>(symbols.size());
}

// ---------------------------------------------------------------------------

ObservationEnsemble::ObservationEnsemble(std::vector<std::int64_t> observer_ids,
                                         std::vector<std::string> system_labels,
                                         std::vector<std::vector<BitString>> columns,
                                         std::vector<double> observer_capacities)
    : observer_ids_(std::move(observer_ids)),
      system_labels_(std::move(system_labels)),
      columns_(std::move(columns)),
      capacities_(std::move(observer_capacities)) {
    require(columns_.size() == system_labels_.size(), "one column per system");
    for (const auto& c : columns_)
        require(c.size() == observer_ids_.size(), "every column needs one string per observer");
    require(capacities_.empty() || capacities_.size() == observer_ids_.size(),
            "observer capacities must cover every observer");
    require(std::is_sorted(observer_ids_.begin(), observer_ids_.end()) &&
                std::adjacent_find(observer_ids_.begin(), observer_ids_.end()) == observer_ids_.end(),
            "observer ids must be strictly increasing");
    std::set<std::string> labels(system_labels_.begin(), system_labels_.end());
    require(labels.size() == system_labels_.size(), "system labels must be distinct");
}

ObservationEnsemble ObservationEnsemble::from_column(std::string system_label,
                                                     std::vector<BitString> column) {
    std::vector<std::int64_t> ids(column.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<std::int64_t>(i + 1);
    std::vector<std::vector<BitString>> cols;
    cols.push_back(std::move(column));
    return ObservationEnsemble(std::move(ids), {std::move(system_label)}, std::move(cols));
}

std::span<const BitString> ObservationEnsemble::column(std::size_t system_index) const {
    require(system_index < columns_.size(),
            "system index " + std::to_string(system_index) + " out of range");
    return columns_[system_index];
}

std::optional<std::size_t> ObservationEnsemble::find_system(const std::string& label) const {
    auto it = std::find(system_labels_.begin(), system_labels_.end(), label);
    if (it == system_labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - system_labels_.begin());
}

ZeroRateReport zero_rate_report(const ObservationEnsemble& ensemble, std::size_t system_index,
                                double tol, std::size_t max_block) {
    require(tol > 0.0, "zero-rate tolerance must be positive");
    const auto column = ensemble.column(system_index);
    if (column.size() < 2) fail(ErrorKind::InsufficientData, "a rate needs at least two observers");

    ZeroRateReport r;
    r.block_used = std::clamp<std::size_t>(max_block, 1, std::max<std::size_t>(1, column.size() / 10));
    if (column.size() >= 10 * r.block_used) {
        r.plugin_rate = entropy_rate_plugin(column, r.block_used).rate;
    } else {
        // Fewer than ten observers: single-symbol entropy only.
        r.plugin_rate = block_entropy(column, 1);
    }
    r.lz_rate = entropy_rate_lz(column);
    r.zero = r.plugin_rate < tol && r.lz_rate < tol;
    return r;
}

bool is_zero_entropy_rate(const ObservationEnsemble& ensemble, std::size_t system_index, double tol) {
    return zero_rate_report(ensemble, system_index, tol).zero;
}

// ---------------------------------------------------------------------------

ProcessModel ProcessModel::constant_string(BitString s) {
    ProcessModel m;
    m.kind = Kind::Constant;
    m.constant = std::move(s);
    return m;
}

ProcessModel ProcessModel::iid(ProbabilityTable table, std::uint64_t seed) {
    ProcessModel m;
    m.kind = Kind::IidTable;
    m.table = std::move(table);
    m.seed = seed;
    return m;
}

ProcessModel ProcessModel::markov_chain(MarkovChain chain, std::uint64_t seed) {
    ProcessModel m;
    m.kind = Kind::Markov;
    m.markov = std::move(chain);
    m.seed = seed;
    return m;
}

ProcessModel ProcessModel::binary_flip(double p, std::uint64_t seed) {
    require(p >= 0.0 && p <= 1.0, "flip probability must lie in [0, 1]");
    MarkovChain chain{{BitString::from_text("0"), BitString::from_text("1")},
                      {{1.0 - p, p}, {p, 1.0 - p}},
                      {0.5, 0.5}};
    return markov_chain(std::move(chain), seed);
}

std::vector<BitString> generate(const ProcessModel& model, std::size_t count) {
    std::vector<BitString> out;
    out.reserve(count);
    Rng rng(model.seed);
    switch (model.kind) {
    case ProcessModel::Kind::Constant:
        out.assign(count, model.constant);
        break;
    case ProcessModel::Kind::IidTable: {
        require(model.table.has_value(), "IID_TABLE model needs a probability table");
        const auto& t = *model.table;
        for (std::size_t k = 0; k < count; ++k) out.push_back(t.outcomes()[rng.categorical(t.probabilities())]);
        break;
    }
    case ProcessModel::Kind::Markov: {
        require(model.markov.has_value(), "MARKOV model needs a chain");
        const auto& c = *model.markov;
        const auto n = c.states.size();
        require(n >= 1, "Markov chain needs at least one state");
        require(c.transition.size() == n && c.initial.size() == n,
                "transition matrix and initial distribution must match the state count");
        check_distribution(c.initial, "initial distribution");
        for (const auto& row : c.transition) {
            require(row.size() == n, "transition matrix must be square");
            check_distribution(row, "transition row");
        }
        if (count == 0) break;
        auto state = rng.categorical(c.initial);
        out.push_back(c.states[state]);
        for (std::size_t k = 1; k < count; ++k) {
            state = rng.categorical(c.transition[state]);
            out.push_back(c.states[state]);
        }
        break;
    }
    }
    return out;
}

} // namespace qobs
