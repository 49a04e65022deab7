#include "qobs/ensemble_csv.hpp"

#include "qobs/error.hpp"
#include "text_util.hpp"

#include <charconv>
#include <map>

namespace qobs {

namespace {

constexpr std::string_view kHeader = "observer_index,system_label,bits";

} // namespace

ObservationEnsemble parse_ensemble_csv(std::string_view text) {
    std::map<std::int64_t, std::size_t> observer_row; // id -> position, filled after parsing
    std::vector<std::string> labels;
    std::map<std::string, std::size_t> label_index;
    std::map<std::pair<std::int64_t, std::size_t>, BitString> cells;

    bool header_seen = false;
    std::size_t line_no = 0;
    for (auto line : detail::split_lines(text)) {
        ++line_no;
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto where = "ensemble CSV line " + std::to_string(line_no) + ": ";
        if (!header_seen) {
            if (line != kHeader)
                fail(ErrorKind::Parse, where + "expected header '" + std::string(kHeader) + "'");
            header_seen = true;
            continue;
        }
        const auto fields = detail::split(line, ',');
        if (fields.size() != 3) fail(ErrorKind::Parse, where + "expected 3 fields");

        const auto id_text = detail::trim(fields[0]);
        std::int64_t id = 0;
        auto [ptr, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), id);
        if (ec != std::errc() || ptr != id_text.data() + id_text.size())
            fail(ErrorKind::Parse, where + "observer_index is not an integer");

        const std::string label(detail::trim(fields[1]));
        if (label.empty()) fail(ErrorKind::Parse, where + "empty system_label");
        auto [it, added] = label_index.try_emplace(label, labels.size());
        if (added) labels.push_back(label);

        BitString bits;
        try {
            bits = BitString::from_text(detail::trim(fields[2]));
        } catch (const Error& e) {
            fail(ErrorKind::Parse, where + e.what());
        }
        if (!cells.try_emplace({id, it->second}, std::move(bits)).second)
            fail(ErrorKind::Parse, where + "duplicate row for observer " + std::to_string(id) +
                                       ", system " + label);
        observer_row.try_emplace(id, 0);
    }
    if (!header_seen) fail(ErrorKind::Parse, "ensemble CSV is empty");

    std::vector<std::int64_t> ids;
    for (const auto& [id, unused] : observer_row) ids.push_back(id);
    std::vector<std::vector<BitString>> columns(labels.size());
    for (std::size_t n = 0; n < labels.size(); ++n) {
        columns[n].reserve(ids.size());
        for (auto id : ids) {
            auto cell = cells.find({id, n});
            if (cell == cells.end())
                fail(ErrorKind::Parse, "ensemble CSV: observer " + std::to_string(id) +
                                           " has no row for system " + labels[n]);
            columns[n].push_back(std::move(cell->second));
        }
    }
    return ObservationEnsemble(std::move(ids), std::move(labels), std::move(columns));
}

ObservationEnsemble load_ensemble_csv(const std::filesystem::path& path) {
    return parse_ensemble_csv(detail::read_file(path));
}

std::string format_ensemble_csv(const ObservationEnsemble& ensemble) {
    std::string out(kHeader);
    out += '\n';
    for (std::size_t i = 0; i < ensemble.num_observers(); ++i)
        for (std::size_t n = 0; n < ensemble.num_systems(); ++n) {
            out += std::to_string(ensemble.observer_ids()[i]);
            out += ',';
            out += ensemble.system_labels()[n];
            out += ',';
            out += ensemble.column(n)[i].to_text();
            out += '\n';
        }
    return out;
}

} // namespace qobs
