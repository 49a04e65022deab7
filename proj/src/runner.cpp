#include "qobs/runner.hpp"

#include "qobs/controls.hpp"
#include "qobs/ensemble_csv.hpp"
#include "qobs/error.hpp"
#include "qobs/observer.hpp"
#include "qobs/reality.hpp"
#include "qobs/rng.hpp"
#include "text_util.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <set>

namespace qobs {

namespace fs = std::filesystem;

namespace {

template <class T>
T parse_number(std::string_view key, std::string_view value) {
    T v{};
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size())
        fail(ErrorKind::Parse, "config key '" + std::string(key) + "': '" + std::string(value) +
                                   "' is not a valid number");
    return v;
}

const std::set<std::string_view> kCommands = {"complexity", "entropy", "reality", "calorimeter", "demo"};

std::string default_out_dir(std::string_view command) {
    if (command == "reality") return "reality_out";
    if (command == "calorimeter") return "calorimeter_out";
    if (command == "demo") return "demo_out";
    return {};
}

std::string out_dir(const ScenarioConfig& c) { return c.out.empty() ? default_out_dir(c.command) : c.out; }

fs::path prepare_out_dir(const ScenarioConfig& c) {
    const fs::path dir = out_dir(c);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) fail(ErrorKind::Io, "cannot create output directory '" + dir.string() + "': " + ec.message());
    detail::write_file(dir / "effective_config.txt", c.to_text());
    return dir;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------

void run_complexity(const ScenarioConfig& c, std::ostream& out) {
    std::string text;
    if (c.bits) {
        text = *c.bits;
    } else {
        for (char ch : detail::read_file(c.in))
            if (ch != ' ' && ch != '\n' && ch != '\r' && ch != '\t') text += ch;
    }
    const auto s = BitString::from_text(text);
    const auto est = estimate(s, c.estimator);
    out << "estimator,phrase_count,value_bits,input_length\n"
        << fmt::format("{},{},{},{}\n", to_string(c.estimator), lz76_phrase_count(s),
                       format_bits(est.value_bits), s.size());
    if (!c.out.empty()) prepare_out_dir(c);
}

std::string entropy_rows(const ScenarioConfig& c, const ObservationEnsemble& e) {
    std::string csv =
        "system_label,observers,max_block,plugin_rate_bits_per_step,lz_rate_bits_per_symbol,"
        "lz_rate_bits_per_step,zero_rate\n";
    for (std::size_t n = 0; n < e.num_systems(); ++n) {
        const auto r = zero_rate_report(e, n, c.tol, c.max_block);
        std::size_t symbols = 0;
        for (const auto& s : e.column(n)) symbols += s.size();
        const double per_step = r.lz_rate * static_cast<double>(symbols) / static_cast<double>(e.num_observers());
        csv += fmt::format("{},{},{},{},{},{},{}\n", e.system_labels()[n], e.num_observers(), r.block_used,
                           format_bits(r.plugin_rate), format_bits(r.lz_rate), format_bits(per_step),
                           yes_no(r.zero));
    }
    return csv;
}

void run_entropy(const ScenarioConfig& c, std::ostream& out) {
    const auto e = load_ensemble_csv(c.ensemble);
    const auto csv = entropy_rows(c, e);
    out << csv;
    if (!c.out.empty()) detail::write_file(prepare_out_dir(c) / "entropy.csv", csv);
}

struct RealityTables {
    std::string verdicts =
        "system_label,entropy_rate,growth_class,is_element_of_reality,estimator,"
        "plugin_rate_bits_per_step,lz_rate_bits_per_symbol,lz_rate_bits_per_step,brudno_tail,"
        "score_constant,score_logarithmic,score_linear\n";
    std::string curves;
    std::string summary;
};

void add_reality(RealityTables& t, const ScenarioConfig& c, const ObservationEnsemble& e,
                 bool write_curve) {
    const RealityConfig rc{c.tol, c.max_block, c.estimator};
    std::optional<std::vector<ObserverSIA>> observers;
    if (c.capacity_bits) {
        observers.emplace();
        for (auto id : e.observer_ids()) observers->emplace_back("X" + std::to_string(id), *c.capacity_bits);
    }
    for (std::size_t n = 0; n < e.num_systems(); ++n) {
        const auto curve = build_curve(e, n, c.estimator);
        const auto v = is_element_of_reality(e, n, curve, rc);
        const auto& last = curve.points.back();
        const double per_step =
            v.rate.lz_rate * static_cast<double>(last.length) / static_cast<double>(last.observers);
        t.verdicts += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}\n", v.system_label,
                                  format_bits(v.entropy_rate_bits), to_string(v.growth_class),
                                  yes_no(v.is_element_of_reality), to_string(v.estimator),
                                  format_bits(v.rate.plugin_rate), format_bits(v.rate.lz_rate),
                                  format_bits(per_step), format_bits(v.brudno.tail),
                                  format_bits(v.fit.constant.score), format_bits(v.fit.logarithmic.score),
                                  format_bits(v.fit.linear.score));
        t.summary += fmt::format("{}: element_of_reality={} growth={} entropy_rate={} brudno_tail={} ({})\n",
                                 v.system_label, yes_no(v.is_element_of_reality), to_string(v.growth_class),
                                 format_bits(v.entropy_rate_bits), format_bits(v.brudno.tail),
                                 to_string(v.estimator));
        if (!write_curve) continue;
        std::vector<bool> bound;
        if (observers) bound = check_observer_bound(curve, *observers);
        for (std::size_t k = 0; k < curve.points.size(); ++k) {
            const auto& p = curve.points[k];
            t.curves += fmt::format("{},{},{},{},{}", curve.system_label, p.observers, p.length,
                                    format_bits(p.k_bits), format_bits(v.brudno.ratio[k]));
            if (observers) t.curves += "," + yes_no(bound[k]);
            t.curves += '\n';
        }
    }
}

std::string curve_header(const ScenarioConfig& c) {
    return std::string("system_label,i,length_bits,k_bits,brudno_ratio") +
           (c.capacity_bits ? ",within_observer_bound\n" : "\n");
}

void run_reality(const ScenarioConfig& c, std::ostream& out) {
    const auto e = load_ensemble_csv(c.ensemble);
    RealityTables t;
    t.curves = curve_header(c);
    add_reality(t, c, e, true);
    const auto dir = prepare_out_dir(c);
    detail::write_file(dir / "verdicts.csv", t.verdicts);
    detail::write_file(dir / "curve.csv", t.curves);
    out << t.summary;
}

struct CalorimeterTables {
    std::string trace = "arrival_index,outcome,heat_joules,memory_bits_after,S_total_bits\n";
    std::string ledger =
        "arrival_index,shannon_term_bits,kolmogorov_term_bits,S_total_bits,cumulative_heat_joules,"
        "cumulative_erased_bits\n";
    std::string summary;
};

CalorimeterTables calorimeter_tables(const SimConfig& sim) {
    const auto result = run_experiment(sim);
    CalorimeterTables t;
    std::size_t bursts = 0, first_burst = 0;
    for (std::size_t k = 0; k < result.trace.size(); ++k) {
        const auto& ev = result.trace[k];
        const auto& l = result.ledger[k];
        t.trace += fmt::format("{},{},{},{},{}\n", ev.arrival_index, to_string(ev.outcome),
                               format_joules(ev.heat_joules), ev.memory_bits_after, format_bits(l.total_bits));
        t.ledger += fmt::format("{},{},{},{},{},{}\n", ev.arrival_index, format_bits(l.shannon_term_bits),
                                format_bits(l.kolmogorov_term_bits), format_bits(l.total_bits),
                                format_joules(l.cumulative_heat_joules), format_bits(l.cumulative_erased_bits));
        if (ev.outcome == EventOutcome::HeatBurst && bursts++ == 0) first_burst = ev.arrival_index;
    }
    const auto fin = result.final_ledger();
    t.summary = fmt::format(
        "calorimeter: photons={} capacity_bits={} record_bits={} bursts={} first_burst={} "
        "total_heat_joules={} S_total_bits={}\n",
        sim.num_photons, format_bits(sim.capacity_bits), sim.record_bits_per_photon, bursts,
        bursts ? std::to_string(first_burst) : std::string("none"), format_joules(fin.cumulative_heat_joules),
        format_bits(fin.total_bits));
    return t;
}

void run_calorimeter(const ScenarioConfig& c, std::ostream& out) {
    const auto t = calorimeter_tables(c.sim_config());
    const auto dir = prepare_out_dir(c);
    detail::write_file(dir / "heat_trace.csv", t.trace);
    detail::write_file(dir / "ledger.csv", t.ledger);
    out << t.summary;
}

// Built-in controls: identical observers of a 128-spin Neel chain (positive),
// independent uniform 64-bit identifications (negative), a common random
// identification plus a log2-growing nested tag over 16384 observers
// (logarithmic growth), and the ten-record calorimeter scenario.
void run_demo(const ScenarioConfig& c, std::ostream& out) {
    std::vector<std::int64_t> neel(128);
    for (std::size_t k = 0; k < neel.size(); ++k) neel[k] = k % 2 == 0 ? 1 : -1;
    const auto chain = SystemSpec::spins("neel_chain", neel.size());
    const auto positive = identical_observers(encode_parameters(chain, neel), 64, "positive");
    const auto negative = independent_observers(64, 64, c.seed, "negative");
    Rng common_rng(c.seed + 2);
    const auto log_tag = log_tag_observers(BitString(common_rng.bits(64)), 16384, c.seed + 1, "log_tag");

    RealityTables t;
    t.curves = curve_header(c);
    add_reality(t, c, positive, true);
    add_reality(t, c, negative, true);
    add_reality(t, c, log_tag, false);
    const auto cal = calorimeter_tables(c.sim_config());

    const auto dir = prepare_out_dir(c);
    detail::write_file(dir / "positive_ensemble.csv", format_ensemble_csv(positive));
    detail::write_file(dir / "negative_ensemble.csv", format_ensemble_csv(negative));
    detail::write_file(dir / "verdicts.csv", t.verdicts);
    detail::write_file(dir / "curves.csv", t.curves);
    detail::write_file(dir / "heat_trace.csv", cal.trace);
    detail::write_file(dir / "ledger.csv", cal.ledger);
    const auto summary = t.summary + cal.summary;
    detail::write_file(dir / "summary.txt", summary);
    out << summary;
}

} // namespace

std::string format_bits(double v) { return fmt::format("{:.6f}", v == 0.0 ? 0.0 : v); }
std::string format_joules(double v) { return fmt::format("{:.6e}", v == 0.0 ? 0.0 : v); }

void ScenarioConfig::set(std::string_view key, std::string_view raw) {
    const auto value = detail::trim(raw);
    const std::string v(value);
    if (key == "command") {
        if (!kCommands.contains(value)) fail(ErrorKind::Parse, "unknown command '" + v + "'");
        command = v;
    } else if (key == "in") {
        in = v;
    } else if (key == "bits") {
        bits = v;
    } else if (key == "ensemble") {
        ensemble = v;
    } else if (key == "estimator") {
        auto e = estimator_from_string(value);
        if (!e) fail(ErrorKind::Parse, "unknown estimator '" + v + "'");
        estimator = *e;
    } else if (key == "tol") {
        tol = parse_number<double>(key, value);
    } else if (key == "max_block") {
        max_block = parse_number<std::size_t>(key, value);
    } else if (key == "capacity_bits") {
        capacity_bits = parse_number<double>(key, value);
    } else if (key == "record_bits_per_photon") {
        record_bits_per_photon = parse_number<std::size_t>(key, value);
    } else if (key == "temperature_kelvin") {
        temperature_kelvin = parse_number<double>(key, value);
    } else if (key == "num_photons") {
        num_photons = parse_number<std::size_t>(key, value);
    } else if (key == "policy") {
        if (value == "ERASE_ALL") policy = SaturationPolicy::EraseAll;
        else if (value == "ERASE_OLDEST") policy = SaturationPolicy::EraseOldest;
        else fail(ErrorKind::Parse, "unknown policy '" + v + "'");
    } else if (key == "record_mode") {
        if (value == "RANDOM") record_mode = RecordMode::Random;
        else if (value == "COMPRESSIBLE") record_mode = RecordMode::Compressible;
        else fail(ErrorKind::Parse, "unknown record_mode '" + v + "'");
    } else if (key == "wavelength_nm") {
        wavelength_nm = parse_number<double>(key, value);
    } else if (key == "polarization_mixedness") {
        polarization_mixedness = parse_number<double>(key, value);
    } else if (key == "seed") {
        seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "out") {
        out = v;
    } else {
        fail(ErrorKind::Parse, "unknown config key '" + std::string(key) + "'");
    }
}

void ScenarioConfig::merge_text(std::string_view text) {
    std::size_t line_no = 0;
    for (auto line : detail::split_lines(text)) {
        ++line_no;
        line = detail::trim(line);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            fail(ErrorKind::Parse, "config line " + std::to_string(line_no) + ": expected key = value");
        set(detail::trim(line.substr(0, eq)), line.substr(eq + 1));
    }
}

void ScenarioConfig::merge_file(const fs::path& path) { merge_text(detail::read_file(path)); }

void ScenarioConfig::validate() const {
    require(kCommands.contains(command), "config needs a command");
    require(std::isfinite(tol) && tol > 0.0, "tol must be positive");
    require(max_block >= 1, "max_block must be at least 1");
    if (capacity_bits) require(std::isfinite(*capacity_bits) && *capacity_bits > 0.0, "capacity_bits must be positive");
    if (command == "complexity") require(bits.has_value() || !in.empty(), "complexity needs 'in' or 'bits'");
    if (command == "entropy" || command == "reality") require(!ensemble.empty(), command + " needs 'ensemble'");
    if (command == "calorimeter" || command == "demo") sim_config().validate();
}

SimConfig ScenarioConfig::sim_config() const {
    SimConfig s;
    s.record_bits_per_photon = record_bits_per_photon;
    s.capacity_bits = capacity_bits.value_or(10.0 * static_cast<double>(record_bits_per_photon));
    s.temperature_kelvin = temperature_kelvin;
    s.num_photons = num_photons;
    s.policy = policy;
    s.record_mode = record_mode;
    s.wavelength_nm = wavelength_nm;
    s.polarization_mixedness = polarization_mixedness;
    s.seed = seed;
    return s;
}

std::string ScenarioConfig::to_text() const {
    std::string t = fmt::format("command = {}\n", command);
    auto kv = [&t](std::string_view k, const auto& v) { t += fmt::format("{} = {}\n", k, v); };
    auto calorimeter_keys = [&] {
        const auto s = sim_config();
        kv("capacity_bits", s.capacity_bits);
        kv("record_bits_per_photon", s.record_bits_per_photon);
        kv("temperature_kelvin", s.temperature_kelvin);
        kv("num_photons", s.num_photons);
        kv("policy", to_string(s.policy));
        kv("record_mode", to_string(s.record_mode));
        kv("wavelength_nm", s.wavelength_nm);
        kv("polarization_mixedness", s.polarization_mixedness);
    };
    if (command == "complexity") {
        if (bits) kv("bits", *bits);
        else kv("in", in);
        kv("estimator", to_string(estimator));
    } else if (command == "entropy") {
        kv("ensemble", ensemble);
        kv("tol", tol);
        kv("max_block", max_block);
    } else if (command == "reality") {
        kv("ensemble", ensemble);
        kv("estimator", to_string(estimator));
        kv("tol", tol);
        kv("max_block", max_block);
        if (capacity_bits) kv("capacity_bits", *capacity_bits);
    } else if (command == "calorimeter") {
        calorimeter_keys();
        kv("seed", seed);
    } else if (command == "demo") {
        kv("estimator", to_string(estimator));
        kv("tol", tol);
        kv("max_block", max_block);
        calorimeter_keys();
        kv("seed", seed);
    }
    const auto dir = out_dir(*this);
    if (!dir.empty()) kv("out", dir);
    return t;
}

void run(const ScenarioConfig& config, std::ostream& out) {
    config.validate();
    if (config.command == "complexity") run_complexity(config, out);
    else if (config.command == "entropy") run_entropy(config, out);
    else if (config.command == "reality") run_reality(config, out);
    else if (config.command == "calorimeter") run_calorimeter(config, out);
    else run_demo(config, out);
}

} // namespace qobs
