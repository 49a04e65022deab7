// Command-line front end. Every subcommand builds a scenario config (from
// --config if given, then flag overrides) and hands it to qobs_run.

#include "qobs/qobs.h"

#include <CLI11.hpp>

#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace {

using Overrides = std::vector<std::pair<std::string, std::optional<std::string>>>;

struct Subcommand {
    CLI::App* app = nullptr;
    std::string name;
    std::optional<std::string> config_file;
    Overrides overrides;

    std::optional<std::string>& flag(const std::string& key) {
        overrides.emplace_back(key, std::nullopt);
        return overrides.back().second;
    }
};

void write_stdout(const char* data, size_t size, void*) { std::fwrite(data, 1, size, stdout); }

int report(qobs_status s) {
    std::fprintf(stderr, "qobs: error: %s\n", qobs_last_error());
    return static_cast<int>(s);
}

int execute(const Subcommand& sub) {
    qobs_config* cfg = nullptr;
    if (auto s = qobs_config_create(nullptr, &cfg); s != QOBS_OK) return report(s);
    auto run = [&]() -> qobs_status {
        if (sub.config_file)
            if (auto s = qobs_config_load_file(cfg, sub.config_file->c_str()); s != QOBS_OK) return s;
        if (auto s = qobs_config_set(cfg, "command", sub.name.c_str()); s != QOBS_OK) return s;
        for (const auto& [key, value] : sub.overrides)
            if (value)
                if (auto s = qobs_config_set(cfg, key.c_str(), value->c_str()); s != QOBS_OK) return s;
        return qobs_run(cfg, write_stdout, nullptr);
    };
    const auto s = run();
    qobs_config_free(cfg);
    std::fflush(stdout);
    return s == QOBS_OK ? 0 : report(s);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Observer-relative complexity, entropy-rate and calorimeter analyses"};
    app.require_subcommand(1);

    // Options are stored in a deque-like list so references stay valid.
    std::vector<std::unique_ptr<Subcommand>> subs;
    auto add = [&](const std::string& name, const std::string& help) -> Subcommand& {
        auto& sub = *subs.emplace_back(std::make_unique<Subcommand>());
        sub.name = name;
        sub.overrides.reserve(16);
        sub.app = app.add_subcommand(name, help);
        sub.app->add_option("--config", sub.config_file, "key = value scenario file")->check(CLI::ExistingFile);
        sub.app->add_option("--out", sub.flag("out"), "output directory");
        sub.app->add_option("--seed", sub.flag("seed"), "RNG seed");
        return sub;
    };

    auto& complexity = add("complexity", "complexity estimate of one bit string");
    complexity.app->add_option("--in", complexity.flag("in"), "file holding '0'/'1' text");
    complexity.app->add_option("--bits", complexity.flag("bits"), "bit string given inline");
    complexity.app->add_option("--estimator", complexity.flag("estimator"),
                               "LZ76_PHRASES | LZ76_NORMALIZED_BITS | DICTIONARY_CODE_LENGTH");

    auto& entropy = add("entropy", "entropy rate of each system's observation process");
    entropy.app->add_option("--ensemble", entropy.flag("ensemble"), "ensemble CSV");
    entropy.app->add_option("--max-block", entropy.flag("max_block"), "plug-in block length");
    entropy.app->add_option("--tol", entropy.flag("tol"), "zero-rate tolerance in bits");

    auto& reality = add("reality", "element-of-reality verdict per system");
    reality.app->add_option("--ensemble", reality.flag("ensemble"), "ensemble CSV");
    reality.app->add_option("--tol", reality.flag("tol"), "zero-rate tolerance in bits");
    reality.app->add_option("--max-block", reality.flag("max_block"), "plug-in block length");
    reality.app->add_option("--estimator", reality.flag("estimator"), "complexity estimator");
    reality.app->add_option("--capacity-bits", reality.flag("capacity_bits"), "observer capacity in bits");

    auto& calorimeter = add("calorimeter", "photon absorption with memory saturation");
    auto& demo = add("demo", "built-in controls and the calorimeter scenario");
    for (auto* sub : {&calorimeter, &demo}) {
        sub->app->add_option("--capacity-bits", sub->flag("capacity_bits"), "observer memory in bits");
        sub->app->add_option("--record-bits", sub->flag("record_bits_per_photon"), "bits recorded per photon");
        sub->app->add_option("--temperature", sub->flag("temperature_kelvin"), "bath temperature in K");
        sub->app->add_option("--photons", sub->flag("num_photons"), "number of photons");
        sub->app->add_option("--policy", sub->flag("policy"), "ERASE_ALL | ERASE_OLDEST");
        sub->app->add_option("--record-mode", sub->flag("record_mode"), "RANDOM | COMPRESSIBLE");
    }
    demo.app->add_option("--estimator", demo.flag("estimator"), "complexity estimator for the controls");

    CLI11_PARSE(app, argc, argv);

    for (const auto& sub : subs)
        if (sub->app->parsed()) return execute(*sub);
    return 2;
}
