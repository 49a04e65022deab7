#include "qobs/qobs.h"

#include "qobs/ensemble_csv.hpp"
#include "qobs/error.hpp"
#include "qobs/observer.hpp"
#include "qobs/reality.hpp"
#include "qobs/runner.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <vector>

struct qobs_bitstring {
    qobs::BitString value;
};

struct qobs_ensemble {
    qobs::ObservationEnsemble value;
};

struct qobs_config {
    qobs::ScenarioConfig value;
};

namespace {

thread_local std::string g_last_error;

qobs_status status_of(qobs::ErrorKind k) {
    switch (k) {
    case qobs::ErrorKind::InvalidArgument: return QOBS_INVALID_ARGUMENT;
    case qobs::ErrorKind::InsufficientData: return QOBS_INSUFFICIENT_DATA;
    case qobs::ErrorKind::Io: return QOBS_IO_ERROR;
    case qobs::ErrorKind::Parse: return QOBS_PARSE_ERROR;
    }
    return QOBS_INTERNAL_ERROR;
}

template <class F>
qobs_status guarded(F&& body) {
    try {
        body();
        g_last_error.clear();
        return QOBS_OK;
    } catch (const qobs::Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
    } catch (const std::exception& e) {
        g_last_error = e.what();
    } catch (...) {
        g_last_error = "unknown error";
    }
    return QOBS_INTERNAL_ERROR;
}

void need(const void* p, const char* what) {
    if (p == nullptr) qobs::fail(qobs::ErrorKind::InvalidArgument, std::string(what) + " is NULL");
}

qobs::Estimator estimator_of(qobs_estimator e) {
    switch (e) {
    case QOBS_LZ76_PHRASES: return qobs::Estimator::Lz76Phrases;
    case QOBS_LZ76_NORMALIZED_BITS: return qobs::Estimator::Lz76NormalizedBits;
    case QOBS_DICTIONARY_CODE_LENGTH: return qobs::Estimator::DictionaryCodeLength;
    }
    qobs::fail(qobs::ErrorKind::InvalidArgument, "unknown estimator");
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* qobs_last_error(void) { return g_last_error.c_str(); }

void qobs_string_free(char* s) { std::free(s); }

qobs_status qobs_bitstring_from_text(const char* text, qobs_bitstring** out) {
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        *out = new qobs_bitstring{qobs::BitString::from_text(text)};
    });
}

void qobs_bitstring_free(qobs_bitstring* s) { delete s; }

size_t qobs_bitstring_length(const qobs_bitstring* s) { return s ? s->value.size() : 0; }

qobs_status qobs_bitstring_to_text(const qobs_bitstring* s, char** out) {
    return guarded([&] {
        need(s, "bitstring");
        need(out, "out");
        *out = copy_string(s->value.to_text());
    });
}

qobs_status qobs_bitstring_concat(const qobs_bitstring* const* parts, size_t count, qobs_bitstring** out) {
    return guarded([&] {
        need(out, "out");
        if (count > 0) need(parts, "parts");
        std::vector<qobs::BitString> v;
        v.reserve(count);
        for (size_t k = 0; k < count; ++k) {
            need(parts[k], "part");
            v.push_back(parts[k]->value);
        }
        *out = new qobs_bitstring{qobs::concat(v)};
    });
}

qobs_status qobs_lz76_phrase_count(const qobs_bitstring* s, size_t* out) {
    return guarded([&] {
        need(s, "bitstring");
        need(out, "out");
        *out = qobs::lz76_phrase_count(s->value);
    });
}

qobs_status qobs_complexity(const qobs_bitstring* s, qobs_estimator estimator, double* out_bits) {
    return guarded([&] {
        need(s, "bitstring");
        need(out_bits, "out");
        *out_bits = qobs::estimate(s->value, estimator_of(estimator)).value_bits;
    });
}

qobs_status qobs_dictionary_encode(const qobs_bitstring* s, qobs_bitstring** out) {
    return guarded([&] {
        need(s, "bitstring");
        need(out, "out");
        *out = new qobs_bitstring{qobs::dictionary_encode(s->value)};
    });
}

qobs_status qobs_dictionary_decode(const qobs_bitstring* code, qobs_bitstring** out) {
    return guarded([&] {
        need(code, "code");
        need(out, "out");
        *out = new qobs_bitstring{qobs::dictionary_decode(code->value)};
    });
}

qobs_status qobs_shannon_entropy(const double* probabilities, size_t count, double* out_bits) {
    return guarded([&] {
        need(out_bits, "out");
        if (count > 0) need(probabilities, "probabilities");
        *out_bits = qobs::shannon_entropy(std::span<const double>(probabilities, count));
    });
}

qobs_status qobs_ensemble_load_csv(const char* path, qobs_ensemble** out) {
    return guarded([&] {
        need(path, "path");
        need(out, "out");
        *out = new qobs_ensemble{qobs::load_ensemble_csv(path)};
    });
}

qobs_status qobs_ensemble_parse_csv(const char* text, qobs_ensemble** out) {
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        *out = new qobs_ensemble{qobs::parse_ensemble_csv(text)};
    });
}

void qobs_ensemble_free(qobs_ensemble* e) { delete e; }

size_t qobs_ensemble_observers(const qobs_ensemble* e) { return e ? e->value.num_observers() : 0; }

size_t qobs_ensemble_systems(const qobs_ensemble* e) { return e ? e->value.num_systems() : 0; }

const char* qobs_ensemble_system_label(const qobs_ensemble* e, size_t system_index) {
    if (e == nullptr || system_index >= e->value.num_systems()) return nullptr;
    return e->value.system_labels()[system_index].c_str();
}

qobs_status qobs_zero_rate(const qobs_ensemble* e, size_t system_index, double tol, size_t max_block,
                           qobs_zero_rate_result* out) {
    return guarded([&] {
        need(e, "ensemble");
        need(out, "out");
        const auto r = qobs::zero_rate_report(e->value, system_index, tol, max_block);
        *out = {r.plugin_rate, r.lz_rate, r.block_used, r.zero ? 1 : 0};
    });
}

qobs_status qobs_reality_verdict(const qobs_ensemble* e, size_t system_index, double tol, size_t max_block,
                                 qobs_estimator estimator, qobs_verdict* out) {
    return guarded([&] {
        need(e, "ensemble");
        need(out, "out");
        const auto v =
            qobs::is_element_of_reality(e->value, system_index, {tol, max_block, estimator_of(estimator)});
        *out = {v.is_element_of_reality ? 1 : 0, v.entropy_rate_bits,
                static_cast<qobs_growth_class>(static_cast<int>(v.growth_class)), v.brudno.tail};
    });
}

qobs_status qobs_classify(double complexity_bits, double capacity_bits, qobs_classification* out) {
    return guarded([&] {
        need(out, "out");
        *out = qobs::classify(complexity_bits, capacity_bits) == qobs::Classification::Quantum ? QOBS_QUANTUM
                                                                                                : QOBS_CLASSICAL;
    });
}

qobs_status qobs_landauer_heat(double bits, double temperature_kelvin, double* out_joules) {
    return guarded([&] {
        need(out_joules, "out");
        *out_joules = qobs::landauer_heat(bits, temperature_kelvin);
    });
}

qobs_status qobs_photon_entropy(double mixedness, double* out_bits) {
    return guarded([&] {
        need(out_bits, "out");
        *out_bits = qobs::photon_entropy(mixedness);
    });
}

qobs_status qobs_config_create(const char* command, qobs_config** out) {
    return guarded([&] {
        need(out, "out");
        auto c = std::make_unique<qobs_config>();
        if (command != nullptr && *command != '\0') c->value.set("command", command);
        *out = c.release();
    });
}

void qobs_config_free(qobs_config* c) { delete c; }

qobs_status qobs_config_set(qobs_config* c, const char* key, const char* value) {
    return guarded([&] {
        need(c, "config");
        need(key, "key");
        need(value, "value");
        c->value.set(key, value);
    });
}

qobs_status qobs_config_load_file(qobs_config* c, const char* path) {
    return guarded([&] {
        need(c, "config");
        need(path, "path");
        c->value.merge_file(path);
    });
}

qobs_status qobs_config_to_text(const qobs_config* c, char** out) {
    return guarded([&] {
        need(c, "config");
        need(out, "out");
        *out = copy_string(c->value.to_text());
    });
}

qobs_status qobs_run(const qobs_config* c, qobs_write_fn write, void* user) {
    return guarded([&] {
        need(c, "config");
        std::ostringstream console;
        qobs::run(c->value, console);
        const auto text = console.str();
        if (write != nullptr && !text.empty()) write(text.data(), text.size(), user);
    });
}

} // extern "C"
