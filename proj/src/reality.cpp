#include "qobs/reality.hpp"

#include "qobs/error.hpp"

#include <cmath>
#include <numeric>

namespace qobs {

ConcatenationCurve build_curve(const ObservationEnsemble& ensemble, std::size_t system_index,
                               Estimator estimator) {
    const auto column = ensemble.column(system_index);
    if (column.size() < 2)
        fail(ErrorKind::InsufficientData, "a concatenation curve needs at least two observers");

    std::vector<std::size_t> ends;
    ends.reserve(column.size());
    std::size_t total = 0;
    for (const auto& s : column) ends.push_back(total += s.size());

    const auto symbols = concat_symbols(column);
    const auto estimates = prefix_estimates(symbols, ends, estimator);

    ConcatenationCurve curve{ensemble.system_labels()[system_index], estimator, {}};
    curve.points.reserve(column.size());
    for (std::size_t k = 0; k < column.size(); ++k)
        curve.points.push_back({k + 1, ends[k], estimates[k].value_bits});
    return curve;
}

BrudnoRatio brudno_ratio(const ConcatenationCurve& curve) {
    const auto n = curve.points.size();
    if (n < 3) fail(ErrorKind::InsufficientData, "Brudno ratio needs at least three points");
    BrudnoRatio out;
    out.ratio.reserve(n);
    for (const auto& p : curve.points) out.ratio.push_back(p.k_bits / static_cast<double>(p.observers));
    const std::size_t tail = (n + 3) / 4;
    out.tail = std::accumulate(out.ratio.end() - static_cast<std::ptrdiff_t>(tail), out.ratio.end(), 0.0) /
               static_cast<double>(tail);
    return out;
}

std::vector<bool> check_observer_bound(const ConcatenationCurve& curve,
                                       std::span<const ObserverSIA> observers) {
    require(observers.size() >= curve.points.size(),
            "observer list does not cover the curve: " + std::to_string(observers.size()) + " < " +
                std::to_string(curve.points.size()));
    std::vector<bool> report;
    report.reserve(curve.points.size());
    for (std::size_t k = 0; k < curve.points.size(); ++k)
        report.push_back(curve.points[k].k_bits < observers[k].capacity_bits());
    return report;
}

std::string_view to_string(GrowthClass g) {
    switch (g) {
    case GrowthClass::Bounded: return "BOUNDED";
    case GrowthClass::Logarithmic: return "LOGARITHMIC";
    case GrowthClass::SuperLogarithmic: return "SUPER_LOGARITHMIC";
    }
    return "UNKNOWN";
}

namespace {

ModelFit fit_constant(std::span<const double> y) {
    const double n = static_cast<double>(y.size());
    const double mean = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double rss = 0.0;
    for (double v : y) rss += (v - mean) * (v - mean);
    return {mean, 0.0, rss, 1, rss / (n - 1.0)};
}

ModelFit fit_line(std::span<const double> x, std::span<const double> y) {
    const double n = static_cast<double>(y.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < y.size(); ++k) {
        sxx += (x[k] - mx) * (x[k] - mx);
        sxy += (x[k] - mx) * (y[k] - my);
    }
    const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
    const double intercept = my - slope * mx;
    double rss = 0.0;
    for (std::size_t k = 0; k < y.size(); ++k) {
        const double r = y[k] - (intercept + slope * x[k]);
        rss += r * r;
    }
    return {intercept, slope, rss, 2, rss / (n - 2.0)};
}

// Strictly better by more than rounding noise relative to the curve scale.
bool beats(const ModelFit& candidate, const ModelFit& incumbent, double scale) {
    return candidate.score < incumbent.score - 1e-12 * (1.0 + scale);
}

} // namespace

GrowthFit classify_growth(const ConcatenationCurve& curve) {
    const auto n = curve.points.size();
    if (n < kMinCurvePointsForGrowth)
        fail(ErrorKind::InsufficientData, "growth classification needs at least " +
                                              std::to_string(kMinCurvePointsForGrowth) + " points");
    std::vector<double> y, log_i, lin_i;
    y.reserve(n);
    log_i.reserve(n);
    lin_i.reserve(n);
    double scale = 0.0;
    for (const auto& p : curve.points) {
        y.push_back(p.k_bits);
        lin_i.push_back(static_cast<double>(p.observers));
        log_i.push_back(std::log2(static_cast<double>(p.observers)));
        scale = std::max(scale, std::abs(p.k_bits));
    }

    GrowthFit fit;
    fit.constant = fit_constant(y);
    fit.logarithmic = fit_line(log_i, y);
    fit.linear = fit_line(lin_i, y);

    const double noise = scale * scale;
    fit.growth_class = GrowthClass::Bounded;
    const ModelFit* best = &fit.constant;
    if (beats(fit.logarithmic, *best, noise)) {
        best = &fit.logarithmic;
        fit.growth_class = GrowthClass::Logarithmic;
    }
    if (beats(fit.linear, *best, noise)) fit.growth_class = GrowthClass::SuperLogarithmic;
    return fit;
}

RealityVerdict is_element_of_reality(const ObservationEnsemble& ensemble, std::size_t system_index,
                                     const ConcatenationCurve& curve, const RealityConfig& config) {
    if (ensemble.num_observers() < kMinObserversForVerdict)
        fail(ErrorKind::InsufficientData, "a reality verdict needs at least " +
                                              std::to_string(kMinObserversForVerdict) + " observers");
    RealityVerdict v;
    v.system_label = curve.system_label;
    v.estimator = curve.estimator;
    v.rate = zero_rate_report(ensemble, system_index, config.tol, config.max_block);
    v.entropy_rate_bits = std::max(v.rate.plugin_rate, v.rate.lz_rate);
    v.fit = classify_growth(curve);
    v.growth_class = v.fit.growth_class;
    v.brudno = brudno_ratio(curve);
    v.is_element_of_reality = v.rate.zero && v.growth_class != GrowthClass::SuperLogarithmic;
    return v;
}

RealityVerdict is_element_of_reality(const ObservationEnsemble& ensemble, std::size_t system_index,
                                     const RealityConfig& config) {
    if (ensemble.num_observers() < kMinObserversForVerdict)
        fail(ErrorKind::InsufficientData, "a reality verdict needs at least " +
                                              std::to_string(kMinObserversForVerdict) + " observers");
    return is_element_of_reality(ensemble, system_index,
                                 build_curve(ensemble, system_index, config.estimator), config);
}

} // namespace qobs
