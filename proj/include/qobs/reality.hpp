#pragma once

#include "qobs/complexity.hpp"
#include "qobs/entropy.hpp"
#include "qobs/observer.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qobs {

inline constexpr std::size_t kMinCurvePointsForGrowth = 8;
inline constexpr std::size_t kMinObserversForVerdict = 8;

struct CurvePoint {
    std::size_t observers = 0;    // i: number of strings glued so far
    std::size_t length = 0;       // bits in the concatenation of the first i strings
    double k_bits = 0.0;          // complexity estimate of that concatenation
};

/// Complexity of the running concatenation of one system's identification
/// strings, one point per observer count i = 1..N.
struct ConcatenationCurve {
    std::string system_label;
    Estimator estimator = Estimator::Lz76NormalizedBits;
    std::vector<CurvePoint> points;
};

/// Throws Error(InsufficientData) for fewer than two observers.
ConcatenationCurve build_curve(const ObservationEnsemble& ensemble, std::size_t system_index,
                               Estimator estimator);

struct BrudnoRatio {
    std::vector<double> ratio;  // ratio[k] = k_bits / i for point k
    double tail = 0.0;          // mean over the last ceil(N / 4) ratios
};

/// Throws Error(InsufficientData) for fewer than three points.
BrudnoRatio brudno_ratio(const ConcatenationCurve& curve);

/// entry k: points[k].k_bits < capacity of observers[k]. A report, not a
/// check: violations are returned, never thrown. Throws only when the
/// observer list is shorter than the curve.
std::vector<bool> check_observer_bound(const ConcatenationCurve& curve,
                                       std::span<const ObserverSIA> observers);

enum class GrowthClass { Bounded, Logarithmic, SuperLogarithmic };

std::string_view to_string(GrowthClass g);

struct ModelFit {
    double intercept = 0.0;
    double slope = 0.0;       // 0 for the constant model
    double rss = 0.0;
    std::size_t parameters = 0;
    double score = 0.0;       // rss / (N - parameters)
};

struct GrowthFit {
    GrowthClass growth_class = GrowthClass::Bounded;
    ModelFit constant;        // k = a
    ModelFit logarithmic;     // k = a + b log2(i)
    ModelFit linear;          // k = a + c i
};

/// Least-squares fit of the three growth models; the smallest residual
/// variance rss / (N - parameters) wins, ties going to the model with fewer
/// parameters. Requires at least kMinCurvePointsForGrowth points.
GrowthFit classify_growth(const ConcatenationCurve& curve);

struct RealityConfig {
    double tol = kDefaultZeroRateTolerance;
    std::size_t max_block = kDefaultMaxBlock;
    Estimator estimator = Estimator::Lz76NormalizedBits;
};

struct RealityVerdict {
    std::string system_label;
    Estimator estimator = Estimator::Lz76NormalizedBits;
    bool is_element_of_reality = false;
    double entropy_rate_bits = 0.0;   // max of the plug-in and LZ rate estimates
    GrowthClass growth_class = GrowthClass::Bounded;
    GrowthFit fit;
    ZeroRateReport rate;
    BrudnoRatio brudno;
};

/// Element-of-reality test for one system: zero entropy rate of the
/// observation process and at most logarithmic growth of its concatenation
/// curve. Requires at least kMinObserversForVerdict observers.
RealityVerdict is_element_of_reality(const ObservationEnsemble& ensemble, std::size_t system_index,
                                     const RealityConfig& config = {});

/// Verdict from a curve already built for the same system.
RealityVerdict is_element_of_reality(const ObservationEnsemble& ensemble, std::size_t system_index,
                                     const ConcatenationCurve& curve, const RealityConfig& config);

} // namespace qobs
