#pragma once

// Minimum trial counts for estimating a win probability to within epsilon
// with failure probability delta, from the normal approximation (CLT) or
// from Chebyshev's inequality, and the matching confidence half-widths.

#include <cstdint>
#include <optional>
#include <string_view>

namespace montyhall {

enum class PlanMethod { CLT, Chebyshev };

std::string_view method_name(PlanMethod method);
/// Accepts "clt" or "chebyshev"; throws std::invalid_argument.
PlanMethod parse_method(std::string_view name);

struct PlanRequest {
    double p_win = 0.5;
    double epsilon = 0.01;
    double delta = 0.01;
    PlanMethod method = PlanMethod::CLT;

    /// Throws std::domain_error unless epsilon > 0, 0 < delta < 1, 0 <= p_win <= 1.
    void validate() const;
};

struct SampleSizePlan {
    std::uint64_t l0 = 1;
    PlanMethod method = PlanMethod::CLT;
    /// Standard normal quantile at 1 - delta/2; CLT only.
    std::optional<double> z_x;
};

/// Standard normal CDF.
double normal_cdf(double z);

/// Inverse of normal_cdf on (0, 1). Acklam's rational approximation followed
/// by one Halley step against the erfc-based CDF; absolute error well under
/// 1e-8. Throws std::domain_error outside (0, 1).
double normal_quantile(double x);

/// CLT: ceil(z² p(1-p) / ε²). Chebyshev: ceil(p(1-p) / (δ ε²)). Clamped to >= 1.
SampleSizePlan sample_size(const PlanRequest& request);

/// Half-width of the band that holds the empirical frequency after `trials`
/// trials with probability at least 1 - delta.
double band_halfwidth(double p_win, std::uint64_t trials, double delta, PlanMethod method);

}  // namespace montyhall
