#include "montyhall/planner.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace montyhall {

namespace {

// Acklam's coefficients for the inverse normal CDF.
constexpr double kA[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                         1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
constexpr double kB[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                         6.680131188771972e+01,  -1.328068155288572e+01};
constexpr double kC[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                         -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
constexpr double kD[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                         3.754408661907416e+00};
constexpr double kLowBreak = 0.02425;

double acklam(double x) {
    if (x < kLowBreak) {
        const double q = std::sqrt(-2 * std::log(x));
        return (((((kC[0] * q + kC[1]) * q + kC[2]) * q + kC[3]) * q + kC[4]) * q + kC[5]) /
               ((((kD[0] * q + kD[1]) * q + kD[2]) * q + kD[3]) * q + 1);
    }
    if (x > 1 - kLowBreak) {
        const double q = std::sqrt(-2 * std::log1p(-x));
        return -(((((kC[0] * q + kC[1]) * q + kC[2]) * q + kC[3]) * q + kC[4]) * q + kC[5]) /
               ((((kD[0] * q + kD[1]) * q + kD[2]) * q + kD[3]) * q + 1);
    }
    const double q = x - 0.5;
    const double r = q * q;
    return (((((kA[0] * r + kA[1]) * r + kA[2]) * r + kA[3]) * r + kA[4]) * r + kA[5]) * q /
           (((((kB[0] * r + kB[1]) * r + kB[2]) * r + kB[3]) * r + kB[4]) * r + 1);
}

// Ceiling that ignores floating-point noise around an exact integer, e.g.
// 0.25 / (0.01 * 0.01 * 0.01) evaluating a few ulps above 250000.
std::uint64_t ceil_count(double value) {
    if (!std::isfinite(value)) throw std::overflow_error("sample size is not finite");
    if (value <= 1) return 1;
    if (value >= static_cast<double>(std::numeric_limits<std::uint64_t>::max()))
        throw std::overflow_error("sample size exceeds 64 bits");
    const double nearest = std::round(value);
    if (std::abs(value - nearest) <= 1e-9 * nearest) return static_cast<std::uint64_t>(nearest);
    return static_cast<std::uint64_t>(std::ceil(value));
}

void require_delta(double delta) {
    if (!(delta > 0 && delta < 1))
        throw std::domain_error("delta must lie in (0, 1), got " + std::to_string(delta));
}

}  // namespace

std::string_view method_name(PlanMethod method) {
    switch (method) {
        case PlanMethod::CLT: return "clt";
        case PlanMethod::Chebyshev: return "chebyshev";
    }
    return "unknown";
}

PlanMethod parse_method(std::string_view name) {
    if (name == "clt") return PlanMethod::CLT;
    if (name == "chebyshev") return PlanMethod::Chebyshev;
    throw std::invalid_argument("unknown method '" + std::string(name) + "' (expected clt or chebyshev)");
}

void PlanRequest::validate() const {
    if (!(epsilon > 0) || !std::isfinite(epsilon))
        throw std::domain_error("epsilon must be > 0, got " + std::to_string(epsilon));
    require_delta(delta);
    if (!(p_win >= 0 && p_win <= 1))
        throw std::domain_error("p_win must lie in [0, 1], got " + std::to_string(p_win));
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double normal_quantile(double x) {
    if (!(x > 0 && x < 1)) throw std::domain_error("quantile level must lie in (0, 1)");
    double z = acklam(x);
    // Halley step on Φ(z) - x.
    const double e = normal_cdf(z) - x;
    const double u = e * std::sqrt(2 * std::numbers::pi) * std::exp(z * z / 2);
    z -= u / (1 + z * u / 2);
    return z;
}

SampleSizePlan sample_size(const PlanRequest& request) {
    request.validate();
    const double variance = request.p_win * (1 - request.p_win);
    const double eps2 = request.epsilon * request.epsilon;

    SampleSizePlan plan;
    plan.method = request.method;
    switch (request.method) {
        case PlanMethod::CLT: {
            const double z = normal_quantile(1 - request.delta / 2);
            plan.z_x = z;
            plan.l0 = ceil_count(z * z * variance / eps2);
            break;
        }
        case PlanMethod::Chebyshev:
            plan.l0 = ceil_count(variance / (request.delta * eps2));
            break;
    }
    return plan;
}

double band_halfwidth(double p_win, std::uint64_t trials, double delta, PlanMethod method) {
    if (trials < 1) throw std::domain_error("trials must be >= 1");
    require_delta(delta);
    if (!(p_win >= 0 && p_win <= 1)) throw std::domain_error("p_win must lie in [0, 1]");
    const double variance = p_win * (1 - p_win);
    const auto l = static_cast<double>(trials);
    switch (method) {
        case PlanMethod::CLT:
            return normal_quantile(1 - delta / 2) * std::sqrt(variance / l);
        case PlanMethod::Chebyshev:
            return std::sqrt(variance / (delta * l));
    }
    throw std::logic_error("unknown method");
}

}  // namespace montyhall
