#include "montyhall/verify.hpp"

#include "montyhall/simulate.hpp"

#include <sstream>
#include <stdexcept>

namespace montyhall {

AnalyticModel AnalyticModel::closed_form() {
    return AnalyticModel{
        [](GameVariant v, const GameParams& params) { return win_marginal(v, params); },
        [](GameVariant v, const GameParams& params) { return partition_probabilities(v, params); },
    };
}

CarDistribution random_car_distribution(std::int64_t doors, Xoshiro256StarStar& rng) {
    std::vector<std::uint64_t> raw(static_cast<std::size_t>(doors));
    std::uint64_t total = 0;
    while (total == 0) {
        total = 0;
        for (auto& w : raw) {
            // Roughly a quarter of the doors never hold the car.
            w = rng.uniform_index(4) == 0 ? 0 : 1 + rng.uniform_index(997);
            total += w;
        }
    }
    std::vector<Rational> alpha;
    alpha.reserve(raw.size());
    for (auto w : raw) alpha.emplace_back(Integer(w), Integer(total));
    return CarDistribution(std::move(alpha));
}

VerifyReport run_verification(const VerifyOptions& options, const AnalyticModel& model) {
    if (options.doors_max < 3) throw std::domain_error("doors-max must be >= 3");
    if (options.placements_per_door < 0) throw std::domain_error("placements must be >= 0");

    VerifyReport report;
    const auto grid = switch_grid(options.grid_step);

    for (GameVariant variant : {GameVariant::LeaveTwoClosed, GameVariant::OpenOne}) {
        for (std::int64_t n = 3; n <= options.doors_max; ++n) {
            const auto uniform = CarDistribution::uniform(n);
            for (const auto& p : grid) {
                const GameParams params(n, p);
                ++report.analytic_checks;
                const auto exact_win = exact_win_probability(variant, params, uniform);
                const auto model_win = model.marginal(variant, params);
                const bool partition_ok = exact_partition(variant, params, uniform) == model.partition(variant, params);
                if (exact_win == model_win && partition_ok) continue;

                ++report.analytic_failures;
                std::ostringstream diff;
                diff << variant_name(variant) << " n=" << n << " p=" << to_fraction_string(p) << ": ";
                if (exact_win != model_win)
                    diff << "P(W) oracle " << to_fraction_string(exact_win.value()) << " vs analytic "
                         << to_fraction_string(model_win.value());
                if (!partition_ok) diff << (exact_win != model_win ? "; " : "") << "partition cells differ";
                report.diffs.push_back(diff.str());
            }
        }
    }

    Xoshiro256StarStar rng(derive_substream_seed(options.seed, 0, 0));
    for (std::int64_t n = 3; n <= options.doors_max; ++n) {
        const GameParams params(n, Rational(0));
        for (std::int64_t i = 0; i < options.placements_per_door; ++i) {
            const auto cars = random_car_distribution(n, rng);
            ++report.placement_checks;
            const auto pe = exact_initial_correct(params, cars);
            if (pe.value() == Rational(1, n)) continue;
            ++report.placement_failures;
            report.diffs.push_back("P(E) for n=" + std::to_string(n) + " is " + to_fraction_string(pe.value()) +
                                   ", expected 1/" + std::to_string(n));
        }
    }
    return report;
}

}  // namespace montyhall
