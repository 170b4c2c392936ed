#pragma once

// Exhaustive cross-check of the closed forms against the enumeration oracle.

#include "montyhall/analytic.hpp"
#include "montyhall/oracle.hpp"
#include "montyhall/random.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace montyhall {

/// The closed-form surface under test. Swappable so that a deliberately
/// broken model can prove the check detects it.
struct AnalyticModel {
    std::function<Probability(GameVariant, const GameParams&)> marginal;
    std::function<PartitionProbabilities(GameVariant, const GameParams&)> partition;

    static AnalyticModel closed_form();
};

struct VerifyOptions {
    std::int64_t doors_max = 10;
    std::int64_t placements_per_door = 50;
    std::uint64_t seed = 0;
    Rational grid_step{1, 20};
};

struct VerifyReport {
    std::uint64_t analytic_checks = 0;
    std::uint64_t analytic_failures = 0;
    std::uint64_t placement_checks = 0;
    std::uint64_t placement_failures = 0;
    std::vector<std::string> diffs;

    bool passed() const noexcept { return analytic_failures == 0 && placement_failures == 0; }
};

/// A random car placement over `doors` doors with rational weights; some
/// entries are zero, at least one is positive.
CarDistribution random_car_distribution(std::int64_t doors, Xoshiro256StarStar& rng);

/// For both variants, every n in [3, doors_max] and every grid p: oracle win
/// probability and partition equal the model's, exactly. Then P(E) = 1/n on
/// `placements_per_door` random placements per n.
VerifyReport run_verification(const VerifyOptions& options, const AnalyticModel& model = AnalyticModel::closed_form());

}  // namespace montyhall
