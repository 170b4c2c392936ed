#pragma once

// Brute-force enumeration of every game trajectory with exact weights.
//
// This is the ground truth the closed forms and the simulator are checked
// against. It shares no formulas with analytic.cpp: every probability is a
// sum of explicit path weights through car placement, initial pick, host
// action, switch decision and final door.
//
// Doors are 0-based. The contestant's first pick is uniform; the car placement
// may be any distribution.

#include "montyhall/analytic.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace montyhall {

/// alpha[i] = P(car behind door i). Validated on construction: every entry
/// non-negative and the entries sum to exactly 1.
class CarDistribution {
public:
    explicit CarDistribution(std::vector<Rational> alpha);

    static CarDistribution uniform(std::int64_t doors);
    /// All mass on `door`.
    static CarDistribution point(std::int64_t doors, std::int64_t door);

    std::int64_t doors() const noexcept { return static_cast<std::int64_t>(alpha_.size()); }
    const Rational& operator[](std::size_t door) const { return alpha_[door]; }
    const std::vector<Rational>& weights() const noexcept { return alpha_; }

private:
    std::vector<Rational> alpha_;
};

struct Trajectory {
    std::int64_t car = 0;
    std::int64_t pick = 0;
    std::vector<std::int64_t> host_opens;  // sorted ascending
    bool switched = false;
    std::int64_t final_door = 0;
    Rational weight;

    bool won() const noexcept { return final_door == car; }
    bool initially_correct() const noexcept { return pick == car; }
};

using TrajectoryVisitor = std::function<void(const Trajectory&)>;

/// Calls `visit` once per trajectory of positive weight, in the fixed order
/// car × pick × host action × switch decision × final door.
void for_each_trajectory(GameVariant variant, const GameParams& params, const CarDistribution& cars,
                         const TrajectoryVisitor& visit);

std::vector<Trajectory> enumerate_trajectories(GameVariant variant, const GameParams& params,
                                               const CarDistribution& cars);

Probability exact_win_probability(GameVariant variant, const GameParams& params,
                                  const CarDistribution& cars);

PartitionProbabilities exact_partition(GameVariant variant, const GameParams& params,
                                       const CarDistribution& cars);

/// P(E) by enumeration over car placement and pick; 1/n for any placement.
Probability exact_initial_correct(const GameParams& params, const CarDistribution& cars);

}  // namespace montyhall
