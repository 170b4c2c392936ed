#pragma once

// Seeded Monte Carlo play of the n-door game.
//
// One trial follows the contestant loop of the reference algorithms: the car
// sits behind door 0, the contestant picks X uniformly, the host acts, a
// Bernoulli(p) draw decides the switch, and the trial is won iff the final
// door is 0. Random draws happen in that order and only when the algorithm
// asks for them, so a scripted source can force any trajectory.

#include "montyhall/analytic.hpp"
#include "montyhall/planner.hpp"
#include "montyhall/random.hpp"

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <vector>

namespace montyhall {

inline constexpr std::int64_t kCarDoor = 0;
inline constexpr std::uint64_t kDefaultChunkSize = 4096;

template <typename R>
concept RandomSource = requires(R& rng, std::uint64_t bound) {
    { rng.uniform_index(bound) } -> std::convertible_to<std::uint64_t>;
    { rng.uniform_unit() } -> std::convertible_to<double>;
};

/// Everything one simulated game decided. `host_door` is the door left
/// closed (LeaveTwoClosed) or the door opened (OpenOne).
struct GameRecord {
    std::int64_t pick = 0;
    std::int64_t host_door = 0;
    bool switched = false;
    std::int64_t final_door = 0;

    bool won() const noexcept { return final_door == kCarDoor; }
};

template <RandomSource R>
GameRecord play_game(GameVariant variant, std::int64_t doors, double p, R& rng) {
    const auto n = static_cast<std::uint64_t>(doors);
    GameRecord g;
    g.pick = static_cast<std::int64_t>(rng.uniform_index(n));

    if (g.pick == kCarDoor) {
        g.host_door = 1 + static_cast<std::int64_t>(rng.uniform_index(n - 1));
    } else if (variant == GameVariant::LeaveTwoClosed) {
        g.host_door = kCarDoor;
    } else {
        // Uniform over the goat doors {1..n-1} minus the pick.
        g.host_door = 1 + static_cast<std::int64_t>(rng.uniform_index(n - 2));
        if (g.host_door >= g.pick) ++g.host_door;
    }

    g.switched = rng.uniform_unit() < p;
    if (!g.switched) {
        g.final_door = g.pick;
    } else if (variant == GameVariant::LeaveTwoClosed) {
        g.final_door = g.host_door;
    } else {
        // Uniform over the n-2 doors that are neither picked nor opened, in index order.
        const std::int64_t lo = std::min(g.pick, g.host_door);
        const std::int64_t hi = std::max(g.pick, g.host_door);
        std::int64_t z = static_cast<std::int64_t>(rng.uniform_index(n - 2));
        if (z >= lo) ++z;
        if (z >= hi) ++z;
        g.final_door = z;
    }
    return g;
}

struct TrialOutcome {
    bool won = false;
};

template <RandomSource R>
TrialOutcome run_trial(GameVariant variant, std::int64_t doors, double p, R& rng) {
    return TrialOutcome{play_game(variant, doors, p, rng).won()};
}

struct SimulationConfig {
    GameVariant variant = GameVariant::LeaveTwoClosed;
    std::int64_t doors = 3;
    double p = 0.0;
    std::uint64_t trials = 1;
    std::uint64_t master_seed = 0;
    std::uint64_t chunk_size = kDefaultChunkSize;
    /// Substream key; sweeps use the grid-point index.
    std::uint64_t stream = 0;
    /// Worker threads; 0 picks the hardware concurrency. Never affects results.
    unsigned threads = 1;

    /// Throws std::domain_error on n < 3, p outside [0,1], zero trials or chunk size.
    void validate() const;
};

struct SimulationResult {
    std::uint64_t trials = 0;
    std::uint64_t wins = 0;
    double empirical = 0.0;
    double std_error = 0.0;

    static SimulationResult from_counts(std::uint64_t trials, std::uint64_t wins);
    Rational empirical_exact() const { return Rational(Integer(wins), Integer(trials)); }
};

/// Wins over one chunk's substream; the unit of work run_batch schedules.
std::uint64_t count_wins(GameVariant variant, std::int64_t doors, double p, std::uint64_t trials,
                         std::uint64_t seed);

SimulationResult run_batch(const SimulationConfig& config);

struct SweepConfig {
    GameVariant variant = GameVariant::LeaveTwoClosed;
    std::int64_t doors = 3;
    Rational grid_step{1, 20};
    std::uint64_t trials = 1;
    std::uint64_t master_seed = 0;
    std::uint64_t chunk_size = kDefaultChunkSize;
    unsigned threads = 1;
    /// Failure probability for the confidence half-widths.
    double delta = 0.01;
};

struct SweepRow {
    Rational p_exact;
    double p = 0.0;
    SimulationResult result;
    Rational analytic_exact;
    double analytic = 0.0;
    double clt_halfwidth = 0.0;
    double chebyshev_halfwidth = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
};

/// Grid {0, step, 2·step, ..., 1}. Throws std::invalid_argument unless
/// 0 < step <= 1 and 1/step is an integer.
std::vector<Rational> switch_grid(const Rational& step);

SweepResult sweep(const SweepConfig& config);

SweepResult sweep(GameVariant variant, std::int64_t doors, const Rational& grid_step, std::uint64_t trials,
                  std::uint64_t master_seed);

}  // namespace montyhall
