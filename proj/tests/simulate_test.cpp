#include "montyhall/oracle.hpp"
#include "montyhall/simulate.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <deque>
#include <map>
#include <tuple>

namespace montyhall {
namespace {

// Replays fixed draws and records the bound of every index request.
class ScriptedSource {
public:
    ScriptedSource(std::deque<std::uint64_t> indices, std::deque<double> units)
        : indices_(std::move(indices)), units_(std::move(units)) {}

    std::uint64_t uniform_index(std::uint64_t bound) {
        bounds.push_back(bound);
        if (indices_.empty()) throw std::logic_error("script ran out of index draws");
        const auto v = indices_.front();
        indices_.pop_front();
        if (v >= bound) throw std::logic_error("scripted draw out of range");
        return v;
    }
    double uniform_unit() {
        if (units_.empty()) throw std::logic_error("script ran out of unit draws");
        const auto v = units_.front();
        units_.pop_front();
        return v;
    }
    bool exhausted() const { return indices_.empty() && units_.empty(); }

    std::vector<std::uint64_t> bounds;

private:
    std::deque<std::uint64_t> indices_;
    std::deque<double> units_;
};

static_assert(RandomSource<ScriptedSource>);
static_assert(RandomSource<Xoshiro256StarStar>);

TEST(RunTrial, LeaveTwoGoatPickAlwaysSwitchWins) {
    // Door 2 in 1-based numbering is index 1; the host leaves the car door closed with no draw.
    ScriptedSource rng({1}, {0.999});
    EXPECT_TRUE(run_trial(GameVariant::LeaveTwoClosed, 3, 1.0, rng).won);
    EXPECT_TRUE(rng.exhausted());
    EXPECT_EQ(rng.bounds, (std::vector<std::uint64_t>{3}));
}

TEST(RunTrial, CorrectPickNeverSwitchWins) {
    for (auto v : {GameVariant::LeaveTwoClosed, GameVariant::OpenOne}) {
        for (std::int64_t n : {3, 4, 10}) {
            ScriptedSource rng({0, 0}, {0.0});
            EXPECT_TRUE(run_trial(v, n, 0.0, rng).won);
            EXPECT_TRUE(rng.exhausted());
            // Host draws over the n-1 goat doors.
            EXPECT_EQ(rng.bounds, (std::vector<std::uint64_t>{static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(n - 1)}));
        }
    }
}

TEST(RunTrial, OpenOneFinalDoorDrawnFromRemainingDoors) {
    // X = door 2 (index 1), host opens door 3 (index 2), remaining {1, 4, 5} = indices {0, 3, 4}.
    const std::int64_t expected_final[] = {0, 3, 4};
    for (std::uint64_t z = 0; z < 3; ++z) {
        // Host draw k maps to goat door 1 + k, skipping the pick: k = 0 -> door index 2.
        ScriptedSource rng({1, 0, z}, {0.25});
        const auto game = play_game(GameVariant::OpenOne, 5, 1.0, rng);
        EXPECT_EQ(game.pick, 1);
        EXPECT_EQ(game.host_door, 2);
        EXPECT_TRUE(game.switched);
        EXPECT_EQ(game.final_door, expected_final[z]);
        EXPECT_EQ(game.won(), z == 0);
        EXPECT_EQ(rng.bounds, (std::vector<std::uint64_t>{5, 3, 3}));
    }
}

TEST(RunTrial, BernoulliThresholdIsStrict) {
    ScriptedSource stay({1}, {0.5});
    EXPECT_FALSE(play_game(GameVariant::LeaveTwoClosed, 3, 0.5, stay).switched);
    ScriptedSource change({1}, {0.4999});
    EXPECT_TRUE(play_game(GameVariant::LeaveTwoClosed, 3, 0.5, change).switched);
}

TEST(PlayGame, HostNeverRevealsCarOrPick) {
    Xoshiro256StarStar rng(17);
    for (int i = 0; i < 20000; ++i) {
        const std::int64_t n = 3 + static_cast<std::int64_t>(rng.uniform_index(8));
        const auto g = play_game(GameVariant::OpenOne, n, 0.5, rng);
        ASSERT_NE(g.host_door, g.pick);
        ASSERT_NE(g.host_door, kCarDoor);
        ASSERT_LT(g.final_door, n);
        if (g.switched) {
            ASSERT_NE(g.final_door, g.pick);
            ASSERT_NE(g.final_door, g.host_door);
        }
        const auto k = play_game(GameVariant::LeaveTwoClosed, n, 0.5, rng);
        ASSERT_NE(k.host_door, k.pick);
        if (k.pick != kCarDoor) ASSERT_EQ(k.host_door, kCarDoor);
    }
}

TEST(RunBatch, ReferenceRuns) {
    SimulationConfig c;
    c.variant = GameVariant::LeaveTwoClosed;
    c.doors = 3;
    c.trials = 100000;
    c.master_seed = 42;
    c.p = 0.0;
    EXPECT_NEAR(run_batch(c).empirical, 1.0 / 3, 0.01);
    c.p = 1.0;
    EXPECT_NEAR(run_batch(c).empirical, 2.0 / 3, 0.01);

    c.variant = GameVariant::OpenOne;
    c.doors = 15;
    c.trials = 250000;
    c.master_seed = 7;
    EXPECT_NEAR(run_batch(c).empirical, 1.0 / 15 + 1.0 / 195, 0.01);
}

TEST(RunBatch, ResultFieldsAreConsistent) {
    SimulationConfig c;
    c.variant = GameVariant::OpenOne;
    c.doors = 6;
    c.p = 0.3;
    c.trials = 12345;
    c.master_seed = 3;
    const auto r = run_batch(c);
    EXPECT_EQ(r.trials, 12345u);
    EXPECT_LE(r.wins, r.trials);
    EXPECT_DOUBLE_EQ(r.empirical, static_cast<double>(r.wins) / 12345.0);
    EXPECT_DOUBLE_EQ(r.std_error, std::sqrt(r.empirical * (1 - r.empirical) / 12345.0));
}

TEST(RunBatch, DeterministicAcrossThreadCounts) {
    SimulationConfig c;
    c.variant = GameVariant::OpenOne;
    c.doors = 7;
    c.p = 0.65;
    c.trials = 100003;  // ragged final chunk
    c.master_seed = 123;
    c.chunk_size = 1000;
    c.threads = 1;
    const auto serial = run_batch(c);
    for (unsigned threads : {0u, 2u, 3u, 8u, 200u}) {
        c.threads = threads;
        EXPECT_EQ(run_batch(c).wins, serial.wins) << threads << " threads";
    }
    c.threads = 1;
    EXPECT_EQ(run_batch(c).wins, serial.wins);
    c.master_seed = 124;
    EXPECT_NE(run_batch(c).wins, serial.wins);
}

TEST(RunBatch, ChunksSumToBatch) {
    SimulationConfig c;
    c.variant = GameVariant::LeaveTwoClosed;
    c.doors = 5;
    c.p = 0.4;
    c.trials = 10000;
    c.master_seed = 77;
    c.chunk_size = 3000;
    c.stream = 4;
    std::uint64_t wins = 0;
    for (std::uint64_t j = 0; j < 4; ++j)
        wins += count_wins(c.variant, c.doors, c.p, j < 3 ? 3000 : 1000, derive_substream_seed(77, 4, j));
    EXPECT_EQ(run_batch(c).wins, wins);
}

// Replays one chunk with the same substream and counts initial hits directly.
TEST(RunBatch, DegenerateSwitchProbabilitiesAreExact) {
    const std::uint64_t trials = 50000;
    const std::uint64_t seed = derive_substream_seed(9, 0, 0);
    for (auto v : {GameVariant::LeaveTwoClosed, GameVariant::OpenOne}) {
        for (std::int64_t n : {3, 4, 9}) {
            Xoshiro256StarStar replay(seed);
            std::uint64_t hits = 0;
            for (std::uint64_t i = 0; i < trials; ++i) hits += play_game(v, n, 0.0, replay).pick == kCarDoor;
            EXPECT_EQ(count_wins(v, n, 0.0, trials, seed), hits);
        }
    }
    Xoshiro256StarStar replay(seed);
    std::uint64_t misses = 0;
    for (std::uint64_t i = 0; i < trials; ++i)
        misses += play_game(GameVariant::LeaveTwoClosed, 6, 1.0, replay).pick != kCarDoor;
    EXPECT_EQ(count_wins(GameVariant::LeaveTwoClosed, 6, 1.0, trials, seed), misses);
}

TEST(RunBatch, RejectsInvalidConfig) {
    SimulationConfig c;
    c.doors = 2;
    EXPECT_THROW(run_batch(c), std::domain_error);
    c.doors = 3;
    c.p = 1.5;
    EXPECT_THROW(run_batch(c), std::domain_error);
    c.p = 0.5;
    c.trials = 0;
    EXPECT_THROW(run_batch(c), std::domain_error);
    c.trials = 10;
    c.chunk_size = 0;
    EXPECT_THROW(run_batch(c), std::domain_error);
}

TEST(SwitchGrid, Construction) {
    const auto grid = switch_grid(Rational(1, 20));
    ASSERT_EQ(grid.size(), 21u);
    EXPECT_EQ(grid.front(), 0);
    EXPECT_EQ(grid[1], Rational(1, 20));
    EXPECT_EQ(grid.back(), 1);
    EXPECT_EQ(switch_grid(Rational(1, 2)).size(), 3u);
    EXPECT_EQ(switch_grid(Rational(1)).size(), 2u);
    EXPECT_THROW(switch_grid(Rational(3, 10)), std::invalid_argument);
    EXPECT_THROW(switch_grid(Rational(0)), std::invalid_argument);
    EXPECT_THROW(switch_grid(Rational(2)), std::invalid_argument);
    EXPECT_THROW(switch_grid(Rational(-1, 4)), std::invalid_argument);
}

TEST(Sweep, ClassicGameTracksLineWithinCltBand) {
    const auto result = sweep(GameVariant::LeaveTwoClosed, 3, Rational(1, 20), 20000, 1);
    ASSERT_EQ(result.rows.size(), 21u);
    int inside = 0;
    for (std::size_t k = 0; k < result.rows.size(); ++k) {
        const auto& row = result.rows[k];
        if (k > 0) EXPECT_GT(row.p, result.rows[k - 1].p);
        EXPECT_DOUBLE_EQ(row.analytic, 1.0 / 3 + row.p / 3);
        EXPECT_EQ(row.analytic_exact, win_marginal(GameVariant::LeaveTwoClosed, GameParams(3, row.p_exact)).value());
        inside += std::abs(row.result.empirical - row.analytic) <= row.clt_halfwidth;
    }
    EXPECT_GE(inside, 20);
}

TEST(Sweep, CoarseGridHasThreeRows) {
    const auto result = sweep(GameVariant::LeaveTwoClosed, 3, Rational(1, 2), 1000, 1);
    ASSERT_EQ(result.rows.size(), 3u);
    EXPECT_EQ(result.rows[0].p, 0.0);
    EXPECT_EQ(result.rows[1].p, 0.5);
    EXPECT_EQ(result.rows[2].p, 1.0);
}

TEST(Sweep, ChebyshevTrialCountKeepsEveryRowWithinEpsilon) {
    const auto trials = sample_size(PlanRequest{0.5, 0.01, 0.01, PlanMethod::Chebyshev}).l0;
    const auto result = sweep(GameVariant::OpenOne, 4, Rational(1, 20), trials, 3);
    ASSERT_EQ(result.rows.size(), 21u);
    for (const auto& row : result.rows) EXPECT_LT(std::abs(row.result.empirical - row.analytic), 0.01) << row.p;
}

TEST(Sweep, GridPointsUseDistinctSubstreams) {
    // Same p at two grid points must not reuse the random stream.
    SweepConfig c;
    c.variant = GameVariant::LeaveTwoClosed;
    c.doors = 3;
    c.grid_step = Rational(1, 2);
    c.trials = 5000;
    c.master_seed = 8;
    const auto a = sweep(c);
    SimulationConfig sim;
    sim.trials = 5000;
    sim.master_seed = 8;
    sim.p = 0.5;
    sim.stream = 1;
    EXPECT_EQ(run_batch(sim).wins, a.rows[1].result.wins);
    sim.stream = 0;
    EXPECT_NE(run_batch(sim).wins, a.rows[1].result.wins);
}

TEST(Sweep, ThreadCountNeverChangesResults) {
    SweepConfig c;
    c.variant = GameVariant::OpenOne;
    c.doors = 8;
    c.trials = 30000;
    c.master_seed = 5;
    c.threads = 1;
    const auto a = sweep(c);
    c.threads = 4;
    const auto b = sweep(c);
    for (std::size_t k = 0; k < a.rows.size(); ++k) EXPECT_EQ(a.rows[k].result.wins, b.rows[k].result.wins);
}

// At l0 from Chebyshev, |empirical - P(W)| >= 0.01 should happen for at most
// a delta fraction of seeds; allow one miss per grid point over 20 seeds.
TEST(StatisticalConsistency, ChebyshevPanelOverTwentySeeds) {
    const auto trials = sample_size(PlanRequest{0.5, 0.01, 0.01, PlanMethod::Chebyshev}).l0;
    for (const auto& p : {Rational(0), Rational(1, 2), Rational(1)}) {
        int misses = 0;
        for (std::uint64_t seed = 100; seed < 120; ++seed) {
            SimulationConfig c;
            c.variant = GameVariant::OpenOne;
            c.doors = 5;
            c.p = to_double(p);
            c.trials = trials;
            c.master_seed = seed;
            const double analytic = to_double(win_marginal(c.variant, GameParams(5, p)).value());
            misses += std::abs(run_batch(c).empirical - analytic) >= 0.01;
        }
        EXPECT_LE(misses, 1) << "p=" << to_fraction_string(p);
    }
}

// Trajectory frequencies of both algorithms at n = 3 against the exact
// oracle weights (car fixed at door 0).
TEST(AlgorithmFidelity, ThreeDoorTrajectoriesMatchOracle) {
    const Rational p(1, 2);
    using Key = std::tuple<std::int64_t, std::int64_t, bool, std::int64_t>;  // pick, opened, switched, final
    std::map<Key, Rational> exact;
    for (const auto& t : enumerate_trajectories(GameVariant::OpenOne, GameParams(3, p), CarDistribution::point(3, 0)))
        exact[{t.pick, t.host_opens.front(), t.switched, t.final_door}] += t.weight;
    std::map<Key, Rational> leave_two;
    for (const auto& t :
         enumerate_trajectories(GameVariant::LeaveTwoClosed, GameParams(3, p), CarDistribution::point(3, 0)))
        leave_two[{t.pick, t.host_opens.front(), t.switched, t.final_door}] += t.weight;
    ASSERT_EQ(exact, leave_two);

    const int samples = 300000;
    for (auto v : {GameVariant::LeaveTwoClosed, GameVariant::OpenOne}) {
        Xoshiro256StarStar rng(2718);
        std::map<Key, int> counts;
        for (int i = 0; i < samples; ++i) {
            const auto g = play_game(v, 3, 0.5, rng);
            // LeaveTwoClosed reports the door left closed; the opened one is the third door.
            const std::int64_t opened = v == GameVariant::OpenOne ? g.host_door : 3 - g.pick - g.host_door;
            ++counts[{g.pick, opened, g.switched, g.final_door}];
        }
        double chi2 = 0;
        for (const auto& [key, weight] : exact) {
            const double expected = to_double(weight) * samples;
            const double observed = counts.count(key) ? counts[key] : 0;
            chi2 += (observed - expected) * (observed - expected) / expected;
        }
        int total = 0;
        for (const auto& [key, c] : counts) {
            ASSERT_TRUE(exact.count(key)) << "trajectory outside oracle support";
            total += c;
        }
        ASSERT_EQ(total, samples);
        const boost::math::chi_squared_distribution<double> dist(static_cast<double>(exact.size() - 1));
        EXPECT_LT(chi2, boost::math::quantile(dist, 0.999)) << variant_name(v);
    }
}

}  // namespace
}  // namespace montyhall
