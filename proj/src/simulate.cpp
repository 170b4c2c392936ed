#include "montyhall/simulate.hpp"

#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace montyhall {

namespace {

template <GameVariant V>
std::uint64_t count_wins_fixed(std::int64_t doors, double p, std::uint64_t trials, std::uint64_t seed) {
    Xoshiro256StarStar rng(seed);
    std::uint64_t wins = 0;
    for (std::uint64_t i = 0; i < trials; ++i) wins += play_game(V, doors, p, rng).won() ? 1 : 0;
    return wins;
}

unsigned worker_count(unsigned requested, std::size_t chunks) {
    unsigned threads = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    if (threads > chunks) threads = static_cast<unsigned>(chunks);
    return std::max(1u, threads);
}

}  // namespace

void SimulationConfig::validate() const {
    if (doors < 3) throw std::domain_error("doors must be >= 3, got " + std::to_string(doors));
    if (!(p >= 0 && p <= 1)) throw std::domain_error("switch probability must lie in [0, 1]");
    if (trials < 1) throw std::domain_error("trials must be >= 1");
    if (chunk_size < 1) throw std::domain_error("chunk size must be >= 1");
}

SimulationResult SimulationResult::from_counts(std::uint64_t trials, std::uint64_t wins) {
    if (trials == 0 || wins > trials) throw std::domain_error("inconsistent trial counts");
    SimulationResult r;
    r.trials = trials;
    r.wins = wins;
    r.empirical = static_cast<double>(wins) / static_cast<double>(trials);
    r.std_error = std::sqrt(r.empirical * (1 - r.empirical) / static_cast<double>(trials));
    return r;
}

std::uint64_t count_wins(GameVariant variant, std::int64_t doors, double p, std::uint64_t trials,
                         std::uint64_t seed) {
    switch (variant) {
        case GameVariant::LeaveTwoClosed:
            return count_wins_fixed<GameVariant::LeaveTwoClosed>(doors, p, trials, seed);
        case GameVariant::OpenOne:
            return count_wins_fixed<GameVariant::OpenOne>(doors, p, trials, seed);
    }
    throw std::logic_error("unknown variant");
}

SimulationResult run_batch(const SimulationConfig& config) {
    config.validate();
    const std::uint64_t chunks = (config.trials + config.chunk_size - 1) / config.chunk_size;
    std::vector<std::uint64_t> wins(chunks, 0);

    auto run_chunk = [&](std::uint64_t j) {
        const std::uint64_t begin = j * config.chunk_size;
        const std::uint64_t size = std::min(config.chunk_size, config.trials - begin);
        wins[j] = count_wins(config.variant, config.doors, config.p, size,
                             derive_substream_seed(config.master_seed, config.stream, j));
    };

    const unsigned threads = worker_count(config.threads, chunks);
    if (threads == 1) {
        for (std::uint64_t j = 0; j < chunks; ++j) run_chunk(j);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::uint64_t j = next.fetch_add(1); j < chunks; j = next.fetch_add(1)) run_chunk(j);
            });
        }
    }

    const std::uint64_t total = std::accumulate(wins.begin(), wins.end(), std::uint64_t{0});
    return SimulationResult::from_counts(config.trials, total);
}

std::vector<Rational> switch_grid(const Rational& step) {
    if (step <= 0 || step > 1) throw std::invalid_argument("grid step must lie in (0, 1]");
    const Rational points = 1 / step;
    if (denominator(points) != 1)
        throw std::invalid_argument("grid step " + to_fraction_string(step) + " does not divide 1 evenly");
    const auto count = numerator(points).convert_to<std::int64_t>();
    std::vector<Rational> grid;
    grid.reserve(static_cast<std::size_t>(count + 1));
    for (std::int64_t k = 0; k <= count; ++k) grid.push_back(step * k);
    return grid;
}

SweepResult sweep(const SweepConfig& config) {
    const auto grid = switch_grid(config.grid_step);
    SweepResult out;
    out.rows.reserve(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        SweepRow row;
        row.p_exact = grid[k];
        row.p = to_double(row.p_exact);

        SimulationConfig sim;
        sim.variant = config.variant;
        sim.doors = config.doors;
        sim.p = row.p;
        sim.trials = config.trials;
        sim.master_seed = config.master_seed;
        sim.chunk_size = config.chunk_size;
        sim.stream = k;
        sim.threads = config.threads;
        row.result = run_batch(sim);

        row.analytic_exact = win_marginal(config.variant, GameParams(config.doors, row.p_exact)).value();
        row.analytic = to_double(row.analytic_exact);
        row.clt_halfwidth = band_halfwidth(row.analytic, config.trials, config.delta, PlanMethod::CLT);
        row.chebyshev_halfwidth = band_halfwidth(row.analytic, config.trials, config.delta, PlanMethod::Chebyshev);
        out.rows.push_back(std::move(row));
    }
    return out;
}

SweepResult sweep(GameVariant variant, std::int64_t doors, const Rational& grid_step, std::uint64_t trials,
                  std::uint64_t master_seed) {
    SweepConfig config;
    config.variant = variant;
    config.doors = doors;
    config.grid_step = grid_step;
    config.trials = trials;
    config.master_seed = master_seed;
    return sweep(config);
}

}  // namespace montyhall
