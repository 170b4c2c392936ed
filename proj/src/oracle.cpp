#include "montyhall/oracle.hpp"

#include <stdexcept>
#include <string>

namespace montyhall {

namespace {

void require_matching(const GameParams& params, const CarDistribution& cars) {
    if (cars.doors() != params.doors())
        throw std::invalid_argument("car distribution has " + std::to_string(cars.doors()) +
                                    " entries but the game has " + std::to_string(params.doors()) +
                                    " doors");
}

// Doors the host may act on, each equally likely. LeaveTwoClosed: the single
// other door left closed. OpenOne: the single goat door opened.
std::vector<std::int64_t> host_actions(GameVariant variant, std::int64_t doors, std::int64_t car,
                                       std::int64_t pick) {
    std::vector<std::int64_t> actions;
    if (pick == car) {
        for (std::int64_t d = 0; d < doors; ++d)
            if (d != pick) actions.push_back(d);
        return actions;
    }
    if (variant == GameVariant::LeaveTwoClosed) {
        actions.push_back(car);
        return actions;
    }
    for (std::int64_t d = 0; d < doors; ++d)
        if (d != pick && d != car) actions.push_back(d);
    return actions;
}

}  // namespace

CarDistribution::CarDistribution(std::vector<Rational> alpha) : alpha_(std::move(alpha)) {
    if (alpha_.empty()) throw std::invalid_argument("car distribution must not be empty");
    Rational total;
    for (const auto& a : alpha_) {
        if (a < 0) throw std::invalid_argument("car distribution has a negative entry");
        total += a;
    }
    if (total != 1)
        throw std::invalid_argument("car distribution sums to " + to_fraction_string(total) +
                                    ", expected 1");
}

CarDistribution CarDistribution::uniform(std::int64_t doors) {
    if (doors < 1) throw std::invalid_argument("uniform distribution needs at least one door");
    return CarDistribution(std::vector<Rational>(static_cast<std::size_t>(doors), Rational(1, doors)));
}

CarDistribution CarDistribution::point(std::int64_t doors, std::int64_t door) {
    if (door < 0 || door >= doors) throw std::invalid_argument("door index out of range");
    std::vector<Rational> alpha(static_cast<std::size_t>(doors));
    alpha[static_cast<std::size_t>(door)] = 1;
    return CarDistribution(std::move(alpha));
}

void for_each_trajectory(GameVariant variant, const GameParams& params, const CarDistribution& cars,
                         const TrajectoryVisitor& visit) {
    require_matching(params, cars);
    const std::int64_t n = params.doors();
    const Rational& p = params.switch_prob();
    const Rational stay_prob = 1 - p;
    const Rational pick_prob(1, n);

    Trajectory t;
    t.host_opens.reserve(static_cast<std::size_t>(n));

    for (std::int64_t car = 0; car < n; ++car) {
        const Rational& alpha = cars[static_cast<std::size_t>(car)];
        if (alpha == 0) continue;
        t.car = car;
        for (std::int64_t pick = 0; pick < n; ++pick) {
            t.pick = pick;
            const Rational before_host = alpha * pick_prob;
            const auto actions = host_actions(variant, n, car, pick);
            const Rational action_prob(1, static_cast<long>(actions.size()));

            for (std::int64_t action : actions) {
                const Rational before_switch = before_host * action_prob;

                t.host_opens.clear();
                if (variant == GameVariant::LeaveTwoClosed) {
                    for (std::int64_t d = 0; d < n; ++d)
                        if (d != pick && d != action) t.host_opens.push_back(d);
                } else {
                    t.host_opens.push_back(action);
                }

                if (stay_prob != 0) {
                    t.switched = false;
                    t.final_door = pick;
                    t.weight = before_switch * stay_prob;
                    visit(t);
                }
                if (p == 0) continue;

                t.switched = true;
                if (variant == GameVariant::LeaveTwoClosed) {
                    t.final_door = action;
                    t.weight = before_switch * p;
                    visit(t);
                    continue;
                }
                const Rational each_final = before_switch * p / (n - 2);
                for (std::int64_t final_door = 0; final_door < n; ++final_door) {
                    if (final_door == pick || final_door == action) continue;
                    t.final_door = final_door;
                    t.weight = each_final;
                    visit(t);
                }
            }
        }
    }
}

std::vector<Trajectory> enumerate_trajectories(GameVariant variant, const GameParams& params,
                                               const CarDistribution& cars) {
    std::vector<Trajectory> out;
    for_each_trajectory(variant, params, cars, [&](const Trajectory& t) { out.push_back(t); });
    return out;
}

Probability exact_win_probability(GameVariant variant, const GameParams& params,
                                  const CarDistribution& cars) {
    Rational total;
    for_each_trajectory(variant, params, cars, [&](const Trajectory& t) {
        if (t.won()) total += t.weight;
    });
    return Probability(std::move(total));
}

PartitionProbabilities exact_partition(GameVariant variant, const GameParams& params,
                                       const CarDistribution& cars) {
    std::array<Rational, 8> acc{};
    for_each_trajectory(variant, params, cars, [&](const Trajectory& t) {
        const std::size_t i = (t.initially_correct() ? 4u : 0u) | (t.switched ? 2u : 0u) | (t.won() ? 1u : 0u);
        acc[i] += t.weight;
    });
    PartitionProbabilities cells;
    for (bool e : {false, true})
        for (bool c : {false, true})
            for (bool w : {false, true})
                cells.set(e, c, w, Probability(acc[(e ? 4u : 0u) | (c ? 2u : 0u) | (w ? 1u : 0u)]));
    return cells;
}

Probability exact_initial_correct(const GameParams& params, const CarDistribution& cars) {
    require_matching(params, cars);
    const std::int64_t n = params.doors();
    const Rational pick_prob(1, n);
    Rational total;
    for (std::int64_t car = 0; car < n; ++car) {
        for (std::int64_t pick = 0; pick < n; ++pick) {
            if (pick == car) total += cars[static_cast<std::size_t>(car)] * pick_prob;
        }
    }
    return Probability(std::move(total));
}

}  // namespace montyhall
