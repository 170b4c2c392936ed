#include "montyhall/analytic.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace montyhall {

namespace {

void require_doors(std::int64_t doors) {
    if (doors < 3) throw std::domain_error("doors must be >= 3, got " + std::to_string(doors));
}

// P(W | E^e ∩ C^c) for the chain rule.
Rational win_given(GameVariant variant, std::int64_t doors, bool initially_correct, bool changed) {
    if (initially_correct) return changed ? Rational(0) : Rational(1);
    if (!changed) return Rational(0);
    switch (variant) {
        case GameVariant::LeaveTwoClosed:
            return Rational(1);
        case GameVariant::OpenOne:
            // The car is one of the n-2 doors left after removing the pick and the opened door.
            assert(doors - 2 >= 1);
            return Rational(1, doors - 2);
    }
    throw std::logic_error("unknown variant");
}

}  // namespace

std::string_view variant_name(GameVariant variant) {
    switch (variant) {
        case GameVariant::LeaveTwoClosed: return "leave-two";
        case GameVariant::OpenOne: return "open-one";
    }
    return "unknown";
}

GameVariant parse_variant(std::string_view name) {
    if (name == "leave-two") return GameVariant::LeaveTwoClosed;
    if (name == "open-one") return GameVariant::OpenOne;
    throw std::invalid_argument("unknown variant '" + std::string(name) + "' (expected leave-two or open-one)");
}

GameParams::GameParams(std::int64_t doors, Rational switch_prob)
    : doors_(doors), switch_prob_(std::move(switch_prob)) {
    require_doors(doors_);
    if (switch_prob_ < 0 || switch_prob_ > 1)
        throw std::domain_error("switch probability must lie in [0, 1], got " +
                                to_fraction_string(switch_prob_));
}

Probability::Probability(Rational value) : value_(std::move(value)) {
    if (value_ < 0 || value_ > 1)
        throw std::domain_error("probability out of [0, 1]: " + to_fraction_string(value_));
}

Rational PartitionProbabilities::sum() const {
    Rational total;
    for (const auto& cell : cells_) total += cell.value();
    return total;
}

Rational PartitionProbabilities::probability_of_win() const {
    Rational total;
    for (bool e : {false, true})
        for (bool c : {false, true}) total += at(e, c, true).value();
    return total;
}

Rational PartitionProbabilities::probability_of_change() const {
    Rational total;
    for (bool e : {false, true})
        for (bool w : {false, true}) total += at(e, true, w).value();
    return total;
}

Rational PartitionProbabilities::probability_initially_correct() const {
    Rational total;
    for (bool c : {false, true})
        for (bool w : {false, true}) total += at(true, c, w).value();
    return total;
}

Probability win_given_switch(GameVariant variant, std::int64_t doors) {
    require_doors(doors);
    switch (variant) {
        case GameVariant::LeaveTwoClosed:
            return Probability(Rational(doors - 1, doors));
        case GameVariant::OpenOne:
            return Probability(Rational(doors - 1, doors * (doors - 2)));
    }
    throw std::logic_error("unknown variant");
}

Probability win_given_stay(GameVariant variant, std::int64_t doors) {
    require_doors(doors);
    (void)variant;
    return Probability(Rational(1, doors));
}

LinearCoefficients linear_coefficients(GameVariant variant, std::int64_t doors) {
    require_doors(doors);
    switch (variant) {
        case GameVariant::LeaveTwoClosed:
            return {Rational(1, doors), Rational(doors - 2, doors)};
        case GameVariant::OpenOne:
            return {Rational(1, doors), Rational(1, doors * (doors - 2))};
    }
    throw std::logic_error("unknown variant");
}

Probability win_marginal(GameVariant variant, const GameParams& params) {
    const auto [intercept, slope] = linear_coefficients(variant, params.doors());
    return Probability(intercept + slope * params.switch_prob());
}

PartitionProbabilities partition_probabilities(GameVariant variant, const GameParams& params) {
    const Rational p_correct(1, params.doors());
    const Rational& p_change = params.switch_prob();

    PartitionProbabilities cells;
    for (bool e : {false, true}) {
        const Rational pe = e ? p_correct : Rational(1 - p_correct);
        for (bool c : {false, true}) {
            const Rational pc = c ? p_change : Rational(1 - p_change);
            const Rational pw = win_given(variant, params.doors(), e, c);
            cells.set(e, c, true, Probability(pw * pc * pe));
            cells.set(e, c, false, Probability((1 - pw) * pc * pe));
        }
    }
    return cells;
}

WinningProfile winning_profile(GameVariant variant, const GameParams& params) {
    auto coeffs = linear_coefficients(variant, params.doors());
    return WinningProfile{
        win_given_switch(variant, params.doors()),
        win_given_stay(variant, params.doors()),
        win_marginal(variant, params),
        std::move(coeffs.intercept),
        std::move(coeffs.slope),
    };
}

}  // namespace montyhall
