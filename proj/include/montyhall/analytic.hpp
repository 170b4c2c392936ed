#pragma once

// Closed-form probabilities for the generalized Monty Hall game.
//
// The contestant picks one of n doors uniformly at random and switches with
// probability p, independently of whether the first pick was right. Events:
//   E  the initial pick is the car door
//   C  the contestant changes door
//   W  the contestant wins the car
// Two host behaviours are covered. LeaveTwoClosed: the host opens n-2 goat
// doors so exactly one other door stays closed. OpenOne: the host opens a
// single goat door and a switching contestant picks uniformly among the n-2
// other closed doors. At n = 3 the two coincide.

#include "montyhall/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace montyhall {

enum class GameVariant { LeaveTwoClosed, OpenOne };

/// "leave-two" / "open-one".
std::string_view variant_name(GameVariant variant);
/// Inverse of variant_name; throws std::invalid_argument.
GameVariant parse_variant(std::string_view name);

/// Door count and switch probability. Construction validates n >= 3 and
/// 0 <= p <= 1 and throws std::domain_error otherwise.
class GameParams {
public:
    GameParams(std::int64_t doors, Rational switch_prob);

    std::int64_t doors() const noexcept { return doors_; }
    const Rational& switch_prob() const noexcept { return switch_prob_; }

private:
    std::int64_t doors_;
    Rational switch_prob_;
};

/// An exact value in [0, 1].
class Probability {
public:
    Probability() = default;
    explicit Probability(Rational value);

    const Rational& value() const noexcept { return value_; }
    double to_double() const { return montyhall::to_double(value_); }

    friend bool operator==(const Probability&, const Probability&) = default;
    friend bool operator<(const Probability& a, const Probability& b) { return a.value_ < b.value_; }

private:
    Rational value_;
};

/// The eight cells P(E^± ∩ C^± ∩ W^±).
class PartitionProbabilities {
public:
    const Probability& at(bool initially_correct, bool changed, bool won) const {
        return cells_[index(initially_correct, changed, won)];
    }
    void set(bool initially_correct, bool changed, bool won, Probability value) {
        cells_[index(initially_correct, changed, won)] = std::move(value);
    }

    Rational sum() const;

    /// Marginals summed over the cells.
    Rational probability_of_win() const;
    Rational probability_of_change() const;
    Rational probability_initially_correct() const;

    friend bool operator==(const PartitionProbabilities&, const PartitionProbabilities&) = default;

private:
    static std::size_t index(bool e, bool c, bool w) noexcept {
        return (e ? 4u : 0u) | (c ? 2u : 0u) | (w ? 1u : 0u);
    }
    std::array<Probability, 8> cells_{};
};

struct LinearCoefficients {
    Rational intercept;
    Rational slope;

    friend bool operator==(const LinearCoefficients&, const LinearCoefficients&) = default;
};

struct WinningProfile {
    Probability p_win_switch;
    Probability p_win_stay;
    Probability p_win_marginal;
    Rational intercept;
    Rational slope;
};

/// P(W | C). LeaveTwoClosed: (n-1)/n. OpenOne: (n-1)/(n(n-2)).
Probability win_given_switch(GameVariant variant, std::int64_t doors);

/// P(W | C^c) = 1/n for both variants.
Probability win_given_stay(GameVariant variant, std::int64_t doors);

/// P(W) = intercept + slope * p.
Probability win_marginal(GameVariant variant, const GameParams& params);

/// Chain-rule cells P(W | E∩C) · P(C | E) · P(E) for all eight combinations.
PartitionProbabilities partition_probabilities(GameVariant variant, const GameParams& params);

/// (1/n, (n-2)/n) for LeaveTwoClosed, (1/n, 1/(n(n-2))) for OpenOne.
LinearCoefficients linear_coefficients(GameVariant variant, std::int64_t doors);

WinningProfile winning_profile(GameVariant variant, const GameParams& params);

}  // namespace montyhall
