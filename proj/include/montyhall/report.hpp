#pragma once

// Text and CSV rendering for the command-line tool. Every decimal goes
// through to_decimal_string (12 significant digits, round-half-even on the
// exact value) so output is byte-stable.

#include "montyhall/analytic.hpp"
#include "montyhall/planner.hpp"
#include "montyhall/simulate.hpp"
#include "montyhall/verify.hpp"

#include <cstdint>
#include <ostream>
#include <string>

namespace montyhall {

enum class OutputFormat { Table, Csv };

OutputFormat parse_format(std::string_view name);

inline constexpr std::string_view kSweepColumns = "p,empirical,analytic,clt_halfwidth,chebyshev_halfwidth";

struct RunMetadata {
    std::uint64_t seed = 0;
    GameVariant variant = GameVariant::LeaveTwoClosed;
    std::int64_t doors = 3;
    std::uint64_t trials = 0;
    std::string trials_source = "fixed";
    double epsilon = 0.01;
    double delta = 0.01;
    Rational grid_step{1, 20};
    std::uint64_t chunk_size = kDefaultChunkSize;
};

void write_analytic(std::ostream& out, OutputFormat format, GameVariant variant, const GameParams& params);

void write_simulation(std::ostream& out, OutputFormat format, const RunMetadata& meta, double p,
                      const Rational& analytic, const SimulationResult& result);

void write_sweep(std::ostream& out, OutputFormat format, const RunMetadata& meta, const SweepResult& sweep);

void write_plan(std::ostream& out, OutputFormat format, const PlanRequest& request, const SampleSizePlan& plan,
                const std::string& planned_at);

void write_verify(std::ostream& out, const VerifyReport& report);

}  // namespace montyhall
