#include "montyhall/report.hpp"

#include <iomanip>
#include <stdexcept>

namespace montyhall {

namespace {

std::string dec(const Rational& v) { return to_decimal_string(v); }
std::string dec(double v) { return to_decimal_string(v); }

void write_row(std::ostream& out, const std::string& label, const Rational& value) {
    out << std::left << std::setw(12) << label << " = " << std::setw(14) << to_fraction_string(value) << " "
        << dec(value) << '\n';
}

void write_metadata(std::ostream& out, const RunMetadata& meta) {
    out << "# generator=" << kGeneratorName << '\n'
        << "# seed=" << meta.seed << '\n'
        << "# variant=" << variant_name(meta.variant) << '\n'
        << "# doors=" << meta.doors << '\n'
        << "# trials=" << meta.trials << '\n'
        << "# trials_source=" << meta.trials_source << '\n'
        << "# epsilon=" << dec(meta.epsilon) << '\n'
        << "# delta=" << dec(meta.delta) << '\n'
        << "# grid_step=" << to_fraction_string(meta.grid_step) << '\n'
        << "# chunk_size=" << meta.chunk_size << '\n';
}

const char* cell_label(bool e, bool c, bool w) {
    static const char* labels[8] = {
        "E' C' W'", "E' C' W", "E' C  W'", "E' C  W", "E  C' W'", "E  C' W", "E  C  W'", "E  C  W",
    };
    return labels[(e ? 4 : 0) | (c ? 2 : 0) | (w ? 1 : 0)];
}

const char* cell_key(bool e, bool c, bool w) {
    static const char* keys[8] = {
        "P(Ec&Cc&Wc)", "P(Ec&Cc&W)", "P(Ec&C&Wc)", "P(Ec&C&W)", "P(E&Cc&Wc)", "P(E&Cc&W)", "P(E&C&Wc)", "P(E&C&W)",
    };
    return keys[(e ? 4 : 0) | (c ? 2 : 0) | (w ? 1 : 0)];
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected table or csv)");
}

void write_analytic(std::ostream& out, OutputFormat format, GameVariant variant, const GameParams& params) {
    const auto profile = winning_profile(variant, params);
    const auto cells = partition_probabilities(variant, params);

    if (format == OutputFormat::Csv) {
        out << "quantity,fraction,decimal\n";
        auto row = [&](const std::string& key, const Rational& v) {
            out << key << ',' << to_fraction_string(v) << ',' << dec(v) << '\n';
        };
        row("P(W|C)", profile.p_win_switch.value());
        row("P(W|Cc)", profile.p_win_stay.value());
        row("P(W)", profile.p_win_marginal.value());
        row("intercept", profile.intercept);
        row("slope", profile.slope);
        for (bool e : {true, false})
            for (bool c : {true, false})
                for (bool w : {true, false}) row(cell_key(e, c, w), cells.at(e, c, w).value());
        return;
    }

    out << "variant      " << variant_name(variant) << '\n'
        << "doors        " << params.doors() << '\n'
        << "switch prob  " << to_fraction_string(params.switch_prob()) << " (" << dec(params.switch_prob())
        << ")\n\n";
    write_row(out, "P(W|C)", profile.p_win_switch.value());
    write_row(out, "P(W|C^c)", profile.p_win_stay.value());
    write_row(out, "P(W)", profile.p_win_marginal.value());
    write_row(out, "intercept", profile.intercept);
    write_row(out, "slope", profile.slope);
    out << "\npartition (E = first pick right, C = changed, W = won; ' marks the complement)\n";
    for (bool e : {true, false})
        for (bool c : {true, false})
            for (bool w : {true, false}) write_row(out, std::string("  ") + cell_label(e, c, w), cells.at(e, c, w).value());
}

void write_simulation(std::ostream& out, OutputFormat format, const RunMetadata& meta, double p,
                      const Rational& analytic, const SimulationResult& result) {
    if (format == OutputFormat::Csv) {
        write_metadata(out, meta);
        out << "p,trials,wins,empirical,std_error,analytic\n"
            << dec(p) << ',' << result.trials << ',' << result.wins << ',' << dec(result.empirical_exact()) << ','
            << dec(result.std_error) << ',' << dec(analytic) << '\n';
        return;
    }
    out << "variant      " << variant_name(meta.variant) << '\n'
        << "doors        " << meta.doors << '\n'
        << "switch prob  " << dec(p) << '\n'
        << "seed         " << meta.seed << '\n'
        << "generator    " << kGeneratorName << '\n'
        << "trials       " << result.trials << '\n'
        << "wins         " << result.wins << '\n'
        << "empirical    " << dec(result.empirical_exact()) << '\n'
        << "std error    " << dec(result.std_error) << '\n'
        << "analytic     " << to_fraction_string(analytic) << " (" << dec(analytic) << ")\n"
        << "abs error    " << dec(abs(result.empirical_exact() - analytic)) << '\n';
}

void write_sweep(std::ostream& out, OutputFormat format, const RunMetadata& meta, const SweepResult& sweep) {
    if (format == OutputFormat::Csv) {
        write_metadata(out, meta);
        out << kSweepColumns << '\n';
        for (const auto& row : sweep.rows) {
            out << dec(row.p_exact) << ',' << dec(row.result.empirical_exact()) << ',' << dec(row.analytic_exact)
                << ',' << dec(row.clt_halfwidth) << ',' << dec(row.chebyshev_halfwidth) << '\n';
        }
        return;
    }
    out << variant_name(meta.variant) << ", " << meta.doors << " doors, " << meta.trials << " trials per point, seed "
        << meta.seed << "\n\n";
    out << std::left << std::setw(8) << "p" << std::setw(16) << "empirical" << std::setw(16) << "analytic"
        << std::setw(16) << "clt +/-" << "chebyshev +/-" << '\n';
    for (const auto& row : sweep.rows) {
        out << std::left << std::setw(8) << dec(row.p_exact) << std::setw(16) << dec(row.result.empirical_exact())
            << std::setw(16) << dec(row.analytic_exact) << std::setw(16) << dec(row.clt_halfwidth)
            << dec(row.chebyshev_halfwidth) << '\n';
    }
}

void write_plan(std::ostream& out, OutputFormat format, const PlanRequest& request, const SampleSizePlan& plan,
                const std::string& planned_at) {
    const double variance = request.p_win * (1 - request.p_win);
    if (format == OutputFormat::Csv) {
        out << "method,at,p_win,variance,epsilon,delta,z_x,l0\n"
            << method_name(plan.method) << ',' << planned_at << ',' << dec(request.p_win) << ',' << dec(variance)
            << ',' << dec(request.epsilon) << ',' << dec(request.delta) << ','
            << (plan.z_x ? dec(*plan.z_x) : std::string()) << ',' << plan.l0 << '\n';
        return;
    }
    out << "method    " << method_name(plan.method) << '\n'
        << "at        " << planned_at << '\n'
        << "p_win     " << dec(request.p_win) << '\n'
        << "p(1-p)    " << dec(variance) << '\n'
        << "epsilon   " << dec(request.epsilon) << '\n'
        << "delta     " << dec(request.delta) << '\n';
    if (plan.z_x) out << "z_x       " << dec(*plan.z_x) << "  (x = " << dec(1 - request.delta / 2) << ")\n";
    out << "l0        " << plan.l0 << '\n';
}

void write_verify(std::ostream& out, const VerifyReport& report) {
    for (const auto& diff : report.diffs) out << "FAIL " << diff << '\n';
    if (report.passed()) {
        out << report.analytic_checks << " analytic checks passed, " << report.placement_checks
            << " placement checks passed\n";
        return;
    }
    out << report.analytic_failures << " of " << report.analytic_checks << " analytic checks failed, "
        << report.placement_failures << " of " << report.placement_checks << " placement checks failed\n";
}

}  // namespace montyhall
