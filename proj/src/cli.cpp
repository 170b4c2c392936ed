#include "montyhall/cli.hpp"

#include "montyhall/report.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace montyhall {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Flags {
    std::string variant = "leave-two";
    std::int64_t doors = 3;
    std::string switch_prob;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::string format;
    std::uint64_t trials = 0;
    std::string plan_trials;
    double epsilon = 0.01;
    double delta = 0.01;
    std::string grid_step = "1/20";
    std::uint64_t chunk_size = kDefaultChunkSize;
    unsigned threads = 0;
    std::string method = "clt";
    std::string at = "worst-case";
    std::int64_t doors_max = 10;
    std::int64_t placements = 50;
};

// Destination chosen by --out; opened before any computation so an unwritable
// path fails fast with the I/O exit code.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (path.empty() || path == "-") return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
        if (!*file_) throw IoError("cannot open '" + path + "' for writing");
        stream_ = file_.get();
        path_ = path;
    }

    std::ostream& stream() { return *stream_; }

    void finish() {
        stream_->flush();
        if (!*stream_) throw IoError("failed writing '" + (path_.empty() ? std::string("stdout") : path_) + "'");
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
    std::string path_;
};

std::uint64_t parse_seed_text(const std::string& text, const char* what) {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end)
        throw UsageError(std::string(what) + " must be an unsigned 64-bit integer, got '" + text + "'");
    return value;
}

std::uint64_t resolve_seed(const Flags& f, const CliEnvironment& env) {
    if (f.seed) return *f.seed;
    if (env.default_seed) return parse_seed_text(*env.default_seed, "MONTY_SEED");
    return 0;
}

GameVariant variant_flag(const Flags& f) {
    try {
        return parse_variant(f.variant);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void check_doors(std::int64_t doors) {
    if (doors < 3) throw UsageError("doors must be ≥ 3");
}

Rational switch_prob_flag(const Flags& f) {
    if (f.switch_prob.empty()) throw UsageError("--switch-prob is required");
    Rational p;
    try {
        p = parse_rational(f.switch_prob);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--switch-prob: ") + e.what());
    }
    if (p < 0 || p > 1) throw UsageError("switch probability must lie in [0, 1]");
    return p;
}

OutputFormat format_flag(const Flags& f, OutputFormat fallback) {
    if (f.format.empty()) return fallback;
    try {
        return parse_format(f.format);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void check_epsilon_delta(const Flags& f) {
    if (!(f.epsilon > 0)) throw UsageError("epsilon must be > 0");
    if (!(f.delta > 0 && f.delta < 1)) throw UsageError("delta must lie in (0, 1)");
}

int cmd_analytic(const Flags& f, std::ostream& out) {
    const auto variant = variant_flag(f);
    check_doors(f.doors);
    const auto p = switch_prob_flag(f);
    const auto format = format_flag(f, OutputFormat::Table);
    Sink sink(f.out_path, out);
    write_analytic(sink.stream(), format, variant, GameParams(f.doors, p));
    sink.finish();
    return kExitOk;
}

int cmd_simulate(const Flags& f, std::ostream& out, const CliEnvironment& env) {
    const auto variant = variant_flag(f);
    check_doors(f.doors);
    const auto p = switch_prob_flag(f);
    if (f.trials < 1) throw UsageError("--trials must be >= 1");
    if (f.chunk_size < 1) throw UsageError("--chunk-size must be >= 1");
    const auto format = format_flag(f, OutputFormat::Table);
    const auto seed = resolve_seed(f, env);
    Sink sink(f.out_path, out);

    SimulationConfig config;
    config.variant = variant;
    config.doors = f.doors;
    config.p = to_double(p);
    config.trials = f.trials;
    config.master_seed = seed;
    config.chunk_size = f.chunk_size;
    config.threads = f.threads;
    const auto result = run_batch(config);

    RunMetadata meta;
    meta.seed = seed;
    meta.variant = variant;
    meta.doors = f.doors;
    meta.trials = f.trials;
    meta.epsilon = f.epsilon;
    meta.delta = f.delta;
    meta.chunk_size = f.chunk_size;
    write_simulation(sink.stream(), format, meta, config.p, win_marginal(variant, GameParams(f.doors, p)).value(),
                     result);
    sink.finish();
    return kExitOk;
}

int cmd_sweep(const Flags& f, std::ostream& out, const CliEnvironment& env) {
    const auto variant = variant_flag(f);
    check_doors(f.doors);
    check_epsilon_delta(f);
    if (f.chunk_size < 1) throw UsageError("--chunk-size must be >= 1");
    const auto format = format_flag(f, OutputFormat::Csv);

    Rational step;
    try {
        step = parse_rational(f.grid_step);
        switch_grid(step);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--grid-step: ") + e.what());
    }

    RunMetadata meta;
    if (!f.plan_trials.empty()) {
        if (f.trials != 0) throw UsageError("--trials and --plan-trials are mutually exclusive");
        PlanMethod method;
        try {
            method = parse_method(f.plan_trials);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        meta.trials = sample_size(PlanRequest{0.5, f.epsilon, f.delta, method}).l0;
        meta.trials_source = std::string(method_name(method)) + " worst-case";
    } else {
        if (f.trials < 1) throw UsageError("one of --trials or --plan-trials is required");
        meta.trials = f.trials;
    }
    meta.seed = resolve_seed(f, env);
    meta.variant = variant;
    meta.doors = f.doors;
    meta.epsilon = f.epsilon;
    meta.delta = f.delta;
    meta.grid_step = step;
    meta.chunk_size = f.chunk_size;

    Sink sink(f.out_path, out);
    SweepConfig config;
    config.variant = variant;
    config.doors = f.doors;
    config.grid_step = step;
    config.trials = meta.trials;
    config.master_seed = meta.seed;
    config.chunk_size = f.chunk_size;
    config.threads = f.threads;
    config.delta = f.delta;
    write_sweep(sink.stream(), format, meta, sweep(config));
    sink.finish();
    return kExitOk;
}

int cmd_plan(const Flags& f, std::ostream& out) {
    check_epsilon_delta(f);
    PlanRequest request;
    request.epsilon = f.epsilon;
    request.delta = f.delta;
    try {
        request.method = parse_method(f.method);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    std::string planned_at;
    if (f.at == "worst-case") {
        request.p_win = 0.5;
        planned_at = "worst-case";
    } else if (f.at == "analytic") {
        const auto variant = variant_flag(f);
        check_doors(f.doors);
        const auto p = switch_prob_flag(f);
        const auto p_win = win_marginal(variant, GameParams(f.doors, p));
        request.p_win = p_win.to_double();
        planned_at = "analytic " + std::string(variant_name(variant)) + " n=" + std::to_string(f.doors) +
                     " p=" + to_fraction_string(p) + " P(W)=" + to_fraction_string(p_win.value());
    } else {
        throw UsageError("--at must be worst-case or analytic");
    }
    const auto format = format_flag(f, OutputFormat::Table);
    Sink sink(f.out_path, out);
    write_plan(sink.stream(), format, request, sample_size(request), planned_at);
    sink.finish();
    return kExitOk;
}

int cmd_verify(const Flags& f, std::ostream& out, const CliEnvironment& env) {
    if (f.doors_max < 3) throw UsageError("doors-max must be ≥ 3");
    if (f.placements < 0) throw UsageError("--placements must be >= 0");
    VerifyOptions options;
    options.doors_max = f.doors_max;
    options.placements_per_door = f.placements;
    options.seed = resolve_seed(f, env);
    Sink sink(f.out_path, out);
    const auto report = run_verification(options, env.model);
    write_verify(sink.stream(), report);
    sink.finish();
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

void add_game_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--variant", f.variant, "Host strategy: leave-two | open-one")->capture_default_str();
    cmd->add_option("--doors", f.doors, "Number of doors (>= 3)")->capture_default_str();
    cmd->add_option("--switch-prob", f.switch_prob, "Switch probability p, e.g. 1/2 or 0.05");
}

void add_output_flags(CLI::App* cmd, Flags& f, const char* default_format) {
    cmd->add_option("--out", f.out_path, "Write output to PATH instead of stdout");
    cmd->add_option("--format", f.format, std::string("table | csv (default ") + default_format + ")");
}

void add_run_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--seed", f.seed, "Master seed (default: $MONTY_SEED, else 0)");
    cmd->add_option("--chunk-size", f.chunk_size, "Trials per random substream")->capture_default_str();
    cmd->add_option("--threads", f.threads, "Worker threads, 0 = all cores; never changes results")
        ->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliEnvironment& env) {
    CLI::App app{"Exact, enumerated and simulated win probabilities for n-door Monty Hall games", "montyhall"};
    app.require_subcommand(1, 1);

    Flags f;

    auto* analytic = app.add_subcommand("analytic", "Closed-form conditional and marginal win probabilities");
    add_game_flags(analytic, f);
    add_output_flags(analytic, f, "table");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of P(W) at one switch probability");
    add_game_flags(simulate, f);
    simulate->add_option("--trials", f.trials, "Number of simulated contestants")->required();
    add_run_flags(simulate, f);
    add_output_flags(simulate, f, "table");

    auto* sweep_cmd = app.add_subcommand("sweep", "Simulate every p on the grid and emit CSV");
    sweep_cmd->add_option("--variant", f.variant, "Host strategy: leave-two | open-one")->capture_default_str();
    sweep_cmd->add_option("--doors", f.doors, "Number of doors (>= 3)")->capture_default_str();
    sweep_cmd->add_option("--trials", f.trials, "Contestants per grid point");
    sweep_cmd->add_option("--plan-trials", f.plan_trials,
                          "Take trials from the worst-case bound instead: clt | chebyshev");
    sweep_cmd->add_option("--grid-step", f.grid_step, "Spacing of the p grid; must divide 1")->capture_default_str();
    sweep_cmd->add_option("--epsilon", f.epsilon, "Accuracy used by --plan-trials")->capture_default_str();
    sweep_cmd->add_option("--delta", f.delta, "Failure probability for planning and bands")->capture_default_str();
    add_run_flags(sweep_cmd, f);
    add_output_flags(sweep_cmd, f, "csv");

    auto* plan = app.add_subcommand("plan", "Minimum number of trials for accuracy epsilon at confidence 1-delta");
    add_game_flags(plan, f);
    plan->add_option("--epsilon", f.epsilon, "Accuracy")->capture_default_str();
    plan->add_option("--delta", f.delta, "Failure probability")->capture_default_str();
    plan->add_option("--method", f.method, "clt | chebyshev")->capture_default_str();
    plan->add_option("--at", f.at, "worst-case (P(W)=1/2) | analytic (P(W) of the given game)")
        ->capture_default_str();
    add_output_flags(plan, f, "table");

    auto* verify = app.add_subcommand("verify", "Check the closed forms against exhaustive enumeration");
    verify->add_option("--doors-max", f.doors_max, "Largest door count checked")->capture_default_str();
    verify->add_option("--placements", f.placements, "Random car placements checked per door count")
        ->capture_default_str();
    verify->add_option("--seed", f.seed, "Seed for the random placements (default: $MONTY_SEED, else 0)");
    verify->add_option("--out", f.out_path, "Write the report to PATH instead of stdout");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analytic) return cmd_analytic(f, out);
        if (*simulate) return cmd_simulate(f, out, env);
        if (*sweep_cmd) return cmd_sweep(f, out, env);
        if (*plan) return cmd_plan(f, out);
        if (*verify) return cmd_verify(f, out, env);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace montyhall
