#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trackblend/config.hpp"
#include "trackblend/errors.hpp"
#include "trackblend/simulator.hpp"

namespace {

using namespace trackblend;

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitRuntimeError = 3;

struct CommonOpts {
    std::string config_path;
    std::string track_override;
    std::string out_path;
    long long seed_override = -1;
};

SimConfig load_scenario(const CommonOpts& opts, RunConfig* out_rc = nullptr) {
    RunConfig rc = load_run_config(opts.config_path);
    if (!opts.track_override.empty()) rc.track_file = opts.track_override;
    if (opts.seed_override >= 0) rc.seed = static_cast<std::uint64_t>(opts.seed_override);
    Path track = resolve_track(rc.track_file);
    if (out_rc != nullptr) *out_rc = rc;
    return make_sim_config(rc, std::move(track));
}

void print_metrics(const SummaryMetrics& m, std::ostream& out) {
    char buf[64];
    auto line = [&](const char* name, double v) {
        std::snprintf(buf, sizeof(buf), "%.9g", v);
        out << name << " = " << buf << "\n";
    };
    line("mean_abs_lateral_error", m.mean_abs_lateral_error);
    line("rms_lateral_error", m.rms_lateral_error);
    line("max_abs_lateral_error", m.max_abs_lateral_error);
    line("mean_heading_error", m.mean_heading_error);
    line("steering_smoothness", m.steering_smoothness);
    line("convergence_time", m.convergence_time);
    line("overshoot", m.overshoot);
    out << "converged = " << (m.converged ? "true" : "false") << "\n";
}

double metric_by_name(const SummaryMetrics& m, const std::string& name) {
    if (name == "mean_abs") return m.mean_abs_lateral_error;
    if (name == "rms") return m.rms_lateral_error;
    if (name == "max_abs") return m.max_abs_lateral_error;
    if (name == "heading") return std::abs(m.mean_heading_error);
    if (name == "smoothness") return m.steering_smoothness;
    if (name == "convergence") return m.convergence_time;
    throw UnknownKey(name);
}

std::string metrics_csv_row(const SummaryMetrics& m) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%d",
                  m.mean_abs_lateral_error, m.rms_lateral_error, m.max_abs_lateral_error,
                  m.mean_heading_error, m.steering_smoothness, m.convergence_time, m.overshoot,
                  m.converged ? 1 : 0);
    return buf;
}

constexpr const char* kMetricsCsvHeader =
    "mean_abs_lateral_error,rms_lateral_error,max_abs_lateral_error,mean_heading_error,"
    "steering_smoothness,convergence_time,overshoot,converged";

int cmd_run(const CommonOpts& opts) {
    const SimConfig cfg = load_scenario(opts);
    const SimTrace trace = run_scenario(cfg);
    if (!opts.out_path.empty()) {
        std::ofstream out(opts.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << opts.out_path << "\n";
            return kExitRuntimeError;
        }
        write_trace_csv(trace, out);
    }
    print_metrics(compute_metrics(trace, true), std::cout);
    return kExitOk;
}

int cmd_compare(const CommonOpts& opts, const std::string& metric) {
    const SimConfig cfg = load_scenario(opts);
    auto rows = compare_controllers(cfg);
    std::stable_sort(rows.begin(), rows.end(),
                     [&](const ComparisonRow& a, const ComparisonRow& b) {
                         return metric_by_name(a.metrics, metric) <
                                metric_by_name(b.metrics, metric);
                     });

    std::printf("%-22s %12s %12s %12s %14s %12s %12s %10s\n", "controller", "mean_abs",
                "rms", "max_abs", "mean_heading", "smoothness", "conv_time", "overshoot");
    for (const auto& row : rows) {
        const auto& m = row.metrics;
        std::printf("%-22s %12.4g %12.4g %12.4g %14.4g %12.4g %12.4g %10.4g\n",
                    row.name.c_str(), m.mean_abs_lateral_error, m.rms_lateral_error,
                    m.max_abs_lateral_error, m.mean_heading_error, m.steering_smoothness,
                    m.convergence_time, m.overshoot);
    }

    if (!opts.out_path.empty()) {
        std::ofstream out(opts.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << opts.out_path << "\n";
            return kExitRuntimeError;
        }
        out << "controller," << kMetricsCsvHeader << "\n";
        for (const auto& row : rows) {
            out << row.name << "," << metrics_csv_row(row.metrics) << "\n";
        }
    }
    return kExitOk;
}

int cmd_sweep(const CommonOpts& opts, const std::string& key, const std::string& values_arg) {
    RunConfig rc = load_run_config(opts.config_path);
    if (!opts.track_override.empty()) rc.track_file = opts.track_override;
    if (opts.seed_override >= 0) rc.seed = static_cast<std::uint64_t>(opts.seed_override);

    std::vector<double> values;
    std::stringstream ss(values_arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            values.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ParseError(0, "invalid sweep value '" + item + "'");
        }
    }
    if (values.empty()) throw ParseError(0, "no sweep values given");

    std::ostringstream csv;
    csv << key << "," << kMetricsCsvHeader << "\n";
    for (const double value : values) {
        RunConfig point = rc;
        set_config_value(point, key, value);  // throws UnknownKey for non-numeric keys
        const SimConfig cfg = make_sim_config(point, resolve_track(point.track_file));
        const SummaryMetrics m = compute_metrics(run_scenario(cfg), true);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.9g", value);
        csv << buf << "," << metrics_csv_row(m) << "\n";
    }

    std::cout << csv.str();
    if (!opts.out_path.empty()) {
        std::ofstream out(opts.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << opts.out_path << "\n";
            return kExitRuntimeError;
        }
        out << csv.str();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trackblend: blended-control-point path tracking benchmarks"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string metric = "mean_abs";
    std::string sweep_key;
    std::string sweep_values;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opts.config_path, "run configuration file")->required();
        sub->add_option("--track", opts.track_override,
                        "track file override (path, 'benchmark' or 'straight')");
        sub->add_option("--out", opts.out_path, "output CSV path");
        sub->add_option("--seed", opts.seed_override, "seed override");
    };

    CLI::App* run = app.add_subcommand("run", "run one scenario and print metrics");
    add_common(run);

    CLI::App* compare =
        app.add_subcommand("compare", "compare the blended law against the baselines");
    add_common(compare);
    compare->add_option("--metric", metric,
                        "sort column: mean_abs|rms|max_abs|heading|smoothness|convergence");

    CLI::App* sweep = app.add_subcommand("sweep", "run a scenario across parameter values");
    add_common(sweep);
    sweep->add_option("--sweep-key", sweep_key, "numeric config key to vary")->required();
    sweep->add_option("--sweep-values", sweep_values, "comma-separated values")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (run->parsed()) return cmd_run(opts);
        if (compare->parsed()) return cmd_compare(opts, metric);
        if (sweep->parsed()) return cmd_sweep(opts, sweep_key, sweep_values);
    } catch (const ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const UnknownKey& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntimeError;
    }
    return kExitOk;
}
