// Experiment harness front end. Subcommands share one option set; values
// resolve as defaults < config file < explicit flags.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sfgft/errors.hpp"
#include "sfgft/experiment.hpp"
#include "sfgft/graph.hpp"
#include "sfgft/io.hpp"
#include "sfgft/rng.hpp"
#include "sfgft/sensor.hpp"

namespace {

struct Overrides {
    std::string config;
    int n_sensors = 0;
    int knn_k = 0;
    double sigma_d = 0.0;
    std::string omegas;
    std::string sigmas;
    std::string sizes;
    int trials = 0;
    std::uint64_t seed = 0;
    std::string scheme;
    std::string methods;
    std::string out;
};

void add_common_flags(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--config", o.config, "config file: 'key = value' lines, '#' comments");
    cmd->add_option("--n-sensors", o.n_sensors, "sensor count");
    cmd->add_option("--knn-k", o.knn_k, "nearest-neighbor count");
    cmd->add_option("--sigma-d", o.sigma_d, "Gaussian edge-kernel width");
    cmd->add_option("--omega", o.omegas, "signal frequencies, comma-separated");
    cmd->add_option("--sigma", o.sigmas, "noise standard deviations, comma-separated");
    cmd->add_option("--sizes", o.sizes, "sample-set sizes, comma-separated");
    cmd->add_option("--trials", o.trials, "trials per condition");
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--scheme", o.scheme, "sampling schemes: random, uniform, or both comma-separated");
    cmd->add_option("--methods", o.methods, "reconstruction methods, subset of SF_Q,BL_I,BL_D");
    cmd->add_option("--out", o.out, "output path (stem for table1/sweep, file for gen-*)");
}

sfgft::ExperimentConfig resolve_config(const CLI::App* cmd, const Overrides& o, int default_trials) {
    sfgft::ExperimentConfig cfg;
    cfg.n_trials = default_trials;
    if (cmd->count("--config")) sfgft::load_config_file(cfg, o.config);
    if (cmd->count("--n-sensors")) cfg.n_sensors = o.n_sensors;
    if (cmd->count("--knn-k")) cfg.knn_k = o.knn_k;
    if (cmd->count("--sigma-d")) cfg.sigma_d = o.sigma_d;
    if (cmd->count("--omega")) sfgft::apply_config_entry(cfg, "omega_list", o.omegas);
    if (cmd->count("--sigma")) sfgft::apply_config_entry(cfg, "sigma_list", o.sigmas);
    if (cmd->count("--sizes")) sfgft::apply_config_entry(cfg, "sample_sizes", o.sizes);
    if (cmd->count("--trials")) cfg.n_trials = o.trials;
    if (cmd->count("--seed")) cfg.master_seed = o.seed;
    if (cmd->count("--scheme")) sfgft::apply_config_entry(cfg, "sampling_scheme", o.scheme);
    if (cmd->count("--methods")) sfgft::apply_config_entry(cfg, "methods", o.methods);
    if (cmd->count("--out")) cfg.output_path = o.out;
    return cfg;
}

// The field seed matches the one table1/sweep derive, so gen-field and
// gen-graph emit exactly the field those runs operate on.
std::uint64_t field_seed_of(const sfgft::ExperimentConfig& cfg) {
    return sfgft::derive_seed(cfg.master_seed, {sfgft::kFieldStream});
}

int cmd_gen_field(const sfgft::ExperimentConfig& cfg) {
    sfgft::validate_config(cfg);
    const sfgft::SensorField field = sfgft::place_sensors(cfg.n_sensors, field_seed_of(cfg));
    const std::string path = cfg.output_path.empty() ? "field.csv" : cfg.output_path;
    sfgft::write_positions_csv(field, path);
    std::cout << "wrote " << path << " (" << field.positions.size() << " sensors, seed " << field.seed << ")\n";
    return 0;
}

int cmd_gen_graph(const sfgft::ExperimentConfig& cfg) {
    sfgft::validate_config(cfg);
    const sfgft::SensorField field = sfgft::place_sensors(cfg.n_sensors, field_seed_of(cfg));
    const sfgft::Graph g = sfgft::build_knn_graph(field.positions, cfg.knn_k, cfg.sigma_d);
    const std::string path = cfg.output_path.empty() ? "graph.csv" : cfg.output_path;
    sfgft::write_edges_csv(g, path);
    int edges = 0;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (g.weight(i, j) > 0.0) ++edges;
    std::cout << "wrote " << path << " (" << g.n() << " vertices, " << edges << " edges)\n";
    return 0;
}

void print_summary(const std::vector<sfgft::SummaryRow>& summary) {
    std::string last_condition;
    for (const auto& s : summary) {
        std::string condition = "scheme=" + sfgft::to_string(s.scheme) + " omega=" + sfgft::format_double(s.omega) +
                                " sigma=" + sfgft::format_double(s.sigma) + " size=" + std::to_string(s.size_requested);
        if (condition != last_condition) {
            std::cout << condition << '\n';
            last_condition = std::move(condition);
        }
        std::cout << "  " << sfgft::to_string(s.method) << ": ";
        if (s.n_trials > s.n_failed)
            std::cout << "mean " << sfgft::format_double(s.mean_snr_db) << " dB, std "
                      << sfgft::format_double(s.std_snr_db);
        else
            std::cout << "no successful trials";
        std::cout << " (" << (s.n_trials - s.n_failed) << " ok, " << s.n_failed << " failed)\n";
    }
}

int run_and_write(const sfgft::ExperimentResult& result, const std::string& stem) {
    const sfgft::OutputFiles files = sfgft::write_results(result, stem);
    print_summary(sfgft::summarize(result));
    std::cout << "wrote " << files.raw << '\n' << "wrote " << files.summary << '\n';
    for (const auto& p : files.panels) std::cout << "wrote " << p << '\n';
    return 0;
}

int cmd_verify(const sfgft::ExperimentConfig& cfg) {
    const sfgft::VerifyReport rep = sfgft::run_verify(cfg);
    std::cout << rep.instances << " instances, checks:";
    for (const auto& c : rep.checks_run) std::cout << ' ' << c;
    std::cout << '\n';
    if (rep.all_pass()) {
        std::cout << "all checks passed\n";
        return 0;
    }
    for (const auto& f : rep.failures)
        std::cout << "FAIL " << f.check << " seed=" << f.seed << ": " << f.detail << '\n';
    std::cout << rep.failures.size() << " failure(s)\n";
    return 1;
}

const char* kResultColumns =
    "Output columns:\n"
    "  <out>_raw.csv: method,scheme,omega,sigma,size_requested,size_actual,trial,\n"
    "    seed,field_seed,sample_seed,noise_seed,status,snr_db,note\n"
    "  <out>_summary.csv: method,scheme,omega,sigma,size_requested,n_trials,\n"
    "    n_failed,mean_snr_db,std_snr_db\n"
    "  <out>_panel_<scheme>_sigma<s>_omega<w>.csv: sample_size,method,mean_snr,std";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sensor-network interpolation experiments with irregularity-aware graph Fourier transforms"};
    app.require_subcommand(1);

    Overrides field_o, graph_o, table1_o, sweep_o, verify_o;
    CLI::App* gen_field = app.add_subcommand("gen-field", "write sensor positions as CSV (columns id,x,y)");
    add_common_flags(gen_field, field_o);
    CLI::App* gen_graph = app.add_subcommand("gen-graph", "write the KNN graph edge list as CSV (columns i,j,w)");
    add_common_flags(gen_graph, graph_o);
    CLI::App* table1 = app.add_subcommand("table1", "noiseless reconstruction comparison, random and uniform sampling");
    add_common_flags(table1, table1_o);
    table1->footer(kResultColumns);
    CLI::App* sweep = app.add_subcommand("sweep", "factorial noise/frequency/size sweep with per-panel plot data");
    add_common_flags(sweep, sweep_o);
    sweep->footer(kResultColumns);
    CLI::App* verify = app.add_subcommand("verify", "randomized invariant checks over small instances");
    add_common_flags(verify, verify_o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen_field->parsed()) return cmd_gen_field(resolve_config(gen_field, field_o, 100));
        if (gen_graph->parsed()) return cmd_gen_graph(resolve_config(gen_graph, graph_o, 100));
        if (table1->parsed()) {
            const auto cfg = resolve_config(table1, table1_o, 100);
            return run_and_write(sfgft::run_table1(cfg), cfg.output_path.empty() ? "table1" : cfg.output_path);
        }
        if (sweep->parsed()) {
            const auto cfg = resolve_config(sweep, sweep_o, 100);
            return run_and_write(sfgft::run_sweep(cfg), cfg.output_path.empty() ? "sweep" : cfg.output_path);
        }
        if (verify->parsed()) return cmd_verify(resolve_config(verify, verify_o, 50));
    } catch (const sfgft::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const sfgft::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
