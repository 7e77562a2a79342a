#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sfgft/rng.hpp"

namespace sfgft {

enum class Method { SfQ, BlI, BlD };
enum class Scheme { Random, Uniform };
enum class FieldPolicy { Shared, PerTrial };

std::string to_string(Method m);
std::string to_string(Scheme s);
Method parse_method(const std::string& text);
Scheme parse_scheme(const std::string& text);

struct ExperimentConfig {
    int n_sensors = 500;
    int knn_k = 8;
    double sigma_d = 0.3;
    // Empty lists fall back to per-command defaults: table1 uses omega 1,
    // sigma 0, size 100, both schemes; sweep uses the four omegas, three
    // sigmas, five sizes spanning 50..150, uniform scheme.
    std::vector<double> omega_list;
    std::vector<double> sigma_list;
    std::vector<int> sample_sizes;
    std::vector<Scheme> schemes;
    std::vector<Method> methods{Method::SfQ, Method::BlI, Method::BlD};
    int n_trials = 100;
    std::uint64_t master_seed = 1;
    std::string output_path;
    // Shared: one sensor field per run; trials vary S (table1, random
    // scheme) or only the noise (sweep). PerTrial regenerates the field
    // every trial.
    FieldPolicy field_policy = FieldPolicy::Shared;
    int threads = 1;
};

// Key names match the config file format; unknown keys are errors.
void apply_config_entry(ExperimentConfig& cfg, const std::string& key, const std::string& value);
void load_config_file(ExperimentConfig& cfg, const std::string& path);
void validate_config(const ExperimentConfig& cfg);

inline constexpr double kSnrCapDb = 300.0;

// Seed-stream tags; child seeds come from derive_seed(parent, {tag, ...}).
inline constexpr std::uint64_t kFieldStream = 0x11;
inline constexpr std::uint64_t kSampleStream = 0x22;
inline constexpr std::uint64_t kNoiseStream = 0x33;
inline constexpr std::uint64_t kVerifyStream = 0x44;

std::uint64_t trial_seed(std::uint64_t master, Scheme scheme, int omega_idx, int sigma_idx, int size_idx, int trial);

struct ResultRow {
    Method method = Method::SfQ;
    Scheme scheme = Scheme::Random;
    double omega = 0.0;
    double sigma = 0.0;
    int size_requested = 0;
    int size_actual = 0;
    int trial = 0;
    std::uint64_t seed = 0;        // trial seed (pure function of condition indices)
    std::uint64_t field_seed = 0;
    std::uint64_t sample_seed = 0; // 0 for the deterministic uniform scheme
    std::uint64_t noise_seed = 0;  // 0 when sigma is 0
    bool failed = false;
    double snr_db = 0.0;           // capped at kSnrCapDb
    std::string note;
};

struct ExperimentResult {
    std::vector<ResultRow> rows;
};

// Noiseless comparison: fixed omega and sigma, one condition per scheme.
ExperimentResult run_table1(const ExperimentConfig& cfg);
// Full factorial over omega x sigma x size x scheme with noisy samples;
// under the shared field policy only the noise varies between trials.
ExperimentResult run_sweep(const ExperimentConfig& cfg);

// Recomputes one row's SNR from its logged seeds alone.
double replay_row(const ExperimentConfig& cfg, const ResultRow& row);

struct SummaryRow {
    Method method = Method::SfQ;
    Scheme scheme = Scheme::Random;
    double omega = 0.0;
    double sigma = 0.0;
    int size_requested = 0;
    int n_trials = 0;
    int n_failed = 0;
    double mean_snr_db = 0.0;  // over non-failed rows; meaningless when all failed
    double std_snr_db = 0.0;   // sample standard deviation
};

std::vector<SummaryRow> summarize(const ExperimentResult& result);

// Exact file bytes; run-to-run determinism is byte-level by contract.
std::string raw_csv(const ExperimentResult& result);
std::string summary_csv(const std::vector<SummaryRow>& summary);

struct OutputFiles {
    std::string raw;
    std::string summary;
    std::vector<std::string> panels;  // one per (scheme, sigma, omega)
};

OutputFiles write_results(const ExperimentResult& result, const std::string& stem);

struct VerifyFailure {
    std::string check;
    std::uint64_t seed = 0;  // instance seed, sufficient to replay
    std::string detail;
};

struct VerifyReport {
    int instances = 0;
    std::vector<std::string> checks_run;
    std::vector<VerifyFailure> failures;
    bool all_pass() const { return failures.empty(); }
};

// Randomized invariant suite over small graph instances; n_trials controls
// the instance count.
VerifyReport run_verify(const ExperimentConfig& cfg);

}  // namespace sfgft
