#include "sfgft/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include "sfgft/eigensolver.hpp"
#include "sfgft/errors.hpp"
#include "sfgft/gft.hpp"
#include "sfgft/graph.hpp"
#include "sfgft/interp.hpp"
#include "sfgft/io.hpp"
#include "sfgft/sensor.hpp"

namespace sfgft {

std::string to_string(Method m) {
    switch (m) {
        case Method::SfQ: return "SF_Q";
        case Method::BlI: return "BL_I";
        case Method::BlD: return "BL_D";
    }
    return {};
}

std::string to_string(Scheme s) { return s == Scheme::Random ? "random" : "uniform"; }

Method parse_method(const std::string& text) {
    if (text == "SF_Q") return Method::SfQ;
    if (text == "BL_I") return Method::BlI;
    if (text == "BL_D") return Method::BlD;
    throw ConfigError("unknown method: '" + text + "' (expected SF_Q, BL_I, or BL_D)");
}

Scheme parse_scheme(const std::string& text) {
    if (text == "random") return Scheme::Random;
    if (text == "uniform") return Scheme::Uniform;
    throw ConfigError("unknown sampling scheme: '" + text + "' (expected random or uniform)");
}

void apply_config_entry(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "n_sensors") {
        cfg.n_sensors = parse_int(value);
    } else if (key == "knn_k") {
        cfg.knn_k = parse_int(value);
    } else if (key == "sigma_d") {
        cfg.sigma_d = parse_double(value);
    } else if (key == "omega_list") {
        cfg.omega_list.clear();
        for (const auto& item : split_list(value)) cfg.omega_list.push_back(parse_double(item));
    } else if (key == "sigma_list") {
        cfg.sigma_list.clear();
        for (const auto& item : split_list(value)) cfg.sigma_list.push_back(parse_double(item));
    } else if (key == "sample_sizes") {
        cfg.sample_sizes.clear();
        for (const auto& item : split_list(value)) cfg.sample_sizes.push_back(parse_int(item));
    } else if (key == "sampling_scheme") {
        cfg.schemes.clear();
        for (const auto& item : split_list(value)) cfg.schemes.push_back(parse_scheme(item));
    } else if (key == "methods") {
        cfg.methods.clear();
        for (const auto& item : split_list(value)) cfg.methods.push_back(parse_method(item));
    } else if (key == "n_trials") {
        cfg.n_trials = parse_int(value);
    } else if (key == "master_seed") {
        cfg.master_seed = parse_uint64(value);
    } else if (key == "output_path") {
        cfg.output_path = value;
    } else if (key == "field_policy") {
        if (value == "shared")
            cfg.field_policy = FieldPolicy::Shared;
        else if (value == "per-trial")
            cfg.field_policy = FieldPolicy::PerTrial;
        else
            throw ConfigError("field_policy must be 'shared' or 'per-trial', got '" + value + "'");
    } else if (key == "threads") {
        cfg.threads = parse_int(value);
    } else {
        throw ConfigError("unknown config key: '" + key + "'");
    }
}

void load_config_file(ExperimentConfig& cfg, const std::string& path) {
    for (const auto& [key, value] : read_key_values(path)) apply_config_entry(cfg, key, value);
}

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.n_sensors < 2) throw ConfigError("n_sensors must be at least 2");
    if (cfg.knn_k < 1 || cfg.knn_k >= cfg.n_sensors) throw ConfigError("knn_k must satisfy 1 <= k < n_sensors");
    if (!(cfg.sigma_d > 0.0)) throw ConfigError("sigma_d must be positive");
    if (cfg.n_trials < 1) throw ConfigError("n_trials must be positive");
    if (cfg.threads < 1) throw ConfigError("threads must be positive");
    if (cfg.methods.empty()) throw ConfigError("methods must be nonempty");
    for (int s : cfg.sample_sizes)
        if (s < 1 || s >= cfg.n_sensors) throw ConfigError("sample sizes must satisfy 1 <= size < n_sensors");
    for (double w : cfg.omega_list)
        if (!std::isfinite(w) || w < 0.0) throw ConfigError("omega values must be finite and nonnegative");
    for (double s : cfg.sigma_list)
        if (!std::isfinite(s) || s < 0.0) throw ConfigError("sigma values must be finite and nonnegative");
}

std::uint64_t trial_seed(std::uint64_t master, Scheme scheme, int omega_idx, int sigma_idx, int size_idx, int trial) {
    return derive_seed(master, {static_cast<std::uint64_t>(scheme == Scheme::Random ? 0 : 1),
                                static_cast<std::uint64_t>(omega_idx), static_cast<std::uint64_t>(sigma_idx),
                                static_cast<std::uint64_t>(size_idx), static_cast<std::uint64_t>(trial)});
}

namespace {

bool wants(const std::vector<Method>& methods, Method m) {
    return std::find(methods.begin(), methods.end(), m) != methods.end();
}

struct FieldContext {
    SensorField field;
    Graph graph;
    Matrix lap;
    std::vector<double> degrees;
    std::vector<double> unit_weights;
    std::shared_ptr<const EigenDecomposition> bl_i;
    std::shared_ptr<const EigenDecomposition> bl_d;
};

FieldContext make_field_context(const ExperimentConfig& cfg, std::uint64_t field_seed, bool need_i, bool need_d) {
    SensorField field = place_sensors(cfg.n_sensors, field_seed);
    Graph graph = build_knn_graph(field.positions, cfg.knn_k, cfg.sigma_d);
    Matrix lap = laplacian(graph);
    std::vector<double> degrees = degree_table(graph);
    FieldContext ctx{std::move(field), std::move(graph),    std::move(lap),
                     std::move(degrees), std::vector<double>(static_cast<size_t>(cfg.n_sensors), 1.0),
                     nullptr,          nullptr};
    if (need_i) ctx.bl_i = std::make_shared<EigenDecomposition>(sym_eig(ctx.lap));
    if (need_d) {
        Matrix deg(cfg.n_sensors, cfg.n_sensors);
        for (int i = 0; i < cfg.n_sensors; ++i) deg(i, i) = ctx.degrees[i];
        ctx.bl_d = std::make_shared<EigenDecomposition>(generalized_sym_eig(ctx.lap, deg));
    }
    return ctx;
}

VertexPartition make_partition(const FieldContext& ctx, Scheme scheme, int size, std::uint64_t sample_seed) {
    const int n = static_cast<int>(ctx.field.positions.size());
    if (scheme == Scheme::Random) return sample_random(n, size, sample_seed);
    return sample_uniform_grid(ctx.field, size);
}

std::vector<double> reconstruct(Method m, const FieldContext& ctx, const SpectralFoldingGft* gft,
                                const SampledSignal& xs) {
    switch (m) {
        case Method::SfQ: return interpolate_sf(*gft, xs);
        case Method::BlI: return interpolate_bl_ls(*ctx.bl_i, ctx.unit_weights, xs, xs.partition.size());
        case Method::BlD: return interpolate_bl_ls(*ctx.bl_d, ctx.degrees, xs, xs.partition.size());
    }
    throw std::logic_error("unknown method");
}

// Fills the n_methods rows of one (condition, trial) cell. Rows arrive
// stamped with their metadata and seeds; only size_actual, snr, and failure
// state are produced here.
void fill_trial(const ExperimentConfig& cfg, const FieldContext& ctx, const VertexPartition* cached_partition,
                const std::string& partition_note, const SpectralFoldingGft* cached_gft, std::string gft_note,
                std::span<const double> truth, ResultRow* rows) {
    const auto fail_all = [&](const std::string& why) {
        for (size_t mi = 0; mi < cfg.methods.size(); ++mi) {
            rows[mi].failed = true;
            rows[mi].note = why;
        }
    };
    if (!cached_partition && !partition_note.empty()) {
        fail_all(partition_note);
        return;
    }

    std::optional<VertexPartition> local_partition;
    const VertexPartition* partition = cached_partition;
    if (!partition) {
        try {
            local_partition = make_partition(ctx, rows[0].scheme, rows[0].size_requested, rows[0].sample_seed);
            partition = &*local_partition;
        } catch (const std::exception& e) {
            fail_all(e.what());
            return;
        }
    }

    const std::vector<int> complement = partition->complement();
    std::vector<double> observed(truth.begin(), truth.end());
    if (rows[0].sigma > 0.0) observed = add_noise(observed, rows[0].sigma, rows[0].noise_seed);
    const SampledSignal xs = sample_signal(*partition, observed);

    std::optional<SpectralFoldingGft> local_gft;
    const SpectralFoldingGft* gft = cached_gft;
    if (!gft && gft_note.empty() && wants(cfg.methods, Method::SfQ)) {
        try {
            local_gft = build_gft(ctx.graph, *partition);
            gft = &*local_gft;
        } catch (const std::exception& e) {
            gft_note = e.what();
        }
    }

    for (size_t mi = 0; mi < cfg.methods.size(); ++mi) {
        ResultRow& row = rows[mi];
        row.size_actual = partition->size();
        try {
            if (row.method == Method::SfQ && !gft) throw Error(gft_note);
            const auto y = reconstruct(row.method, ctx, gft, xs);
            if (!all_finite(y)) throw NumericalError("non-finite reconstruction");
            const double snr = snr_db(truth, y, complement);
            row.snr_db = std::min(snr, kSnrCapDb);
        } catch (const std::exception& e) {
            row.failed = true;
            row.snr_db = 0.0;
            row.note = e.what();
        }
    }
}

void parallel_tasks(int n_tasks, int threads, const std::function<void(int)>& task) {
    const int workers = std::max(1, std::min(threads, n_tasks));
    if (workers == 1) {
        for (int i = 0; i < n_tasks; ++i) task(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&task, w, workers, n_tasks] {
            for (int i = w; i < n_tasks; i += workers) task(i);
        });
    for (auto& t : pool) t.join();
}

struct SampleContext {
    std::optional<VertexPartition> partition;
    std::string partition_note;
    std::optional<SpectralFoldingGft> gft;
    std::string gft_note;
};

// sample_per_trial: the random scheme re-draws S every trial (table1
// averages over sample sets). Otherwise S is fixed per (scheme, size) and
// only the noise varies between trials (sweep averages over noise draws).
ExperimentResult run_conditions(const ExperimentConfig& cfg, const std::vector<Scheme>& schemes,
                                const std::vector<double>& omegas, const std::vector<double>& sigmas,
                                const std::vector<int>& sizes, bool sample_per_trial) {
    for (int s : sizes)
        if (s < 1 || s >= cfg.n_sensors) throw ConfigError("sample sizes must satisfy 1 <= size < n_sensors");

    const int n_methods = static_cast<int>(cfg.methods.size());
    const bool need_i = wants(cfg.methods, Method::BlI);
    const bool need_d = wants(cfg.methods, Method::BlD);
    const bool need_q = wants(cfg.methods, Method::SfQ);
    const bool shared = cfg.field_policy == FieldPolicy::Shared;
    const std::uint64_t shared_field_seed = derive_seed(cfg.master_seed, {kFieldStream});

    const auto condition_sample_seed = [&](Scheme scheme, int size_idx) -> std::uint64_t {
        if (scheme == Scheme::Uniform) return 0;
        return derive_seed(cfg.master_seed, {kSampleStream, static_cast<std::uint64_t>(scheme == Scheme::Random ? 0 : 1),
                                             static_cast<std::uint64_t>(size_idx)});
    };

    std::optional<FieldContext> shared_ctx;
    std::vector<std::vector<double>> shared_truths;
    std::vector<SampleContext> sample_ctxs(schemes.size() * sizes.size());
    if (shared) {
        shared_ctx = make_field_context(cfg, shared_field_seed, need_i, need_d);
        shared_truths.reserve(omegas.size());
        for (double w : omegas) shared_truths.push_back(eval_signal(shared_ctx->field, w));
        for (size_t si = 0; si < schemes.size(); ++si) {
            for (size_t zi = 0; zi < sizes.size(); ++zi) {
                const bool fixed_sample = schemes[si] == Scheme::Uniform || !sample_per_trial;
                if (!fixed_sample) continue;
                SampleContext& sc = sample_ctxs[si * sizes.size() + zi];
                try {
                    sc.partition = make_partition(*shared_ctx, schemes[si], sizes[zi],
                                                  condition_sample_seed(schemes[si], static_cast<int>(zi)));
                } catch (const std::exception& e) {
                    sc.partition_note = e.what();
                    continue;
                }
                if (need_q) {
                    try {
                        sc.gft = build_gft(shared_ctx->graph, *sc.partition);
                    } catch (const std::exception& e) {
                        sc.gft_note = e.what();
                    }
                }
            }
        }
    }

    const int n_cells = static_cast<int>(schemes.size() * omegas.size() * sigmas.size() * sizes.size()) * cfg.n_trials;
    ExperimentResult result;
    result.rows.resize(static_cast<size_t>(n_cells) * n_methods);

    const auto task = [&](int cell) {
        int rest = cell;
        const int trial = rest % cfg.n_trials;
        rest /= cfg.n_trials;
        const int zi = rest % static_cast<int>(sizes.size());
        rest /= static_cast<int>(sizes.size());
        const int gi = rest % static_cast<int>(sigmas.size());
        rest /= static_cast<int>(sigmas.size());
        const int wi = rest % static_cast<int>(omegas.size());
        const int si = rest / static_cast<int>(omegas.size());

        const Scheme scheme = schemes[si];
        const double omega = omegas[wi];
        const double sigma = sigmas[gi];
        const int size = sizes[zi];

        const std::uint64_t tseed = trial_seed(cfg.master_seed, scheme, wi, gi, zi, trial);
        const std::uint64_t field_seed = shared ? shared_field_seed : derive_seed(tseed, {kFieldStream});
        std::uint64_t sample_seed = 0;
        if (scheme == Scheme::Random)
            sample_seed = (shared && !sample_per_trial) ? condition_sample_seed(scheme, zi)
                                                        : derive_seed(tseed, {kSampleStream});
        const std::uint64_t noise_seed = sigma > 0.0 ? derive_seed(tseed, {kNoiseStream}) : 0;

        ResultRow* rows = result.rows.data() + static_cast<size_t>(cell) * n_methods;
        for (int mi = 0; mi < n_methods; ++mi) {
            ResultRow& row = rows[mi];
            row.method = cfg.methods[mi];
            row.scheme = scheme;
            row.omega = omega;
            row.sigma = sigma;
            row.size_requested = size;
            row.size_actual = 0;
            row.trial = trial;
            row.seed = tseed;
            row.field_seed = field_seed;
            row.sample_seed = sample_seed;
            row.noise_seed = noise_seed;
        }

        try {
            if (shared) {
                const SampleContext& sc = sample_ctxs[static_cast<size_t>(si) * sizes.size() + zi];
                const bool use_cache = scheme == Scheme::Uniform || !sample_per_trial;
                const VertexPartition* part = use_cache && sc.partition ? &*sc.partition : nullptr;
                const SpectralFoldingGft* gft = use_cache && sc.gft ? &*sc.gft : nullptr;
                fill_trial(cfg, *shared_ctx, part, use_cache ? sc.partition_note : "", gft,
                           use_cache ? sc.gft_note : "", shared_truths[wi], rows);
            } else {
                const FieldContext ctx = make_field_context(cfg, field_seed, need_i, need_d);
                const auto truth = eval_signal(ctx.field, omega);
                fill_trial(cfg, ctx, nullptr, "", nullptr, "", truth, rows);
            }
        } catch (const std::exception& e) {
            for (int mi = 0; mi < n_methods; ++mi) {
                rows[mi].failed = true;
                rows[mi].note = e.what();
            }
        }
    };

    parallel_tasks(n_cells, cfg.threads, task);
    return result;
}

}  // namespace

ExperimentResult run_table1(const ExperimentConfig& cfg) {
    validate_config(cfg);
    const std::vector<Scheme> schemes =
        cfg.schemes.empty() ? std::vector<Scheme>{Scheme::Random, Scheme::Uniform} : cfg.schemes;
    const std::vector<double> omegas{cfg.omega_list.empty() ? 1.0 : cfg.omega_list.front()};
    const std::vector<double> sigmas{cfg.sigma_list.empty() ? 0.0 : cfg.sigma_list.front()};
    const std::vector<int> sizes{cfg.sample_sizes.empty() ? 100 : cfg.sample_sizes.front()};
    return run_conditions(cfg, schemes, omegas, sigmas, sizes, true);
}

ExperimentResult run_sweep(const ExperimentConfig& cfg) {
    validate_config(cfg);
    const std::vector<Scheme> schemes = cfg.schemes.empty() ? std::vector<Scheme>{Scheme::Uniform} : cfg.schemes;
    const std::vector<double> omegas = cfg.omega_list.empty() ? std::vector<double>{0.5, 1.0, 2.0, 3.0} : cfg.omega_list;
    const std::vector<double> sigmas = cfg.sigma_list.empty() ? std::vector<double>{0.1, 0.2, 0.4} : cfg.sigma_list;
    const std::vector<int> sizes = cfg.sample_sizes.empty() ? std::vector<int>{50, 75, 100, 125, 150} : cfg.sample_sizes;
    return run_conditions(cfg, schemes, omegas, sigmas, sizes, false);
}

double replay_row(const ExperimentConfig& cfg, const ResultRow& row) {
    const FieldContext ctx =
        make_field_context(cfg, row.field_seed, row.method == Method::BlI, row.method == Method::BlD);
    const VertexPartition partition = make_partition(ctx, row.scheme, row.size_requested, row.sample_seed);
    const auto truth = eval_signal(ctx.field, row.omega);
    const auto observed = row.sigma > 0.0 ? add_noise(truth, row.sigma, row.noise_seed) : truth;
    const SampledSignal xs = sample_signal(partition, observed);

    std::optional<SpectralFoldingGft> gft;
    if (row.method == Method::SfQ) gft = build_gft(ctx.graph, partition);
    const auto y = reconstruct(row.method, ctx, gft ? &*gft : nullptr, xs);
    return std::min(snr_db(truth, y, partition.complement()), kSnrCapDb);
}

std::vector<SummaryRow> summarize(const ExperimentResult& result) {
    std::vector<SummaryRow> out;
    const auto find_group = [&out](const ResultRow& r) -> SummaryRow& {
        for (auto& s : out)
            if (s.method == r.method && s.scheme == r.scheme && s.omega == r.omega && s.sigma == r.sigma &&
                s.size_requested == r.size_requested)
                return s;
        out.push_back({r.method, r.scheme, r.omega, r.sigma, r.size_requested, 0, 0, 0.0, 0.0});
        return out.back();
    };

    for (const auto& r : result.rows) {
        SummaryRow& s = find_group(r);
        ++s.n_trials;
        if (r.failed)
            ++s.n_failed;
        else
            s.mean_snr_db += r.snr_db;
    }
    for (auto& s : out) {
        const int ok = s.n_trials - s.n_failed;
        if (ok > 0) s.mean_snr_db /= ok;
    }
    for (const auto& r : result.rows) {
        if (r.failed) continue;
        SummaryRow& s = find_group(r);
        const double d = r.snr_db - s.mean_snr_db;
        s.std_snr_db += d * d;
    }
    for (auto& s : out) {
        const int ok = s.n_trials - s.n_failed;
        s.std_snr_db = ok > 1 ? std::sqrt(s.std_snr_db / (ok - 1)) : 0.0;
    }
    return out;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += '"';
    return quoted;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    out << text;
    if (!out) throw ConfigError("write failed: " + path);
}

}  // namespace

std::string raw_csv(const ExperimentResult& result) {
    std::ostringstream out;
    out << "method,scheme,omega,sigma,size_requested,size_actual,trial,seed,field_seed,sample_seed,noise_seed,status,"
           "snr_db,note\n";
    for (const auto& r : result.rows) {
        out << to_string(r.method) << ',' << to_string(r.scheme) << ',' << format_double(r.omega) << ','
            << format_double(r.sigma) << ',' << r.size_requested << ',' << r.size_actual << ',' << r.trial << ','
            << r.seed << ',' << r.field_seed << ',' << r.sample_seed << ',' << r.noise_seed << ','
            << (r.failed ? "failed" : "ok") << ',' << (r.failed ? std::string() : format_double(r.snr_db)) << ','
            << csv_escape(r.note) << '\n';
    }
    return out.str();
}

std::string summary_csv(const std::vector<SummaryRow>& summary) {
    std::ostringstream out;
    out << "method,scheme,omega,sigma,size_requested,n_trials,n_failed,mean_snr_db,std_snr_db\n";
    for (const auto& s : summary) {
        out << to_string(s.method) << ',' << to_string(s.scheme) << ',' << format_double(s.omega) << ','
            << format_double(s.sigma) << ',' << s.size_requested << ',' << s.n_trials << ',' << s.n_failed << ',';
        if (s.n_trials > s.n_failed)
            out << format_double(s.mean_snr_db) << ',' << format_double(s.std_snr_db);
        else
            out << ',';
        out << '\n';
    }
    return out.str();
}

OutputFiles write_results(const ExperimentResult& result, const std::string& stem) {
    const std::string base = stem.empty() ? "results" : stem;
    const std::filesystem::path base_path(base);
    if (base_path.has_parent_path()) std::filesystem::create_directories(base_path.parent_path());

    OutputFiles files;
    files.raw = base + "_raw.csv";
    write_text(files.raw, raw_csv(result));

    const auto summary = summarize(result);
    files.summary = base + "_summary.csv";
    write_text(files.summary, summary_csv(summary));

    // One plot-data file per (scheme, sigma, omega) panel, rows in summary
    // order (size ascending, then method).
    std::vector<std::tuple<Scheme, double, double>> panels;
    for (const auto& s : summary) {
        const auto key = std::make_tuple(s.scheme, s.sigma, s.omega);
        if (std::find(panels.begin(), panels.end(), key) == panels.end()) panels.push_back(key);
    }
    for (const auto& [scheme, sigma, omega] : panels) {
        std::ostringstream body;
        body << "sample_size,method,mean_snr,std\n";
        for (const auto& s : summary) {
            if (s.scheme != scheme || s.sigma != sigma || s.omega != omega) continue;
            body << s.size_requested << ',' << to_string(s.method) << ',';
            if (s.n_trials > s.n_failed)
                body << format_double(s.mean_snr_db) << ',' << format_double(s.std_snr_db);
            else
                body << ',';
            body << '\n';
        }
        const std::string path =
            base + "_panel_" + to_string(scheme) + "_sigma" + format_double(sigma) + "_omega" + format_double(omega) + ".csv";
        write_text(path, body.str());
        files.panels.push_back(path);
    }
    return files;
}

namespace {

double rel_diff(std::span<const double> a, std::span<const double> b) {
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        num += d * d;
        den += std::max(a[i] * a[i], b[i] * b[i]);
    }
    return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

bool graph_connected(const Graph& g) {
    const int n = g.n();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u) {
            if (!seen[u] && g.weight(v, u) > 0.0) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

void verify_instance(std::uint64_t seed, VerifyReport& rep) {
    Rng rng(seed);
    const int n = 8 + static_cast<int>(rng.uniform_int(23));
    const int k = 2 + static_cast<int>(rng.uniform_int(4));

    // Connected graphs admit every partition; a disconnected KNN draw would
    // make small sample sets unconditionally inadmissible, so redraw.
    std::optional<SensorField> field;
    std::optional<Graph> graph;
    for (std::uint64_t attempt = 0; attempt < 50 && !graph; ++attempt) {
        SensorField f = place_sensors(n, derive_seed(seed, {kFieldStream, attempt}));
        Graph g = build_knn_graph(f.positions, k, 0.3);
        if (graph_connected(g)) {
            field = std::move(f);
            graph = std::move(g);
        }
    }
    if (!graph) {
        rep.failures.push_back({"build", seed, "no connected instance in 50 field draws"});
        return;
    }
    const Matrix lap = laplacian(*graph);

    const int m = 1 + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n / 2)));
    std::optional<VertexPartition> partition;
    for (int attempt = 0; attempt < 20 && !partition; ++attempt) {
        VertexPartition cand = sample_random(n, m, derive_seed(seed, {kSampleStream, static_cast<std::uint64_t>(attempt)}));
        if (check_partition_admissible(lap, cand).admissible) partition = std::move(cand);
    }
    if (!partition) {
        rep.failures.push_back({"build", seed, "no admissible partition in 20 draws"});
        return;
    }

    std::optional<SpectralFoldingGft> gft_storage;
    try {
        gft_storage = build_gft(*graph, *partition);
    } catch (const std::exception& e) {
        rep.failures.push_back({"build", seed, e.what()});
        return;
    }
    const SpectralFoldingGft& gft = *gft_storage;
    const int s = gft.s_size();
    const int r = gft.r();

    const FoldingReport fold = verify_spectral_folding(gft, 1e-7);
    if (!fold.all_pass) {
        const auto worst = std::max_element(fold.residuals.begin(), fold.residuals.end());
        rep.failures.push_back({"folding", seed,
                                "pair " + std::to_string(worst - fold.residuals.begin()) + " residual " +
                                    format_double(*worst) + " over threshold " + format_double(fold.threshold)});
    }

    std::vector<double> x(static_cast<size_t>(n));
    for (double& v : x) v = rng.normal();
    const auto xhat = forward(gft, x);
    double coeff_energy = 0.0;
    for (double v : xhat) coeff_energy += v * v;
    const double vertex_energy = q_inner(gft, x, x);
    if (std::abs(vertex_energy - coeff_energy) > 1e-9 * std::max(vertex_energy, 1e-30))
        rep.failures.push_back({"parseval", seed,
                                "energy " + format_double(vertex_energy) + " vs coefficients " + format_double(coeff_energy)});

    const auto round = inverse(gft, xhat);
    if (rel_diff(round, x) > 1e-9)
        rep.failures.push_back({"roundtrip", seed, "relative error " + format_double(rel_diff(round, x))});

    std::vector<double> chat(static_cast<size_t>(n), 0.0);
    for (int j = 0; j < r; ++j) chat[j] = rng.normal();
    const auto z = inverse(gft, chat);
    const auto zp = gft.to_internal(z);
    const double energy_s = quadratic_form(gft.q_s(), std::span<const double>(zp).subspan(0, s));
    const double energy_sc = quadratic_form(gft.q_sc(), std::span<const double>(zp).subspan(s, zp.size() - s));
    if (std::abs(energy_s - energy_sc) > 1e-8 * std::max(energy_s + energy_sc, 1e-30))
        rep.failures.push_back(
            {"energy-split", seed, "sample energy " + format_double(energy_s) + " vs complement " + format_double(energy_sc)});

    Matrix usr(s, r);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < r; ++j) usr(i, j) = gft.basis()(i, j);
    const Matrix gram = multiply_at_b(usr, multiply(gft.q_s(), usr));
    double gram_dev = 0.0;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) gram_dev = std::max(gram_dev, std::abs(gram(i, j) - (i == j ? 0.5 : 0.0)));
    if (gram_dev > 1e-8)
        rep.failures.push_back({"half-gram", seed, "gram deviation from I/2 is " + format_double(gram_dev)});

    const SampledSignal zs = sample_signal(*partition, z);
    const auto y = interpolate_sf(gft, zs);
    if (norm2(z) > 1e-12 && rel_diff(y, z) > 1e-6)
        rep.failures.push_back({"reconstruction", seed, "relative error " + format_double(rel_diff(y, z))});

    const BruteForceSolution oracle = brute_force_oracle(gft, zs);
    if (rel_diff(oracle.signal, y) > 1e-6)
        rep.failures.push_back({"oracle", seed, "relative mismatch " + format_double(rel_diff(oracle.signal, y)) +
                                                    " (constraint defect " + format_double(oracle.constraint_residual) + ")"});
}

}  // namespace

VerifyReport run_verify(const ExperimentConfig& cfg) {
    if (cfg.n_trials < 1) throw ConfigError("n_trials must be positive");
    VerifyReport rep;
    rep.instances = cfg.n_trials;
    rep.checks_run = {"build", "folding", "parseval", "roundtrip", "energy-split", "half-gram", "reconstruction", "oracle"};
    for (int i = 0; i < cfg.n_trials; ++i) {
        const std::uint64_t seed = derive_seed(cfg.master_seed, {kVerifyStream, static_cast<std::uint64_t>(i)});
        try {
            verify_instance(seed, rep);
        } catch (const std::exception& e) {
            rep.failures.push_back({"build", seed, e.what()});
        }
    }
    return rep;
}

}  // namespace sfgft
