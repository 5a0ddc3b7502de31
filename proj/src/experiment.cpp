// Copyright 2025-2026 The qwork developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwork/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qwork/analytic.hpp"
#include "qwork/oracle.hpp"
#include "qwork/parallel.hpp"
#include "qwork/protocol.hpp"
#include "qwork/rng.hpp"
#include "qwork/sample_io.hpp"
#include "qwork/sqt.hpp"

namespace qwork::experiment {

namespace {

constexpr double kMinBeta = 1e-3;
constexpr double kExactTurTolerance = 1e-9;

std::string format_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// Config parsing: flat "key = value" lines, # comments, values are numbers,
// booleans, quoted or bare strings, or [comma, separated, lists].
// ---------------------------------------------------------------------------

std::string strip(std::string_view text) {
    std::size_t a = 0, b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) {
        a++;
    }
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) {
        b--;
    }
    return std::string(text.substr(a, b - a));
}

nlohmann::json parse_scalar(const std::string &token, const std::string &where) {
    if (token.empty()) {
        throw ConfigError(where + ": empty value");
    }
    if (token.front() == '"') {
        if (token.size() < 2 || token.back() != '"') {
            throw ConfigError(where + ": unterminated string");
        }
        return token.substr(1, token.size() - 2);
    }
    if (token == "true") {
        return true;
    }
    if (token == "false") {
        return false;
    }
    char *end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end != nullptr && *end == '\0') {
        return value;
    }
    return token; // bare word
}

nlohmann::json parse_value(const std::string &token, const std::string &where) {
    if (!token.empty() && token.front() == '[') {
        if (token.back() != ']') {
            throw ConfigError(where + ": unterminated list");
        }
        nlohmann::json list = nlohmann::json::array();
        std::string inner = token.substr(1, token.size() - 2);
        std::size_t start = 0;
        bool in_string = false;
        for (std::size_t i = 0; i <= inner.size(); i++) {
            if (i < inner.size() && inner[i] == '"') {
                in_string = !in_string;
            }
            if (i == inner.size() || (inner[i] == ',' && !in_string)) {
                const std::string item = strip(std::string_view(inner).substr(start, i - start));
                if (!item.empty()) {
                    list.push_back(parse_scalar(item, where));
                }
                start = i + 1;
            }
        }
        return list;
    }
    return parse_scalar(token, where);
}

template <class T> std::vector<T> as_list(const nlohmann::json &value, const std::string &where) {
    std::vector<T> out;
    if (value.is_array()) {
        for (const auto &item : value) {
            out.push_back(item.get<T>());
        }
    } else {
        out.push_back(value.get<T>());
    }
    if (out.empty()) {
        throw ConfigError(where + ": list must not be empty");
    }
    return out;
}

} // namespace

ExperimentConfig ExperimentConfig::from_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path);
    }
    ExperimentConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            // keep # inside quotes
            bool in_string = false;
            std::size_t cut = std::string::npos;
            for (std::size_t i = 0; i < line.size(); i++) {
                if (line[i] == '"') {
                    in_string = !in_string;
                }
                if (line[i] == '#' && !in_string) {
                    cut = i;
                    break;
                }
            }
            if (cut != std::string::npos) {
                line.resize(cut);
            }
        }
        const std::string text = strip(line);
        if (text.empty()) {
            continue;
        }
        const auto eq = text.find('=');
        std::ostringstream where;
        where << path << ":" << line_no;
        if (eq == std::string::npos) {
            throw ConfigError(where.str() + ": expected key = value");
        }
        const std::string key = strip(std::string_view(text).substr(0, eq));
        const nlohmann::json value =
            parse_value(strip(std::string_view(text).substr(eq + 1)), where.str());
        try {
            if (key == "family") {
                cfg.family = value.get<std::string>();
            } else if (key == "graph_file") {
                cfg.graph_file = value.get<std::string>();
            } else if (key == "n_spins") {
                cfg.n_spins = as_list<int>(value, where.str());
            } else if (key == "layout_indices") {
                cfg.layout_indices = as_list<int>(value, where.str());
            } else if (key == "taus") {
                cfg.taus = as_list<double>(value, where.str());
            } else if (key == "gammas") {
                cfg.gammas = as_list<double>(value, where.str());
            } else if (key == "betas") {
                cfg.betas = as_list<double>(value, where.str());
            } else if (key == "n_trotters") {
                cfg.n_trotters = as_list<int>(value, where.str());
            } else if (key == "shots") {
                cfg.shots = value.get<std::size_t>();
            } else if (key == "noise_p2") {
                cfg.noise.p2 = value.get<double>();
            } else if (key == "noise_p_read") {
                cfg.noise.p_read = value.get<double>();
            } else if (key == "estimators") {
                cfg.estimators.clear();
                for (const auto &name : as_list<std::string>(value, where.str())) {
                    cfg.estimators.push_back(workstats::estimator_from_string(name));
                }
            } else if (key == "delta") {
                cfg.delta = value.get<double>();
            } else if (key == "seed") {
                cfg.seed = value.get<std::uint64_t>();
            } else if (key == "out") {
                cfg.out = value.get<std::string>();
            } else if (key == "samples_in") {
                cfg.samples_in = value.get<std::string>();
            } else if (key == "max_statevector_qubits") {
                cfg.max_statevector_qubits = value.get<int>();
            } else if (key == "oracle_max_qubits") {
                cfg.oracle_max_qubits = value.get<int>();
            } else if (key == "max_subspace") {
                cfg.max_subspace = value.get<std::size_t>();
            } else if (key == "workers") {
                cfg.workers = value.get<int>();
            } else {
                throw ConfigError(where.str() + ": unknown key '" + key + "'");
            }
        } catch (const nlohmann::json::exception &e) {
            throw ConfigError(where.str() + ": bad value for '" + key + "': " + e.what());
        } catch (const std::invalid_argument &e) {
            throw ConfigError(where.str() + ": " + e.what());
        }
    }
    return cfg;
}

void ExperimentConfig::apply_family_defaults() {
    auto tau_grid = [] {
        std::vector<double> taus;
        for (int i = 1; i <= 40; i++) {
            taus.push_back(0.1 * i);
        }
        return taus;
    };
    const std::vector<double> beta_grid{10.0, 5.0, 2.0, 1.0, 0.5, 0.2, 0.1};
    if (family == "scan") {
        if (n_spins.empty()) {
            n_spins = {5, 10, 15, 19, 22, 27};
        }
        if (taus.empty()) {
            taus = tau_grid();
        }
        if (gammas.empty()) {
            gammas = {1.0};
        }
        if (n_trotters.empty()) {
            n_trotters = {10};
        }
        if (betas.empty()) {
            betas = beta_grid;
        }
    } else if (family == "coupling") {
        if (n_spins.empty()) {
            n_spins = {15};
        }
        if (taus.empty()) {
            taus = {1.0};
        }
        if (gammas.empty()) {
            for (int i = 1; i <= 24; i++) {
                gammas.push_back(0.25 * i);
            }
        }
        if (n_trotters.empty()) {
            for (int i = 1; i <= 8; i++) {
                n_trotters.push_back(i);
            }
        }
        if (betas.empty()) {
            betas = beta_grid;
        }
    } else if (family == "size") {
        if (layout_indices.empty() && n_spins.empty() && graph_file.empty()) {
            for (int i = 1; i <= lattice::kNumLayouts; i++) {
                layout_indices.push_back(i);
            }
        }
        if (taus.empty()) {
            taus = {1.0};
        }
        if (gammas.empty()) {
            gammas = {1.0};
        }
        // n_trotters left empty means "graph diameter per layout"
        if (betas.empty()) {
            betas = beta_grid;
        }
    }
    if (estimators.empty()) {
        using workstats::Estimator;
        estimators = {Estimator::kRaw,   Estimator::kSqt, Estimator::kExtSqt,
                      Estimator::kExact, Estimator::kLrt, Estimator::kWn};
    }
}

void ExperimentConfig::validate() const {
    if (family != "scan" && family != "coupling" && family != "size" && family != "custom") {
        throw ConfigError("family must be scan, coupling, size, or custom");
    }
    if (graph_file.empty() && n_spins.empty() && layout_indices.empty()) {
        throw ConfigError("no graphs selected: set n_spins, layout_indices, or graph_file");
    }
    if (taus.empty() || gammas.empty() || betas.empty()) {
        throw ConfigError("tau, gamma, and beta grids must be nonempty");
    }
    if (family != "size" && n_trotters.empty()) {
        throw ConfigError("n_trotters must be nonempty outside the size family");
    }
    for (double b : betas) {
        if (!(b >= kMinBeta)) {
            throw ConfigError("beta values must be >= 1e-3 (entropy production degenerates)");
        }
    }
    for (double t : taus) {
        if (!(t > 0.0)) {
            throw ConfigError("tau values must be positive");
        }
    }
    for (int nt : n_trotters) {
        if (nt < 1) {
            throw ConfigError("n_trotter values must be >= 1");
        }
    }
    if (shots < 1) {
        throw ConfigError("shots must be >= 1");
    }
    if (delta < 0.0 || delta >= 1.0) {
        throw ConfigError("delta must be in [0, 1)");
    }
    try {
        noise.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    if (estimators.empty()) {
        throw ConfigError("estimator list must not be empty");
    }
}

namespace {

struct GridPoint {
    int graph_index = 0;
    double tau = 0.0, gamma = 0.0, beta = 0.0;
    int n_trotter = 0;
};

bool wants(const ExperimentConfig &cfg, workstats::Estimator tag) {
    return std::find(cfg.estimators.begin(), cfg.estimators.end(), tag) != cfg.estimators.end();
}

double sampled_tur_tolerance(double variance, std::size_t n) {
    if (n < 2) {
        return kExactTurTolerance;
    }
    // Two standard errors of the sample variance under a normal
    // approximation: SE ~ variance * sqrt(2 / (N - 1)).
    return 2.0 * variance * std::sqrt(2.0 / static_cast<double>(n - 1));
}

ResultRow make_row(const GridPoint &pt, const lattice::Graph &g,
                   const workstats::WorkStatistics &stats, double tur_tol, std::uint64_t seed) {
    ResultRow row;
    row.n_spin = g.n_vertices;
    row.n_edges = static_cast<int>(g.n_edges());
    row.beta = pt.beta;
    row.tau = pt.tau;
    row.gamma = pt.gamma;
    row.n_trotter = pt.n_trotter;
    row.tag = stats.tag;
    row.mean_w = stats.mean;
    row.var_w = stats.variance;
    const auto tur = workstats::tur_check(stats, pt.beta, tur_tol);
    row.sigma = tur.sigma;
    row.tur_bound = tur.bound;
    row.tur_satisfied = tur.satisfied;
    row.n_samples = stats.n_samples;
    row.seed = seed;
    return row;
}

struct PointOutput {
    std::vector<ResultRow> rows;
    std::vector<std::string> notices;
};

PointOutput run_point(const ExperimentConfig &cfg, const GridPoint &pt, const lattice::Graph &g,
                      const std::vector<sim::TPMSample> *external_samples,
                      std::uint64_t point_seed) {
    using workstats::Estimator;
    PointOutput out;
    const protocol::DriveParams params{pt.beta, pt.tau, pt.gamma, pt.n_trotter};

    const bool needs_samples =
        wants(cfg, Estimator::kRaw) || wants(cfg, Estimator::kSqt) || wants(cfg, Estimator::kExtSqt);
    std::vector<sim::TPMSample> sampled;
    const std::vector<sim::TPMSample> *samples = nullptr;
    if (needs_samples) {
        if (external_samples != nullptr) {
            samples = external_samples;
        } else if (g.n_vertices <= cfg.max_statevector_qubits) {
            sim::RunOptions options;
            options.max_qubits = cfg.max_statevector_qubits;
            sampled = sim::run_tpm(g, params, cfg.shots, cfg.noise, point_seed, options);
            samples = &sampled;
        } else {
            std::ostringstream note;
            note << "n=" << g.n_vertices << " tau=" << pt.tau << " gamma=" << pt.gamma
                 << " beta=" << pt.beta
                 << ": statevector sampling skipped (limit " << cfg.max_statevector_qubits
                 << " qubits); supply --samples-in to post-process external data";
            out.notices.push_back(note.str());
        }
    }

    std::size_t n_kept = 0;
    if (samples != nullptr) {
        auto filtered = sim::parity_filter(*samples);
        n_kept = filtered.kept.size();
        if (wants(cfg, Estimator::kRaw)) {
            if (filtered.kept.size() >= 2) {
                auto stats = workstats::raw_estimators(filtered.kept);
                auto row = make_row(pt, g, stats,
                                    sampled_tur_tolerance(stats.variance, stats.n_samples),
                                    point_seed);
                row.n_samples = samples->size();
                row.n_kept = n_kept;
                out.rows.push_back(row);
            } else {
                out.notices.push_back("raw estimator skipped: fewer than 2 samples kept");
            }
        }
        if (wants(cfg, Estimator::kSqt) && !filtered.kept.empty()) {
            sqt::Subspace s = sqt::build_subspace(filtered.kept);
            if (s.size() > cfg.max_subspace) {
                throw ResourceCapError("sqt subspace of dimension " + std::to_string(s.size()) +
                                       " exceeds the cap of " + std::to_string(cfg.max_subspace));
            }
            auto estimate = sqt::sqt_estimate(g, s, params);
            estimate.stats.n_samples = filtered.kept.size();
            auto row = make_row(pt, g, estimate.stats,
                                sampled_tur_tolerance(estimate.stats.variance, n_kept), point_seed);
            row.n_samples = samples->size();
            row.n_kept = n_kept;
            row.subspace_dim = estimate.subspace_dim;
            row.gibbs_mass = estimate.gibbs_mass;
            out.rows.push_back(row);
        }
        if (wants(cfg, Estimator::kExtSqt) && !filtered.kept.empty()) {
            sqt::ExtSqtOptions options;
            options.delta = cfg.delta;
            options.max_subspace = cfg.max_subspace;
            sqt::SQTEstimate estimate;
            try {
                estimate = sqt::ext_sqt_estimate(g, filtered.kept, params, options);
            } catch (const std::length_error &e) {
                throw ResourceCapError(e.what());
            }
            auto row = make_row(pt, g, estimate.stats,
                                sampled_tur_tolerance(estimate.stats.variance, n_kept), point_seed);
            row.n_samples = samples->size();
            row.n_kept = n_kept;
            row.subspace_dim = estimate.subspace_dim;
            row.gibbs_mass = estimate.gibbs_mass;
            out.rows.push_back(row);
        }
    }

    if (wants(cfg, Estimator::kExact)) {
        if (g.n_vertices <= cfg.oracle_max_qubits) {
            auto [mean, variance] = oracle::exact_moments(g, params);
            workstats::WorkStatistics stats{mean, variance, 0, Estimator::kExact};
            out.rows.push_back(make_row(pt, g, stats, kExactTurTolerance, point_seed));
        } else {
            std::ostringstream note;
            note << "n=" << g.n_vertices << ": exact oracle skipped (limit "
                 << cfg.oracle_max_qubits << " qubits)";
            out.notices.push_back(note.str());
        }
    }
    if (wants(cfg, Estimator::kLrt)) {
        analytic::LRTParams lp{pt.beta, pt.gamma, pt.tau, static_cast<int>(g.n_edges())};
        workstats::WorkStatistics stats{analytic::lrt_cumulant(1, lp), analytic::lrt_cumulant(2, lp),
                                        0, Estimator::kLrt};
        out.rows.push_back(make_row(pt, g, stats, kExactTurTolerance, point_seed));
    }
    if (wants(cfg, Estimator::kWn)) {
        auto [mean, variance] = analytic::wn_moments(g.n_vertices, pt.beta);
        workstats::WorkStatistics stats{mean, variance, 0, Estimator::kWn};
        out.rows.push_back(make_row(pt, g, stats, kExactTurTolerance, point_seed));
    }
    return out;
}

} // namespace

RunOutput run_experiment(const ExperimentConfig &raw_config) {
    ExperimentConfig cfg = raw_config;
    cfg.apply_family_defaults();
    cfg.validate();

    const auto start_time = std::chrono::steady_clock::now();

    std::vector<lattice::Graph> graphs;
    if (!cfg.graph_file.empty()) {
        graphs.push_back(lattice::Graph::load(cfg.graph_file));
    } else if (!cfg.layout_indices.empty()) {
        for (int index : cfg.layout_indices) {
            graphs.push_back(lattice::heavy_hex_layout(index));
        }
    } else {
        for (int n : cfg.n_spins) {
            graphs.push_back(lattice::heavy_hex_fragment(n));
        }
    }

    std::vector<sim::TPMSample> external;
    const std::vector<sim::TPMSample> *external_ptr = nullptr;
    if (!cfg.samples_in.empty()) {
        external = sample_io::load_samples(cfg.samples_in);
        for (const auto &g : graphs) {
            if (external.front().x.size() != g.n_vertices) {
                throw ConfigError("samples_in bit length does not match the selected graphs");
            }
        }
        external_ptr = &external;
    }

    // Deterministic grid order: graph, tau, gamma, n_trotter, beta.
    std::vector<GridPoint> grid;
    for (int gi = 0; gi < static_cast<int>(graphs.size()); gi++) {
        std::vector<int> step_grid = cfg.n_trotters;
        if (step_grid.empty()) {
            step_grid = {lattice::graph_diameter(graphs[gi])};
        }
        for (double tau : cfg.taus) {
            for (double gamma : cfg.gammas) {
                for (int nt : step_grid) {
                    for (double beta : cfg.betas) {
                        grid.push_back({gi, tau, gamma, beta, nt});
                    }
                }
            }
        }
    }

    std::vector<PointOutput> outputs(grid.size());
    parallel_for(
        grid.size(),
        [&](std::size_t i) {
            const auto &pt = grid[i];
            outputs[i] = run_point(cfg, pt, graphs[pt.graph_index], external_ptr,
                                   /*point_seed=*/cfg.seed + i);
        },
        cfg.workers > 0 ? static_cast<unsigned>(cfg.workers) : 0);

    RunOutput run;
    for (auto &po : outputs) {
        run.rows.insert(run.rows.end(), po.rows.begin(), po.rows.end());
        run.notices.insert(run.notices.end(), po.notices.begin(), po.notices.end());
    }

    run.csv_path = cfg.out + ".csv";
    write_rows_csv(run.csv_path, run.rows);

    const double wall_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
    nlohmann::json manifest;
    manifest["tool"] = "qwork";
    manifest["version"] = "0.1.0";
    manifest["family"] = cfg.family;
    manifest["seed"] = cfg.seed;
    manifest["shots"] = cfg.shots;
    manifest["delta"] = cfg.delta;
    manifest["noise"] = {{"p2", cfg.noise.p2}, {"p_read", cfg.noise.p_read}};
    manifest["grid_points"] = grid.size();
    manifest["rows"] = run.rows.size();
    manifest["notices"] = run.notices;
    manifest["wall_time_s"] = wall_s;
    {
        auto estimators = nlohmann::json::array();
        for (auto tag : cfg.estimators) {
            estimators.push_back(std::string(workstats::to_string(tag)));
        }
        manifest["estimators"] = std::move(estimators);
    }
    run.manifest_path = cfg.out + ".manifest.json";
    std::ofstream mf(run.manifest_path);
    if (!mf) {
        throw std::runtime_error("run_experiment: cannot write " + run.manifest_path);
    }
    mf << manifest.dump(2) << "\n";
    return run;
}

namespace {

const char *kCsvHeader = "n_spin,n_edges,beta,tau,gamma,n_T,estimator_tag,mean_W,var_W,sigma,"
                         "tur_bound,tur_satisfied,n_samples,n_kept,M,gibbs_mass,seed";

} // namespace

void write_rows_csv(const std::string &path, std::span<const ResultRow> rows) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("write_rows_csv: cannot write " + path);
    }
    out << kCsvHeader << "\n";
    for (const auto &r : rows) {
        out << r.n_spin << "," << r.n_edges << "," << format_double(r.beta) << ","
            << format_double(r.tau) << "," << format_double(r.gamma) << "," << r.n_trotter << ","
            << workstats::to_string(r.tag) << "," << format_double(r.mean_w) << ","
            << format_double(r.var_w) << "," << format_double(r.sigma) << ","
            << format_double(r.tur_bound) << "," << (r.tur_satisfied ? 1 : 0) << ","
            << r.n_samples << "," << r.n_kept << "," << r.subspace_dim << ","
            << format_double(r.gibbs_mass) << "," << r.seed << "\n";
    }
}

std::vector<ResultRow> read_rows_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("read_rows_csv: cannot open " + path);
    }
    std::vector<ResultRow> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty() || (line_no == 1 && line == kCsvHeader)) {
            continue;
        }
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); i++) {
            if (i == line.size() || line[i] == ',') {
                fields.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
        if (fields.size() != 17) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 17 columns");
        }
        ResultRow r;
        r.n_spin = std::stoi(fields[0]);
        r.n_edges = std::stoi(fields[1]);
        r.beta = std::stod(fields[2]);
        r.tau = std::stod(fields[3]);
        r.gamma = std::stod(fields[4]);
        r.n_trotter = std::stoi(fields[5]);
        r.tag = workstats::estimator_from_string(fields[6]);
        r.mean_w = std::stod(fields[7]);
        r.var_w = std::stod(fields[8]);
        r.sigma = std::stod(fields[9]);
        r.tur_bound = std::stod(fields[10]);
        r.tur_satisfied = fields[11] == "1";
        r.n_samples = std::stoull(fields[12]);
        r.n_kept = std::stoull(fields[13]);
        r.subspace_dim = std::stoull(fields[14]);
        r.gibbs_mass = std::stod(fields[15]);
        r.seed = std::stoull(fields[16]);
        rows.push_back(r);
    }
    return rows;
}

void emit_plotdata(std::span<const ResultRow> rows, const std::string &family,
                   const std::string &prefix) {
    if (rows.empty()) {
        throw std::invalid_argument("emit_plotdata: no rows");
    }
    auto axis_of = [&family](const ResultRow &r) {
        if (family == "coupling") {
            return r.gamma;
        }
        if (family == "size") {
            return static_cast<double>(r.n_spin);
        }
        return r.tau; // scan and custom sweep the duration
    };
    const std::string axis_name =
        family == "coupling" ? "gamma" : (family == "size" ? "n_spin" : "tau");

    std::ofstream mean_out(prefix + "_mean.csv"), var_out(prefix + "_var.csv"),
        tur_out(prefix + "_tur.csv");
    if (!mean_out || !var_out || !tur_out) {
        throw std::runtime_error("emit_plotdata: cannot write panel files");
    }
    mean_out << axis_name << ",beta,estimator,mean_W\n";
    var_out << axis_name << ",beta,estimator,var_W\n";
    tur_out << axis_name << ",beta,estimator,tur_bound,var_W\n";
    for (const auto &r : rows) {
        const std::string axis = format_double(axis_of(r));
        const auto tag = workstats::to_string(r.tag);
        mean_out << axis << "," << format_double(r.beta) << "," << tag << ","
                 << format_double(r.mean_w) << "\n";
        var_out << axis << "," << format_double(r.beta) << "," << tag << ","
                << format_double(r.var_w) << "\n";
        tur_out << axis << "," << format_double(r.beta) << "," << tag << ","
                << format_double(r.tur_bound) << "," << format_double(r.var_w) << "\n";
    }
}

} // namespace qwork::experiment
