#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "spinfer/datagen.hpp"
#include "spinfer/diagnostics.hpp"
#include "spinfer/digest.hpp"
#include "spinfer/matrix.hpp"
#include "spinfer/sampler.hpp"

namespace spinfer::cli {

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitConfigError = 2;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out.push_back(',');
    out += parts[k];
  }
  return out;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

// Ordered key/value manifest; fixed key order makes runs diffable.
class Manifest {
 public:
  void add(const std::string& key, const std::string& value) {
    lines_ += key + ": " + value + "\n";
  }
  void save(const fs::path& path) const { write_text(path, lines_); }

 private:
  std::string lines_;
};

std::uint64_t parse_seed(const std::string& text) {
  if (text == "random") return std::random_device{}();
  try {
    std::size_t consumed = 0;
    const std::uint64_t seed = std::stoull(text, &consumed);
    if (consumed != text.size()) throw std::invalid_argument("trailing garbage");
    return seed;
  } catch (const std::exception&) {
    throw ConfigError("seed must be a 64-bit integer or 'random', got '" + text + "'");
  }
}

struct ChainFlags {
  std::string out = "spinfer_out";
  double alpha = 0.9;
  double c1 = 2.0;
  double c2 = 9.0;
  std::size_t steps = 200000;
  std::size_t burnin = 100000;
  std::size_t snapshot_every = 10000;
  std::string seed = "0";
  bool cumulative = false;
  bool emit_heatmap = false;

  void attach(CLI::App& app) {
    app.add_option("--alpha", alpha, "SP decay parameter")->capture_default_str();
    app.add_option("--c1", c1, "per-edge prior penalty")->capture_default_str();
    app.add_option("--c2", c2, "per-initiator prior penalty")->capture_default_str();
    app.add_option("--steps", steps, "total MH steps")->capture_default_str();
    app.add_option("--burnin", burnin, "burn-in steps")->capture_default_str();
    app.add_option("--snapshot-every", snapshot_every, "samples per snapshot block")
        ->capture_default_str();
    app.add_option("--seed", seed, "64-bit seed, or 'random'")->capture_default_str();
    app.add_flag("--cumulative", cumulative, "cumulative snapshot averages");
    app.add_flag("--emit-heatmap", emit_heatmap, "write P2 graymaps of the final averages");
    app.add_option("--out", out, "output directory")->capture_default_str();
  }

  ChainConfig config(std::uint64_t resolved_seed) const {
    ChainConfig cfg;
    cfg.total_steps = steps;
    cfg.burnin_steps = burnin;
    cfg.snapshot_every = snapshot_every;
    cfg.seed = resolved_seed;
    cfg.alpha = SPParams{alpha};
    cfg.priors = Priors{c1, c2};
    cfg.snapshot_mode = cumulative ? SnapshotMode::kCumulative : SnapshotMode::kBlockwise;
    return cfg;
  }
};

// Correlation report over one snapshot series; degenerate blocks are
// reported in the summary instead of failing the whole run.
void write_correlation(const std::vector<RealMatrix>& snapshots, bool exclude_diagonal,
                       const fs::path& dir, const std::string& stem, Manifest& manifest,
                       const std::string& manifest_key) {
  if (snapshots.size() < 2) {
    write_text(dir / (stem + "_summary.txt"), "min_off_diagonal: nan (single block)\n");
    manifest.add(manifest_key, "n/a");
    return;
  }
  try {
    const CorrelationReport rep = pearson_matrix(snapshots, exclude_diagonal);
    save_real_matrix(rep.matrix, (dir / (stem + ".csv")).string());
    write_text(dir / (stem + "_summary.txt"),
               "min_off_diagonal: " + fmt(rep.min_off_diagonal) + "\n");
    manifest.add(manifest_key, fmt(rep.min_off_diagonal));
  } catch (const DegenerateSnapshotError& e) {
    write_text(dir / (stem + "_summary.txt"),
               "min_off_diagonal: nan (degenerate snapshot block " + std::to_string(e.block) +
                   ")\n");
    manifest.add(manifest_key, "degenerate");
  }
}

// Per-block initiator snapshot used for files and correlations: the matrix
// itself in single mode, the mean over timesteps in temporal mode.
RealMatrix block_initiator_snapshot(const ChainResult& result, std::size_t block) {
  const std::vector<RealMatrix>& per_t = result.initiator_avgs[block];
  if (per_t.size() == 1) return per_t[0];
  RealMatrix mean(per_t[0].rows(), per_t[0].cols());
  mean.row_labels = per_t[0].row_labels;
  mean.col_labels = per_t[0].col_labels;
  for (const RealMatrix& n_t : per_t)
    for (std::size_t i = 0; i < mean.rows(); ++i)
      for (std::size_t u = 0; u < mean.cols(); ++u) mean.at(i, u) += n_t(i, u);
  for (std::size_t i = 0; i < mean.rows(); ++i)
    for (std::size_t u = 0; u < mean.cols(); ++u)
      mean.at(i, u) /= static_cast<double>(per_t.size());
  return mean;
}

void emit_run_outputs(const ChainResult& result, const fs::path& dir, bool emit_heatmap,
                      Manifest& manifest) {
  std::vector<RealMatrix> init_series;
  for (std::size_t b = 0; b < result.block_count(); ++b) {
    save_real_matrix(result.graph_avgs[b],
                     (dir / ("G_avg_" + std::to_string(b + 1) + ".csv")).string());
    init_series.push_back(block_initiator_snapshot(result, b));
    save_real_matrix(init_series.back(),
                     (dir / ("N_avg_" + std::to_string(b + 1) + ".csv")).string());
  }
  save_real_matrix(result.graph_avg(), (dir / "G_avg.csv").string());
  save_real_matrix(init_series.back(), (dir / "N_avg.csv").string());

  if (result.temporal) {
    for (std::size_t t = 0; t < result.timesteps; ++t)
      save_real_matrix(result.initiator_avgs.back()[t],
                       (dir / ("N_avg_t" + std::to_string(t + 1) + ".csv")).string());
    save_real_matrix(overall_initiator_average(result), (dir / "N_all_avg.csv").string());
  }

  RealMatrix trace(result.block_count(), 2);
  trace.col_labels = {"logpost_at_block_end", "block_mean_logpost"};
  for (std::size_t b = 0; b < result.block_count(); ++b) {
    trace.at(b, 0) = result.logpost_at_block_end[b];
    trace.at(b, 1) = result.block_mean_logpost[b];
  }
  save_real_matrix(trace, (dir / "logpost_trace.csv").string());

  write_correlation(result.graph_avgs, true, dir, "G_corr", manifest,
                    "g_corr_min_off_diagonal");
  write_correlation(init_series, false, dir, "N_corr", manifest, "n_corr_min_off_diagonal");

  if (emit_heatmap) {
    save_pgm(result.graph_avg(), (dir / "G_avg.pgm").string());
    save_pgm(init_series.back(), (dir / "N_avg.pgm").string());
    if (result.temporal)
      save_pgm(overall_initiator_average(result), (dir / "N_all_avg.pgm").string());
  }

  manifest.add("acceptance_rate", fmt(result.acceptance_rate));
  manifest.add("mean_final_block_log_posterior", fmt(result.block_mean_logpost.back()));
}

void add_chain_params(Manifest& manifest, const ChainFlags& flags, std::uint64_t seed) {
  manifest.add("alpha", fmt(flags.alpha));
  manifest.add("c1", fmt(flags.c1));
  manifest.add("c2", fmt(flags.c2));
  manifest.add("steps", std::to_string(flags.steps));
  manifest.add("burnin", std::to_string(flags.burnin));
  manifest.add("snapshot_every", std::to_string(flags.snapshot_every));
  manifest.add("seed", std::to_string(seed));
  manifest.add("snapshot_mode", flags.cumulative ? "cumulative" : "blockwise");
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

ObservationSequence load_sequence(const std::vector<std::string>& paths) {
  ObservationSequence seq;
  for (const std::string& p : paths) seq.matrices.push_back(load_matrix(p));
  if (auto v = validate_sequence(seq)) {
    throw MonotonicityError(v->t, v->i, v->u);
  }
  return seq;
}

// --- subcommands -----------------------------------------------------------

int cmd_infer(const std::string& matrix_path, const ChainFlags& flags) {
  const auto start = std::chrono::steady_clock::now();
  const BinaryMatrix m = load_matrix(matrix_path);
  const std::uint64_t seed = parse_seed(flags.seed);
  const ChainConfig cfg = flags.config(seed);
  validate_config(cfg);

  const fs::path dir(flags.out);
  fs::create_directories(dir);
  const ChainResult result = run_chain(m, cfg);

  Manifest manifest;
  manifest.add("command", "infer");
  manifest.add("input_files", matrix_path);
  manifest.add("input_digests", file_digest(matrix_path));
  add_chain_params(manifest, flags, seed);
  manifest.add("selected_alpha", "n/a");
  emit_run_outputs(result, dir, flags.emit_heatmap, manifest);
  manifest.add("wall_time_seconds", fmt(seconds_since(start)));
  manifest.save(dir / "manifest.txt");
  return kExitOk;
}

int cmd_infer_temporal(const std::vector<std::string>& matrix_paths, const ChainFlags& flags) {
  const auto start = std::chrono::steady_clock::now();
  const ObservationSequence seq = load_sequence(matrix_paths);
  const std::uint64_t seed = parse_seed(flags.seed);
  const ChainConfig cfg = flags.config(seed);
  validate_config(cfg);

  const fs::path dir(flags.out);
  fs::create_directories(dir);
  const ChainResult result = run_chain(seq, cfg);

  Manifest manifest;
  manifest.add("command", "infer-temporal");
  manifest.add("input_files", join(matrix_paths));
  std::vector<std::string> digests;
  for (const std::string& p : matrix_paths) digests.push_back(file_digest(p));
  manifest.add("input_digests", join(digests));
  add_chain_params(manifest, flags, seed);
  manifest.add("selected_alpha", "n/a");
  emit_run_outputs(result, dir, flags.emit_heatmap, manifest);
  manifest.add("wall_time_seconds", fmt(seconds_since(start)));
  manifest.save(dir / "manifest.txt");
  return kExitOk;
}

int cmd_alpha_scan(const std::string& matrix_path, const std::vector<std::string>& seq_paths,
                   const std::string& grid_text, const ChainFlags& flags) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<double> grid = parse_grid(grid_text);
  const std::uint64_t seed = parse_seed(flags.seed);
  const ChainConfig cfg = flags.config(seed);
  validate_config(cfg);

  const fs::path dir(flags.out);
  fs::create_directories(dir);

  AlphaScanResult scan;
  std::vector<std::string> inputs;
  if (!matrix_path.empty()) {
    inputs.push_back(matrix_path);
    scan = alpha_scan(load_matrix(matrix_path), grid, cfg);
  } else {
    inputs = seq_paths;
    scan = alpha_scan(load_sequence(seq_paths), grid, cfg);
  }

  RealMatrix table(grid.size(), 2);
  table.col_labels = {"alpha", "mean_final_block_log_posterior"};
  for (std::size_t k = 0; k < grid.size(); ++k) {
    table.at(k, 0) = scan.grid[k];
    table.at(k, 1) = scan.mean_final_logpost[k];
  }
  save_real_matrix(table, (dir / "scan_results.csv").string());

  Manifest manifest;
  manifest.add("command", "alpha-scan");
  manifest.add("input_files", join(inputs));
  std::vector<std::string> digests;
  for (const std::string& p : inputs) digests.push_back(file_digest(p));
  manifest.add("input_digests", join(digests));
  add_chain_params(manifest, flags, seed);
  manifest.add("grid", grid_text);
  manifest.add("selected_alpha", fmt(scan.selected_alpha));
  emit_run_outputs(scan.chains[scan.selected_index], dir, flags.emit_heatmap, manifest);
  manifest.add("wall_time_seconds", fmt(seconds_since(start)));
  manifest.save(dir / "manifest.txt");
  return kExitOk;
}

int cmd_generate(std::size_t n, std::size_t m, std::size_t edges, std::size_t inits_per_signal,
                 double alpha, const std::string& seed_text, const std::string& out) {
  const std::uint64_t seed = parse_seed(seed_text);
  const PlantedInstance inst = synth_planted(n, m, edges, inits_per_signal, SPParams{alpha}, seed);
  const fs::path dir(out);
  fs::create_directories(dir);
  save_matrix(inst.observed, (dir / "M.csv").string());
  save_matrix(graph_to_matrix(inst.true_graph), (dir / "G_true.csv").string());
  save_matrix(inst.true_initiators, (dir / "N_true.csv").string());

  Manifest params;
  params.add("command", "generate");
  params.add("n", std::to_string(n));
  params.add("m", std::to_string(m));
  params.add("edges", std::to_string(edges));
  params.add("initiators_per_signal", std::to_string(inits_per_signal));
  params.add("alpha", fmt(alpha));
  params.add("seed", std::to_string(seed));
  params.add("observed_ones", std::to_string(count_ones(inst.observed)));
  params.save(dir / "params.txt");
  return kExitOk;
}

int cmd_degrade(const std::string& matrix_path, std::size_t t_steps,
                const std::string& seed_text, const std::string& out) {
  const BinaryMatrix m = load_matrix(matrix_path);
  const std::uint64_t seed = parse_seed(seed_text);
  const ObservationSequence seq = degrade_temporal(m, t_steps, seed);
  const fs::path dir(out);
  fs::create_directories(dir);
  for (std::size_t t = 0; t < seq.size(); ++t)
    save_matrix(seq[t], (dir / ("M_" + std::to_string(t + 1) + ".csv")).string());

  Manifest manifest;
  manifest.add("command", "degrade");
  manifest.add("input_files", matrix_path);
  manifest.add("input_digests", file_digest(matrix_path));
  manifest.add("t", std::to_string(t_steps));
  manifest.add("seed", std::to_string(seed));
  manifest.save(dir / "manifest.txt");
  return kExitOk;
}

int cmd_similarity(const std::string& matrix_path, const std::string& out) {
  const BinaryMatrix m = load_matrix(matrix_path);
  const fs::path dir(out);
  fs::create_directories(dir);
  save_real_matrix(hamming_similarity(m), (dir / "similarity.csv").string());

  Manifest manifest;
  manifest.add("command", "similarity");
  manifest.add("input_files", matrix_path);
  manifest.add("input_digests", file_digest(matrix_path));
  manifest.save(dir / "manifest.txt");
  return kExitOk;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  const auto first = text.find(':');
  if (first == std::string::npos) {
    try {
      return {std::stod(text)};
    } catch (const std::exception&) {
      throw ConfigError("bad grid value: " + text);
    }
  }
  const auto second = text.find(':', first + 1);
  if (second == std::string::npos) throw ConfigError("grid syntax is start:end:step");
  try {
    const double start = std::stod(text.substr(0, first));
    const double end = std::stod(text.substr(first + 1, second - first - 1));
    const double step = std::stod(text.substr(second + 1));
    if (step <= 0.0 || end < start) throw ConfigError("grid must ascend: " + text);
    std::vector<double> grid;
    for (std::size_t k = 0;; ++k) {
      const double v = start + static_cast<double>(k) * step;
      if (v > end + 1e-9) break;
      grid.push_back(v);
    }
    return grid;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("bad grid syntax: " + text);
  }
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  Fnv1a64 h;
  char buf[4096];
  while (in.read(buf, sizeof buf) || in.gcount() > 0)
    h.update(buf, static_cast<std::size_t>(in.gcount()));
  return "fnv1a64:" + h.hex();
}

int run(int argc, char** argv) {
  CLI::App app{"Posterior sampling of influence graphs and initiators from binary "
               "observation matrices"};
  app.require_subcommand(1);

  // infer
  std::string infer_matrix;
  ChainFlags infer_flags;
  CLI::App* infer = app.add_subcommand("infer", "sample (G, N) from one observation matrix");
  infer->add_option("--matrix", infer_matrix, "observation matrix file")->required();
  infer_flags.attach(*infer);

  // infer-temporal
  std::vector<std::string> temporal_matrices;
  ChainFlags temporal_flags;
  CLI::App* temporal =
      app.add_subcommand("infer-temporal", "sample (G, N_1..N_T) from a time-ordered sequence");
  temporal->add_option("--matrices", temporal_matrices, "matrix files in time order")
      ->required()
      ->delimiter(',');
  temporal_flags.attach(*temporal);

  // alpha-scan
  std::string scan_matrix;
  std::vector<std::string> scan_matrices;
  std::string grid_text = "0.1:0.9:0.1";
  ChainFlags scan_flags;
  CLI::App* scan = app.add_subcommand("alpha-scan", "one chain per grid alpha, pick the best");
  scan->add_option("--matrix", scan_matrix, "observation matrix file");
  scan->add_option("--matrices", scan_matrices, "matrix files in time order")->delimiter(',');
  scan->add_option("--grid", grid_text, "alpha grid start:end:step")->capture_default_str();
  scan_flags.attach(*scan);

  // generate
  std::size_t gen_n = 15, gen_m = 40, gen_edges = 20, gen_inits = 1;
  double gen_alpha = 0.9;
  std::string gen_seed = "0", gen_out = "spinfer_out";
  CLI::App* generate = app.add_subcommand("generate", "synthesize a planted instance");
  generate->add_option("--n", gen_n, "entities")->capture_default_str();
  generate->add_option("--m", gen_m, "signals")->capture_default_str();
  generate->add_option("--edges", gen_edges, "planted edge count")->capture_default_str();
  generate->add_option("--initiators-per-signal", gen_inits, "initiator rows per signal")
      ->capture_default_str();
  generate->add_option("--alpha", gen_alpha, "SP decay parameter")->capture_default_str();
  generate->add_option("--seed", gen_seed, "64-bit seed, or 'random'")->capture_default_str();
  generate->add_option("--out", gen_out, "output directory")->capture_default_str();

  // degrade
  std::string degrade_matrix, degrade_seed = "0", degrade_out = "spinfer_out";
  std::size_t degrade_t = 3;
  CLI::App* degrade = app.add_subcommand("degrade", "thin a matrix into a temporal sequence");
  degrade->add_option("--matrix", degrade_matrix, "observation matrix file")->required();
  degrade->add_option("--t", degrade_t, "number of timesteps")->capture_default_str();
  degrade->add_option("--seed", degrade_seed, "64-bit seed, or 'random'")->capture_default_str();
  degrade->add_option("--out", degrade_out, "output directory")->capture_default_str();

  // similarity
  std::string sim_matrix, sim_out = "spinfer_out";
  CLI::App* similarity = app.add_subcommand("similarity", "inverse-Hamming row similarity");
  similarity->add_option("--matrix", sim_matrix, "observation matrix file")->required();
  similarity->add_option("--out", sim_out, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message/help
    return e.get_exit_code() == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (infer->parsed()) return cmd_infer(infer_matrix, infer_flags);
    if (temporal->parsed()) return cmd_infer_temporal(temporal_matrices, temporal_flags);
    if (scan->parsed()) {
      if (scan_matrix.empty() == scan_matrices.empty())
        throw ConfigError("alpha-scan needs exactly one of --matrix / --matrices");
      return cmd_alpha_scan(scan_matrix, scan_matrices, grid_text, scan_flags);
    }
    if (generate->parsed())
      return cmd_generate(gen_n, gen_m, gen_edges, gen_inits, gen_alpha, gen_seed, gen_out);
    if (degrade->parsed())
      return cmd_degrade(degrade_matrix, degrade_t, degrade_seed, degrade_out);
    if (similarity->parsed()) return cmd_similarity(sim_matrix, sim_out);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const MonotonicityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitConfigError;
}

}  // namespace spinfer::cli
