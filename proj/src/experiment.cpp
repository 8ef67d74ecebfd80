#include "tiefair/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <exception>
#include <filesystem>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "tiefair/random.hpp"
#include "tiefair/recommender.hpp"

namespace tiefair {

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return {buf, res.ptr};
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

const std::vector<WeightExponents>& default_ab_pairs() {
  static const std::vector<WeightExponents> pairs = {
      {0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.5, 0.5}, {0.0, 2.0}, {2.0, 2.0}, {1.0, 2.0}};
  return pairs;
}

const std::vector<double>& default_p_values() {
  static const std::vector<double> values = {0.0, 0.25, 0.5, 0.75, 1.0};
  return values;
}

std::string variant_label(WeightExponents ab) {
  static const std::map<std::pair<double, double>, std::string> names = {
      {{0.0, 0.0}, "completely random"}, {{1.0, 0.0}, "degree"},  {{1.0, 1.0}, "D/d"},
      {{0.5, 0.5}, "sqrt(D/d)"},         {{0.0, 2.0}, "1/d^2"},   {{2.0, 2.0}, "(D/d)^2"},
      {{1.0, 2.0}, "D/d^2"}};
  if (auto it = names.find({ab.a, ab.b}); it != names.end()) return it->second;
  return "D^" + format_number(ab.a) + "/d^" + format_number(ab.b);
}

namespace {

double parse_double(std::string_view text, const char* what) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw std::invalid_argument(std::string("cannot parse ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

std::string dataset_name(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

}  // namespace

std::vector<WeightExponents> parse_ab_pairs(const std::string& text) {
  std::vector<WeightExponents> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view item(text.data() + start, comma - start);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("a:b pair expected, got '" + std::string(item) + "'");
    }
    const WeightExponents ab{parse_double(item.substr(0, colon), "exponent a"),
                             parse_double(item.substr(colon + 1), "exponent b")};
    if (ab.a < 0.0 || ab.b < 0.0) throw std::invalid_argument("exponents must be non-negative");
    out.push_back(ab);
    start = comma + 1;
  }
  return out;
}

std::string to_csv(const ResultRow& row) {
  return csv_field(row.dataset) + ',' + csv_field(row.variant) + ',' + format_number(row.a) + ',' +
         format_number(row.b) + ',' + format_number(row.p) + ',' + std::to_string(row.seed) + ',' +
         std::to_string(row.visit) + ',' + row.metric + ',' + format_number(row.value);
}

void write_provenance(std::ostream& out, const std::string& command,
                      const std::vector<std::pair<std::string, std::string>>& params) {
  out << "# tiefair " << command << '\n';
  for (const auto& [key, value] : params) out << "# " << key << '=' << value << '\n';
}

LoadedDataset load_dataset(const CommonOptions& options) {
  if (options.graph_path.empty()) throw std::invalid_argument("--graph is required");
  LoadedDataset ds{load_edge_list_file(options.graph_path), {}};
  if (!options.influencer_labels.empty()) {
    ds.influencers = manual_influencers_by_label(ds.load.graph, options.influencer_labels);
  } else {
    ds.influencers = top_influencers(ds.load.graph, options.k_percent, options.threads);
  }
  return ds;
}

BaselineFairness dataset_baseline(const CommonOptions& options, std::size_t n, std::size_t m) {
  std::vector<std::uint64_t> seeds(options.baseline_seeds);
  std::iota(seeds.begin(), seeds.end(), options.seed);
  BaselineOptions bo;
  bo.threads = options.threads;
  return baseline_fairness(n, m, options.baseline_model, options.k_percent, options.t_percent, seeds, bo);
}

namespace {

std::vector<std::pair<std::string, std::string>> common_params(const CommonOptions& o) {
  std::string manual;
  for (const auto& l : o.influencer_labels) manual += (manual.empty() ? "" : ";") + l;
  return {{"graph", o.graph_path},
          {"k_percent", format_number(o.k_percent)},
          {"t_percent", format_number(o.t_percent)},
          {"seed", std::to_string(o.seed)},
          {"influencers", manual.empty() ? "top-k betweenness" : manual},
          {"baseline", to_string(o.baseline_model)},
          {"baseline_seeds", std::to_string(o.baseline_seeds)}};
}

void write_load_notes(std::ostream& out, const EdgeListLoad& load) {
  out << "# nodes=" << load.graph.node_count() << " edges=" << load.graph.edge_count()
      << " duplicates_dropped=" << load.duplicates_dropped
      << " self_loops_dropped=" << load.self_loops_dropped << '\n';
}

// Baselines keyed by what actually changes the random graph: the attachment
// count for BA, the edge count for ER.
class BaselineCache {
 public:
  explicit BaselineCache(const CommonOptions& options) : options_(options) {}

  double mean(std::size_t n, std::size_t m) {
    const std::size_t key = options_.baseline_model == RandomModel::ba ? ba_attachment(n, m) : m;
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, dataset_baseline(options_, n, m).mean).first;
    return it->second;
  }

 private:
  const CommonOptions& options_;
  std::mutex mutex_;
  std::map<std::size_t, double> cache_;
};

struct SweepCell {
  WeightExponents ab;
  double p;
  std::uint64_t seed;
};

std::vector<ResultRow> run_cell(const SweepSpec& spec, const LoadedDataset& ds, const std::string& dataset,
                                const SweepCell& cell, BaselineCache& baselines) {
  SimulationConfig cfg;
  cfg.visits = spec.visits;
  cfg.p = cell.p;
  cfg.a = cell.ab.a;
  cfg.b = cell.ab.b;
  cfg.t_percent = spec.common.t_percent;
  cfg.seed = cell.seed;
  cfg.checkpoint_every = spec.checkpoint_every;
  const auto trace = simulate(ds.load.graph, ds.influencers, cfg);

  const std::size_t n = ds.load.graph.node_count();
  const std::size_t m0 = ds.load.graph.edge_count();
  const bool connected = trace.metric_mode == FairnessMode::connected;
  auto value_at = [&](const FairnessReport& report, std::size_t edges) {
    if (!connected) return report.unreachable_fraction;
    return *report.graph_fairness / baselines.mean(n, edges);
  };

  std::vector<ResultRow> rows;
  const ResultRow proto{dataset, variant_label(cell.ab), cell.ab.a, cell.ab.b, cell.p, cell.seed, 0,
                        connected ? "fairness_index" : "unreachable_fraction", 0.0};
  std::size_t added = 0;
  for (const auto& cp : trace.checkpoints) {
    while (added < trace.added_edges.size() && trace.added_edges[added].visit < cp.visit) ++added;
    ResultRow row = proto;
    row.visit = cp.visit;
    row.value = value_at(cp.report, m0 + added);
    rows.push_back(std::move(row));
  }
  ResultRow last = proto;
  last.visit = spec.visits;
  last.value = value_at(trace.final_report, trace.final_graph.edge_count());
  rows.push_back(std::move(last));
  return rows;
}

struct SweepOutcome {
  std::vector<std::vector<ResultRow>> cells;  // only the successful prefix
  std::exception_ptr error;
};

SweepOutcome execute_sweep(const SweepSpec& spec) {
  if (spec.p_values.empty() || spec.ab_pairs.empty() || spec.seeds.empty()) {
    throw std::invalid_argument("sweep grid is empty");
  }
  if (spec.checkpoint_every == 0) throw std::invalid_argument("--checkpoint-every must be positive");
  for (double p : spec.p_values) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("P values must lie in [0, 1]");
  }
  const auto ds = load_dataset(spec.common);
  const std::string dataset = dataset_name(spec.common.graph_path);

  std::vector<SweepCell> grid;
  for (const auto& ab : spec.ab_pairs) {
    for (double p : spec.p_values) {
      for (std::uint64_t seed : spec.seeds) grid.push_back({ab, p, seed});
    }
  }

  BaselineCache baselines(spec.common);
  std::vector<std::vector<ResultRow>> results(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        results[i] = run_cell(spec, ds, dataset, grid[i], baselines);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(spec.workers, static_cast<unsigned>(grid.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  SweepOutcome outcome;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (errors[i]) {
      outcome.error = errors[i];
      break;
    }
    outcome.cells.push_back(std::move(results[i]));
  }
  return outcome;
}

}  // namespace

std::vector<ResultRow> sweep_rows(const SweepSpec& spec) {
  auto outcome = execute_sweep(spec);
  if (outcome.error) std::rethrow_exception(outcome.error);
  std::vector<ResultRow> rows;
  for (auto& cell : outcome.cells) rows.insert(rows.end(), cell.begin(), cell.end());
  return rows;
}

void run_sweep(const SweepSpec& spec, std::ostream& out) {
  auto params = common_params(spec.common);
  std::string ps, abs, seeds;
  for (double p : spec.p_values) ps += (ps.empty() ? "" : ";") + format_number(p);
  for (const auto& ab : spec.ab_pairs) {
    abs += (abs.empty() ? "" : ";") + format_number(ab.a) + ':' + format_number(ab.b);
  }
  for (auto s : spec.seeds) seeds += (seeds.empty() ? "" : ";") + std::to_string(s);
  params.emplace_back("p_values", ps);
  params.emplace_back("ab_pairs", abs);
  params.emplace_back("seeds", seeds);
  params.emplace_back("n_visits", std::to_string(spec.visits));
  params.emplace_back("checkpoint_every", std::to_string(spec.checkpoint_every));
  write_provenance(out, "sweep", params);
  out << kResultHeader << '\n';

  auto outcome = execute_sweep(spec);
  for (const auto& cell : outcome.cells) {
    for (const auto& row : cell) out << to_csv(row) << '\n';
  }
  if (outcome.error) {
    std::string message = "unknown error";
    try {
      std::rethrow_exception(outcome.error);
    } catch (const std::exception& e) {
      message = e.what();
    } catch (...) {
    }
    out << "# ABORTED: " << message << '\n';
    out.flush();
    std::rethrow_exception(outcome.error);
  }
}

void run_fairness(const CommonOptions& options, std::ostream& out) {
  const auto ds = load_dataset(options);
  const Graph& g = ds.load.graph;
  const auto report = graph_fairness(g, ds.influencers, options.t_percent);

  write_provenance(out, "fairness", common_params(options));
  write_load_notes(out, ds.load);
  out << "metric,value\n";
  out << "nodes," << g.node_count() << '\n';
  out << "edges," << g.edge_count() << '\n';
  out << "influencers," << ds.influencers.members.size() << '\n';
  out << "mode," << to_string(report.mode) << '\n';
  if (report.mode == FairnessMode::disconnected) {
    out << "unreachable_fraction," << format_number(report.unreachable_fraction) << '\n';
    return;
  }
  const auto baseline = dataset_baseline(options, g.node_count(), g.edge_count());
  out << "graph_fairness," << format_number(*report.graph_fairness) << '\n';
  out << "baseline_mean," << format_number(baseline.mean) << '\n';
  out << "fairness_index," << format_number(fairness_index(report, baseline)) << '\n';
}

void run_baseline_convergence(std::size_t n, const std::vector<std::size_t>& edge_counts, std::size_t seeds,
                              const CommonOptions& options, std::ostream& out) {
  BaselineOptions bo;
  bo.threads = options.threads;
  const auto rows =
      convergence_study(n, edge_counts, seeds, options.k_percent, options.t_percent, options.seed, bo);
  std::string counts;
  for (auto m : edge_counts) counts += (counts.empty() ? "" : ";") + std::to_string(m);
  write_provenance(out, "baseline-convergence",
                   {{"n", std::to_string(n)},
                    {"edge_counts", counts},
                    {"seeds", std::to_string(seeds)},
                    {"seed", std::to_string(options.seed)},
                    {"k_percent", format_number(options.k_percent)},
                    {"t_percent", format_number(options.t_percent)}});
  out << "model,edge_count,mean,std,seeds\n";
  for (const auto& r : rows) {
    out << to_string(r.model) << ',' << r.edge_count << ',' << format_number(r.mean) << ','
        << format_number(r.std_dev) << ',' << r.seeds << '\n';
  }
}

void run_scatter(const CommonOptions& options, std::ostream& out) {
  const auto ds = load_dataset(options);
  const Graph& g = ds.load.graph;
  write_provenance(out, "scatter", common_params(options));
  write_load_notes(out, ds.load);
  out << "node,degree,inv_distance\n";
  for (const auto& nf : node_fairness(g, ds.influencers)) {
    out << csv_field(g.label(nf.node)) << ',' << g.degree(nf.node) << ',';
    if (nf.distance) out << format_number(1.0 / static_cast<double>(*nf.distance));
    out << '\n';
  }
}

void run_kl(const CommonOptions& options, std::size_t sources, std::ostream& out) {
  const auto ds = load_dataset(options);
  const Graph& g = ds.load.graph;
  const auto mask = ds.influencers.mask(g.node_count());

  std::vector<NodeId> eligible;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!mask[v] && !candidate_pool(g, v, mask).empty()) eligible.push_back(v);
  }
  if (sources < eligible.size()) {
    // Partial Fisher-Yates; the chosen prefix is reported in node order.
    Rng rng(derive_seed(options.seed, 0x6b6c));
    for (std::size_t i = 0; i < sources; ++i) {
      const std::size_t j = i + uniform_below(rng, eligible.size() - i);
      std::swap(eligible[i], eligible[j]);
    }
    eligible.resize(sources);
    std::sort(eligible.begin(), eligible.end());
  }

  auto params = common_params(options);
  params.emplace_back("sources", std::to_string(sources));
  write_provenance(out, "kl", params);
  out << "node,kl\n";
  for (NodeId v : eligible) {
    out << csv_field(g.label(v)) << ',' << format_number(kl_distance(g, v, ds.influencers)) << '\n';
  }
}

}  // namespace tiefair
