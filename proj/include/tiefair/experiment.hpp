#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tiefair/centrality.hpp"
#include "tiefair/fairness.hpp"
#include "tiefair/graph.hpp"

namespace tiefair {

// Shortest decimal text that round-trips to the same double.
std::string format_number(double value);

// Quote a CSV field if it holds a separator, quote or newline.
std::string csv_field(const std::string& text);

struct WeightExponents {
  double a;
  double b;
  bool operator==(const WeightExponents&) const = default;
};

// The seven degree/distance weightings compared by default.
const std::vector<WeightExponents>& default_ab_pairs();
const std::vector<double>& default_p_values();

// Human-readable name of a D^a/d^b weighting, e.g. "(D/d)^2".
std::string variant_label(WeightExponents ab);

// Parses "a:b[,a:b...]".
std::vector<WeightExponents> parse_ab_pairs(const std::string& text);

struct CommonOptions {
  std::string graph_path;
  double k_percent = 1.0;
  double t_percent = 20.0;
  std::uint64_t seed = 0;
  std::vector<std::string> influencer_labels;  // manual override when non-empty
  RandomModel baseline_model = RandomModel::ba;
  std::size_t baseline_seeds = 10;
  unsigned threads = 1;
};

struct LoadedDataset {
  EdgeListLoad load;
  InfluencerSet influencers;
};

// Reads the edge list and picks influencers (manual labels or top k%).
LoadedDataset load_dataset(const CommonOptions& options);

// Baseline seeds are options.seed, options.seed + 1, ...
BaselineFairness dataset_baseline(const CommonOptions& options, std::size_t n, std::size_t m);

struct SweepSpec {
  CommonOptions common;
  std::vector<double> p_values = default_p_values();
  std::vector<WeightExponents> ab_pairs = default_ab_pairs();
  std::vector<std::uint64_t> seeds = {0};
  std::size_t visits = 250;
  std::size_t checkpoint_every = 50;
  unsigned workers = 1;
};

struct ResultRow {
  std::string dataset;
  std::string variant;
  double a;
  double b;
  double p;
  std::uint64_t seed;
  std::size_t visit;
  std::string metric;  // fairness_index | unreachable_fraction | graph_fairness | baseline_mean
  double value;
};

inline constexpr const char* kResultHeader = "dataset,variant,a,b,P,seed,visit,metric,value";
std::string to_csv(const ResultRow& row);

// Provenance comment lines ("# key=value").
void write_provenance(std::ostream& out, const std::string& command,
                      const std::vector<std::pair<std::string, std::string>>& params);

// Each subcommand writes its CSV to `out`. Errors are thrown.
void run_fairness(const CommonOptions& options, std::ostream& out);
void run_sweep(const SweepSpec& spec, std::ostream& out);
void run_baseline_convergence(std::size_t n, const std::vector<std::size_t>& edge_counts,
                              std::size_t seeds, const CommonOptions& options, std::ostream& out);
void run_scatter(const CommonOptions& options, std::ostream& out);
void run_kl(const CommonOptions& options, std::size_t sources, std::ostream& out);

// Row-level form of the sweep for programmatic use; same order as the CSV.
std::vector<ResultRow> sweep_rows(const SweepSpec& spec);

}  // namespace tiefair
