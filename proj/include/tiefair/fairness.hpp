#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiefair/centrality.hpp"
#include "tiefair/graph.hpp"

namespace tiefair {

enum class FairnessMode { connected, disconnected };
const char* to_string(FairnessMode mode);

struct NodeFairness {
  NodeId node;
  std::optional<std::uint32_t> distance;  // empty when no path to the influencers
};

struct FairnessReport {
  FairnessMode mode = FairnessMode::connected;
  std::vector<NodeFairness> node_fairness;  // non-influencer nodes, ascending id
  // Mean of the largest top-t% finite node distances; set only when connected.
  std::optional<double> graph_fairness;
  // Share of non-influencer nodes with no path to the influencers. Always
  // filled in; 0 in connected mode.
  double unreachable_fraction = 0.0;
  double t_percent = 0.0;
};

// Distance from every non-influencer node to the nearest influencer.
std::vector<NodeFairness> node_fairness(const Graph& g, const InfluencerSet& influencers);

// max(1, floor(t_percent / 100 * eligible)).
std::size_t top_t_count(std::size_t eligible, double t_percent);

FairnessReport graph_fairness(const Graph& g, const InfluencerSet& influencers, double t_percent);

// Same as graph_fairness, from distances already measured from the influencers.
FairnessReport summarize_fairness(const DistanceField& distances, const InfluencerSet& influencers,
                                  double t_percent);

// ---------------------------------------------------------------------------
// Random-graph baselines

enum class RandomModel { er, ba };
const char* to_string(RandomModel model);
RandomModel parse_random_model(const std::string& text);

// Attachment count used to size a preferential-attachment graph to about m
// edges: max(1, round(m / n)), capped at n - 1.
std::size_t ba_attachment(std::size_t n, std::size_t m);

struct BaselineOptions {
  // Disconnected G(n, m) draws are redrawn with derived seeds up to this many
  // times per requested seed.
  std::size_t er_retry_cap = 10000;
  unsigned threads = 1;
};

struct BaselineFairness {
  RandomModel model = RandomModel::ba;
  double mean = 0.0;
  std::vector<double> per_seed;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::size_t> actual_edge_counts;
  std::vector<std::size_t> attempts;  // draws consumed per seed (ER redraws)
};

// Graph fairness of one size-matched random graph, with influencers chosen
// on that graph at k_percent.
BaselineFairness baseline_fairness(std::size_t n, std::size_t m, RandomModel model, double k_percent,
                                   double t_percent, const std::vector<std::uint64_t>& seeds,
                                   const BaselineOptions& options = {});

// observed.graph_fairness / baseline.mean. Lower is fairer.
double fairness_index(const FairnessReport& observed, const BaselineFairness& baseline);

struct ConvergenceRow {
  RandomModel model;
  std::size_t edge_count;
  double mean;
  double std_dev;  // sample standard deviation; 0 for a single seed
  std::size_t seeds;
};

// For each model and edge count: spread of baseline graph fairness over
// seeds base_seed .. base_seed + seeds_per_point - 1.
std::vector<ConvergenceRow> convergence_study(std::size_t n, const std::vector<std::size_t>& edge_counts,
                                              std::size_t seeds_per_point, double k_percent,
                                              double t_percent, std::uint64_t base_seed = 0,
                                              const BaselineOptions& options = {});

}  // namespace tiefair
