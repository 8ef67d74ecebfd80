#include "tiefair/fairness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "tiefair/random.hpp"

namespace tiefair {

const char* to_string(FairnessMode mode) {
  return mode == FairnessMode::connected ? "connected" : "disconnected";
}

const char* to_string(RandomModel model) { return model == RandomModel::er ? "er" : "ba"; }

RandomModel parse_random_model(const std::string& text) {
  if (text == "er" || text == "ER") return RandomModel::er;
  if (text == "ba" || text == "BA") return RandomModel::ba;
  throw std::invalid_argument("unknown random graph model '" + text + "' (expected ba or er)");
}

std::vector<NodeFairness> node_fairness(const Graph& g, const InfluencerSet& influencers) {
  const auto field = multi_source_distances(g, influencers.members);
  std::vector<NodeFairness> out;
  out.reserve(g.node_count() - influencers.members.size());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!influencers.contains(v)) out.push_back({v, field[v]});
  }
  return out;
}

std::size_t top_t_count(std::size_t eligible, double t_percent) {
  if (!(t_percent > 0.0 && t_percent <= 100.0)) {
    throw std::invalid_argument("t_percent must lie in (0, 100]");
  }
  const double raw = t_percent * static_cast<double>(eligible) / 100.0;
  const auto count = static_cast<std::size_t>(std::floor(raw + 1e-9));
  return std::clamp<std::size_t>(count, 1, std::max<std::size_t>(eligible, 1));
}

FairnessReport summarize_fairness(const DistanceField& distances, const InfluencerSet& influencers,
                                  double t_percent) {
  FairnessReport report;
  report.t_percent = t_percent;
  const std::size_t n = distances.size();
  const std::size_t eligible = n - influencers.members.size();
  if (eligible == 0) throw std::invalid_argument("graph has no non-influencer nodes");
  top_t_count(eligible, t_percent);

  std::vector<std::uint32_t> finite;
  finite.reserve(eligible);
  report.node_fairness.reserve(eligible);
  std::size_t unreachable = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (influencers.contains(v)) continue;
    const auto d = distances[v];
    report.node_fairness.push_back({v, d});
    if (d) {
      finite.push_back(*d);
    } else {
      ++unreachable;
    }
  }
  report.unreachable_fraction = static_cast<double>(unreachable) / static_cast<double>(eligible);
  if (unreachable > 0) {
    report.mode = FairnessMode::disconnected;
    return report;
  }
  report.mode = FairnessMode::connected;
  const std::size_t take = top_t_count(finite.size(), t_percent);
  std::nth_element(finite.begin(), finite.begin() + static_cast<std::ptrdiff_t>(take - 1), finite.end(),
                   std::greater<>());
  // Integer sum: exact and independent of element order.
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < take; ++i) sum += finite[i];
  report.graph_fairness = static_cast<double>(sum) / static_cast<double>(take);
  return report;
}

FairnessReport graph_fairness(const Graph& g, const InfluencerSet& influencers, double t_percent) {
  if (influencers.members.size() >= g.node_count()) {
    throw std::invalid_argument("graph has no non-influencer nodes");
  }
  return summarize_fairness(multi_source_distances(g, influencers.members), influencers, t_percent);
}

std::size_t ba_attachment(std::size_t n, std::size_t m) {
  if (n < 2) throw std::invalid_argument("baseline needs at least 2 nodes");
  const auto rounded = static_cast<std::size_t>(std::llround(static_cast<double>(m) / static_cast<double>(n)));
  return std::clamp<std::size_t>(rounded, 1, n - 1);
}

namespace {

struct BaselineSample {
  double fairness;
  std::size_t edges;
  std::size_t attempts;
};

BaselineSample baseline_sample(std::size_t n, std::size_t m, RandomModel model, double k_percent,
                               double t_percent, std::uint64_t seed, const BaselineOptions& options) {
  if (model == RandomModel::ba) {
    const Graph g = barabasi_albert(n, ba_attachment(n, m), seed);
    const auto report = graph_fairness(g, top_influencers(g, k_percent, options.threads), t_percent);
    return {*report.graph_fairness, g.edge_count(), 1};
  }
  for (std::size_t attempt = 0; attempt <= options.er_retry_cap; ++attempt) {
    const std::uint64_t draw_seed = attempt == 0 ? seed : derive_seed(seed, attempt);
    const Graph g = erdos_renyi(n, m, draw_seed);
    if (!is_connected(g)) continue;
    const auto report = graph_fairness(g, top_influencers(g, k_percent, options.threads), t_percent);
    return {*report.graph_fairness, g.edge_count(), attempt + 1};
  }
  throw std::runtime_error("er baseline: no connected G(n=" + std::to_string(n) + ", m=" +
                           std::to_string(m) + ") draw for seed " + std::to_string(seed) + " within " +
                           std::to_string(options.er_retry_cap) + " retries");
}

}  // namespace

BaselineFairness baseline_fairness(std::size_t n, std::size_t m, RandomModel model, double k_percent,
                                   double t_percent, const std::vector<std::uint64_t>& seeds,
                                   const BaselineOptions& options) {
  if (seeds.empty()) throw std::invalid_argument("baseline_fairness: seed list is empty");
  if (n < 2) throw std::invalid_argument("baseline_fairness: need at least 2 nodes");
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > pairs) {
    throw std::invalid_argument("baseline_fairness: m=" + std::to_string(m) + " exceeds n(n-1)/2");
  }
  if (model == RandomModel::er && m + 1 < n) {
    throw std::invalid_argument("er baseline: G(n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                                ") can never be connected");
  }
  influencer_count(n, k_percent);
  top_t_count(n, t_percent);

  BaselineFairness out;
  out.model = model;
  out.n = n;
  out.m = m;
  for (std::uint64_t seed : seeds) {
    const auto s = baseline_sample(n, m, model, k_percent, t_percent, seed, options);
    out.per_seed.push_back(s.fairness);
    out.actual_edge_counts.push_back(s.edges);
    out.attempts.push_back(s.attempts);
  }
  out.mean = std::accumulate(out.per_seed.begin(), out.per_seed.end(), 0.0) /
             static_cast<double>(out.per_seed.size());
  return out;
}

double fairness_index(const FairnessReport& observed, const BaselineFairness& baseline) {
  if (observed.mode != FairnessMode::connected || !observed.graph_fairness) {
    throw std::invalid_argument(
        "fairness index is defined for connected reports only; use unreachable_fraction");
  }
  if (!(baseline.mean > 0.0)) throw std::invalid_argument("baseline mean must be positive");
  return *observed.graph_fairness / baseline.mean;
}

std::vector<ConvergenceRow> convergence_study(std::size_t n, const std::vector<std::size_t>& edge_counts,
                                              std::size_t seeds_per_point, double k_percent,
                                              double t_percent, std::uint64_t base_seed,
                                              const BaselineOptions& options) {
  if (seeds_per_point == 0) throw std::invalid_argument("convergence_study: seeds_per_point is 0");
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  for (std::size_t m : edge_counts) {
    if (m >= pairs) {
      throw std::invalid_argument("edge count " + std::to_string(m) + " must be below n(n-1)/2=" +
                                  std::to_string(pairs));
    }
  }
  std::vector<std::uint64_t> seeds(seeds_per_point);
  std::iota(seeds.begin(), seeds.end(), base_seed);

  std::vector<ConvergenceRow> rows;
  for (RandomModel model : {RandomModel::ba, RandomModel::er}) {
    for (std::size_t m : edge_counts) {
      const auto b = baseline_fairness(n, m, model, k_percent, t_percent, seeds, options);
      double ss = 0.0;
      for (double x : b.per_seed) ss += (x - b.mean) * (x - b.mean);
      const double sd = b.per_seed.size() > 1 ? std::sqrt(ss / static_cast<double>(b.per_seed.size() - 1)) : 0.0;
      rows.push_back({model, m, b.mean, sd, seeds_per_point});
    }
  }
  return rows;
}

}  // namespace tiefair
