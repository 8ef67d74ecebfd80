#include "tiefair/recommender.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tiefair {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Substream ids for simulate().
constexpr std::uint64_t kVisitStream = 1;
constexpr std::uint64_t kTriadicStream = 2;
constexpr std::uint64_t kWeakTieStream = 3;

void check_source(const Graph& g, NodeId source, const std::vector<bool>& influencer_mask) {
  if (source >= g.node_count()) throw std::out_of_range("source node out of range");
  if (influencer_mask[source]) throw std::invalid_argument("source node is an influencer");
}

CandidateSet triadic_from_mask(const Graph& g, NodeId source, const std::vector<bool>& influencer_mask) {
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> common(n, 0);
  std::vector<bool> excluded(influencer_mask);
  excluded[source] = true;
  for (NodeId u : g.neighbors(source)) {
    excluded[u] = true;
    for (NodeId w : g.neighbors(u)) ++common[w];
  }
  CandidateSet out{Branch::triadic, {}, {}};
  for (NodeId v = 0; v < n; ++v) {
    if (excluded[v]) continue;
    out.nodes.push_back(v);
    out.log_weights.push_back(static_cast<double>(common[v]));
  }
  return out;
}

CandidateSet weak_ties_from_mask(const Graph& g, NodeId source, const std::vector<bool>& influencer_mask,
                                 const DistanceField& distances, double a, double b) {
  if (distances.size() != g.node_count()) {
    throw std::invalid_argument("distance field does not match the graph");
  }
  CandidateSet out{Branch::weak_tie, candidate_pool(g, source, influencer_mask), {}};
  out.log_weights.reserve(out.nodes.size());
  for (NodeId m : out.nodes) {
    const auto degree = static_cast<double>(g.degree(m));
    // 0^0 = 1, so a == 0 contributes nothing even for isolated nodes.
    double lw = a == 0.0 ? 0.0 : (degree == 0.0 ? kNegInf : a * std::log(degree));
    const auto d = distances[m];
    if (d) {
      if (b != 0.0) lw -= b * std::log(static_cast<double>(*d));
    } else if (b != 0.0) {
      lw = kNegInf;
    }
    out.log_weights.push_back(lw);
  }
  return out;
}

}  // namespace

const char* to_string(Branch branch) { return branch == Branch::triadic ? "M" : "R"; }

double CandidateSet::weight(std::size_t i) const { return std::exp(log_weights.at(i)); }

std::vector<NodeId> candidate_pool(const Graph& g, NodeId source, const std::vector<bool>& influencer_mask) {
  check_source(g, source, influencer_mask);
  std::vector<bool> excluded(influencer_mask);
  excluded[source] = true;
  for (NodeId u : g.neighbors(source)) excluded[u] = true;
  std::vector<NodeId> pool;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!excluded[v]) pool.push_back(v);
  }
  return pool;
}

CandidateSet generate_triadic(const Graph& g, NodeId source, const InfluencerSet& influencers) {
  const auto mask = influencers.mask(g.node_count());
  check_source(g, source, mask);
  return triadic_from_mask(g, source, mask);
}

CandidateSet generate_weak_ties(const Graph& g, NodeId source, const InfluencerSet& influencers,
                                const DistanceField& distances, double a, double b) {
  if (a < 0.0 || b < 0.0) throw std::invalid_argument("exponents a, b must be non-negative");
  return weak_ties_from_mask(g, source, influencers.mask(g.node_count()), distances, a, b);
}

std::optional<NodeId> sample_weighted(const CandidateSet& candidates, Rng& rng) {
  if (candidates.empty()) return std::nullopt;
  const auto& lw = candidates.log_weights;
  const double top = *std::max_element(lw.begin(), lw.end());
  if (top == kNegInf) return candidates.nodes[uniform_below(rng, candidates.size())];

  double total = 0.0;
  for (double x : lw) total += std::exp(x - top);
  const double target = uniform01(rng) * total;
  double running = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < lw.size(); ++i) {
    if (lw[i] == kNegInf) continue;
    running += std::exp(lw[i] - top);
    last_positive = i;
    if (target < running) return candidates.nodes[i];
  }
  // Rounding can leave target at the very top of the range.
  return candidates.nodes[last_positive];
}

double SimulationTrace::metric(const FairnessReport& report) const {
  if (metric_mode == FairnessMode::disconnected) return report.unreachable_fraction;
  return report.graph_fairness.value();
}

SimulationTrace simulate(const Graph& g, const InfluencerSet& influencers, const SimulationConfig& config) {
  if (!(config.p >= 0.0 && config.p <= 1.0)) throw std::invalid_argument("P must lie in [0, 1]");
  if (config.a < 0.0 || config.b < 0.0) throw std::invalid_argument("exponents a, b must be non-negative");
  if (config.checkpoint_every == 0) throw std::invalid_argument("checkpoint_every must be positive");

  const std::size_t n = g.node_count();
  const auto mask = influencers.mask(n);
  std::vector<NodeId> visitable;
  for (NodeId v = 0; v < n; ++v) {
    if (!mask[v]) visitable.push_back(v);
  }
  if (visitable.empty()) throw std::invalid_argument("simulate: no non-influencer nodes to visit");

  SimulationTrace trace;
  trace.final_graph = g;
  Graph& current = trace.final_graph;

  Rng visit_rng(derive_seed(config.seed, kVisitStream));
  Rng triadic_rng(derive_seed(config.seed, kTriadicStream));
  Rng weak_tie_rng(derive_seed(config.seed, kWeakTieStream));

  auto measure = [&] {
    return summarize_fairness(multi_source_distances(current, influencers.members), influencers,
                              config.t_percent);
  };

  trace.metric_mode = measure().mode;
  for (std::size_t visit = 0; visit < config.visits; ++visit) {
    if (visit % config.checkpoint_every == 0) trace.checkpoints.push_back({visit, measure()});

    const NodeId source = visitable[uniform_below(visit_rng, visitable.size())];
    const Branch branch = uniform01(visit_rng) < config.p ? Branch::triadic : Branch::weak_tie;

    // Both branches draw from the same candidate pool and the weak-tie draw
    // falls back to uniform on all-zero weights, so a branch can only come up
    // empty when the pool is; the fallback branch would be empty too.
    std::optional<NodeId> target;
    if (branch == Branch::triadic) {
      target = sample_weighted(triadic_from_mask(current, source, mask), triadic_rng);
    } else {
      // Distances change with every added edge; recomputed per visit.
      const auto distances = multi_source_distances(current, influencers.members);
      target = sample_weighted(weak_ties_from_mask(current, source, mask, distances, config.a, config.b),
                               weak_tie_rng);
    }
    if (!target) {
      trace.skipped_visits.push_back(visit);
      continue;
    }
    current.add_edge(source, *target);
    trace.added_edges.push_back({visit, source, *target, branch});
  }
  trace.final_report = measure();
  return trace;
}

double kl_distance(const Graph& g, NodeId source, const InfluencerSet& influencers) {
  const auto candidates = generate_triadic(g, source, influencers);
  if (candidates.empty()) throw std::invalid_argument("kl_distance: source has no candidates");
  const auto& lw = candidates.log_weights;
  const auto [lo, hi] = std::minmax_element(lw.begin(), lw.end());
  if (*lo == *hi) return 0.0;

  const double top = *hi;
  double total = 0.0;
  for (double x : lw) total += std::exp(x - top);
  const double log_norm = top + std::log(total);
  const double log_uniform = -std::log(static_cast<double>(lw.size()));
  double kl = 0.0;
  for (double x : lw) {
    const double log_p = x - log_norm;
    kl += std::exp(log_p) * (log_p - log_uniform);
  }
  return std::max(kl, 0.0);
}

}  // namespace tiefair
