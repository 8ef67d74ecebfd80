#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tiefair/centrality.hpp"
#include "tiefair/fairness.hpp"
#include "tiefair/graph.hpp"
#include "tiefair/random.hpp"

namespace tiefair {

// Which recommender produced a candidate list or an edge.
//   triadic  - mutual-friend closure, weight e^i
//   weak_tie - importance-sampled long tie, weight D^a / d^b
enum class Branch { triadic, weak_tie };
const char* to_string(Branch branch);

/*
  Recommendation candidates for one visited node, in ascending node order.

  Weights are stored as natural logs so that e^i with i in the hundreds stays
  representable. A weight of zero is -infinity.
*/
struct CandidateSet {
  Branch kind = Branch::triadic;
  std::vector<NodeId> nodes;
  std::vector<double> log_weights;

  bool empty() const noexcept { return nodes.empty(); }
  std::size_t size() const noexcept { return nodes.size(); }
  double weight(std::size_t i) const;
};

// Nodes other than `source` that are neither its neighbors nor influencers.
std::vector<NodeId> candidate_pool(const Graph& g, NodeId source, const std::vector<bool>& influencer_mask);

// Triadic-closure candidates: log-weight of m is mutual_friends(source, m).
CandidateSet generate_triadic(const Graph& g, NodeId source, const InfluencerSet& influencers);

// Weak-tie candidates: weight D(m)^a / d(m)^b, where D is degree and d the
// distance to the nearest influencer. With no path to the influencers the
// weight is D^a when b == 0 and zero otherwise.
CandidateSet generate_weak_ties(const Graph& g, NodeId source, const InfluencerSet& influencers,
                                const DistanceField& distances, double a, double b);

// Draw a node with probability proportional to weight. If every weight is
// zero the draw is uniform over the set. Empty set gives nullopt.
std::optional<NodeId> sample_weighted(const CandidateSet& candidates, Rng& rng);

struct SimulationConfig {
  std::size_t visits = 0;  // N
  double p = 1.0;          // probability of the triadic branch
  double a = 0.0;          // degree exponent
  double b = 0.0;          // distance exponent
  double t_percent = 20.0;
  std::uint64_t seed = 0;
  std::size_t checkpoint_every = 1;
};

struct AddedEdge {
  std::size_t visit;
  NodeId source;
  NodeId target;
  Branch branch;

  bool operator==(const AddedEdge&) const = default;
};

struct Checkpoint {
  std::size_t visit;  // visits completed when measured
  FairnessReport report;
};

struct SimulationTrace {
  // Metric tracked by this run, fixed from the input graph: graph fairness
  // for connected inputs, unreachable fraction otherwise.
  FairnessMode metric_mode = FairnessMode::connected;
  std::vector<AddedEdge> added_edges;
  std::vector<std::size_t> skipped_visits;
  std::vector<Checkpoint> checkpoints;  // at visits 0, c, 2c, ... below N
  FairnessReport final_report;
  Graph final_graph;

  // Metric value of a report under metric_mode.
  double metric(const FairnessReport& report) const;
};

// Run N visits of the mixed recommender on a copy of g. Visited nodes are
// drawn uniformly (with replacement) from the non-influencers; every
// recommendation is accepted.
SimulationTrace simulate(const Graph& g, const InfluencerSet& influencers, const SimulationConfig& config);

// KL divergence of the normalized e^{mutual friends} distribution over the
// triadic candidates of `source` from the uniform distribution on the same
// candidates. Throws if there are no candidates.
double kl_distance(const Graph& g, NodeId source, const InfluencerSet& influencers);

}  // namespace tiefair
