#pragma once

#include <vector>

#include "tiefair/graph.hpp"

namespace tiefair {

// Raw betweenness: for each node, the sum over unordered pairs {s, t} with
// s != v != t of sigma_st(v) / sigma_st. Not normalized.
using CentralityScores = std::vector<double>;

// Brandes accumulation. Sources are split into a fixed number of blocks and
// the per-block partial sums are reduced in block order, so the result does
// not depend on `threads`. threads == 0 picks the hardware concurrency.
CentralityScores betweenness(const Graph& g, unsigned threads = 1);

struct InfluencerSet {
  std::vector<NodeId> members;  // ascending
  double k_percent = 0.0;       // 0 for a manual set
  CentralityScores scores;      // empty for a manual set
  bool manual = false;

  bool contains(NodeId v) const;
  // Dense membership mask of size node_count.
  std::vector<bool> mask(std::size_t node_count) const;
};

// max(1, ceil(k_percent / 100 * node_count)).
std::size_t influencer_count(std::size_t node_count, double k_percent);

// Highest-betweenness nodes; ties at the cutoff go to the lower index.
InfluencerSet top_influencers(const Graph& g, double k_percent, unsigned threads = 1);

// Ranking step of top_influencers on precomputed scores.
InfluencerSet top_influencers(CentralityScores scores, double k_percent);

// Explicit influencer set; no centrality is computed.
InfluencerSet manual_influencers(const Graph& g, std::vector<NodeId> members);
InfluencerSet manual_influencers_by_label(const Graph& g, const std::vector<std::string>& labels);

}  // namespace tiefair
