#include "tiefair/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace tiefair {

namespace {

constexpr std::size_t kSourceBlocks = 64;

// Reusable per-worker buffers for single-source Brandes passes.
struct BrandesWorkspace {
  explicit BrandesWorkspace(std::size_t n)
      : dist(n, -1), sigma(n, 0.0), delta(n, 0.0) {
    order.reserve(n);
  }
  std::vector<std::int64_t> dist;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<NodeId> order;

  void accumulate_from(const Graph& g, NodeId s, std::vector<double>& into) {
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId u = order[head];
      for (NodeId w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
      }
    }
    // Dependencies in reverse BFS order; predecessors are the neighbors one
    // level closer to s.
    for (std::size_t i = order.size(); i-- > 0;) {
      const NodeId w = order[i];
      for (NodeId u : g.neighbors(w)) {
        if (dist[u] == dist[w] - 1) delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) into[w] += delta[w];
    }
    for (NodeId v : order) {
      dist[v] = -1;
      sigma[v] = 0.0;
      delta[v] = 0.0;
    }
  }
};

}  // namespace

CentralityScores betweenness(const Graph& g, unsigned threads) {
  const std::size_t n = g.node_count();
  CentralityScores scores(n, 0.0);
  if (n == 0) return scores;

  const std::size_t blocks = std::min(kSourceBlocks, n);
  std::vector<std::vector<double>> partial(blocks);
  auto run_block = [&](std::size_t b, BrandesWorkspace& ws) {
    partial[b].assign(n, 0.0);
    const std::size_t lo = b * n / blocks;
    const std::size_t hi = (b + 1) * n / blocks;
    for (std::size_t s = lo; s < hi; ++s) ws.accumulate_from(g, static_cast<NodeId>(s), partial[b]);
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, blocks));
  if (threads <= 1) {
    BrandesWorkspace ws(n);
    for (std::size_t b = 0; b < blocks; ++b) run_block(b, ws);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        BrandesWorkspace ws(n);
        for (std::size_t b = t; b < blocks; b += threads) run_block(b, ws);
      });
    }
  }

  for (const auto& p : partial) {
    for (std::size_t v = 0; v < n; ++v) scores[v] += p[v];
  }
  // Each unordered pair was counted from both endpoints.
  for (double& s : scores) s /= 2.0;
  return scores;
}

bool InfluencerSet::contains(NodeId v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

std::vector<bool> InfluencerSet::mask(std::size_t node_count) const {
  std::vector<bool> m(node_count, false);
  for (NodeId v : members) m.at(v) = true;
  return m;
}

std::size_t influencer_count(std::size_t node_count, double k_percent) {
  if (!(k_percent > 0.0 && k_percent <= 100.0)) {
    throw std::invalid_argument("k_percent must lie in (0, 100]");
  }
  // k * n / 100 is exact for integral k; the slack absorbs representation
  // error of fractional k.
  const double raw = k_percent * static_cast<double>(node_count) / 100.0;
  const auto size = static_cast<std::size_t>(std::ceil(raw - 1e-9));
  return std::clamp<std::size_t>(size, 1, std::max<std::size_t>(node_count, 1));
}

InfluencerSet top_influencers(CentralityScores scores, double k_percent) {
  if (scores.empty()) throw std::invalid_argument("top_influencers: graph has no nodes");
  const std::size_t count = influencer_count(scores.size(), k_percent);
  std::vector<NodeId> order(scores.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return scores[a] > scores[b]; });
  std::vector<NodeId> members(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count));
  std::sort(members.begin(), members.end());
  return {std::move(members), k_percent, std::move(scores), false};
}

InfluencerSet top_influencers(const Graph& g, double k_percent, unsigned threads) {
  if (g.node_count() == 0) throw std::invalid_argument("top_influencers: graph has no nodes");
  influencer_count(g.node_count(), k_percent);  // validate before the expensive pass
  return top_influencers(betweenness(g, threads), k_percent);
}

InfluencerSet manual_influencers(const Graph& g, std::vector<NodeId> members) {
  if (members.empty()) throw std::invalid_argument("manual influencer set is empty");
  for (NodeId v : members) {
    if (v >= g.node_count()) throw std::out_of_range("influencer index out of range");
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return {std::move(members), 0.0, {}, true};
}

InfluencerSet manual_influencers_by_label(const Graph& g, const std::vector<std::string>& labels) {
  std::vector<NodeId> members;
  members.reserve(labels.size());
  for (const auto& label : labels) {
    const auto id = g.find_label(label);
    if (!id) throw std::invalid_argument("unknown influencer label '" + label + "'");
    members.push_back(*id);
  }
  return manual_influencers(g, std::move(members));
}

}  // namespace tiefair
