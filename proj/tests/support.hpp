#pragma once

// Fixtures and independent reference implementations used by the tests.
// Nothing here calls the library's traversal, centrality or sampling code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "tiefair/graph.hpp"

namespace tiefair::testing {

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (NodeId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

// Hub 0 with leaves 1..leaves.
inline Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (NodeId v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

// G(n, p) from its own engine; the library's generators are not used.
inline Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::vector<std::set<NodeId>> neighbor_sets(const Graph& g) {
  std::vector<std::set<NodeId>> sets(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (NodeId u : g.neighbors(v)) sets[v].insert(u);
  }
  return sets;
}

inline std::size_t brute_mutual(const std::vector<std::set<NodeId>>& sets, NodeId u, NodeId v) {
  std::size_t c = 0;
  for (NodeId w : sets[u]) c += sets[v].count(w);
  return c;
}

constexpr std::int64_t kNoPath = -1;

// Plain single-source BFS: distances and shortest-path counts.
struct BfsResult {
  std::vector<std::int64_t> dist;
  std::vector<double> paths;
};

inline BfsResult bfs_from(const Graph& g, NodeId s) {
  BfsResult r{std::vector<std::int64_t>(g.node_count(), kNoPath), std::vector<double>(g.node_count(), 0.0)};
  std::queue<NodeId> q;
  r.dist[s] = 0;
  r.paths[s] = 1.0;
  q.push(s);
  while (!q.empty()) {
    const NodeId u = q.front();
    q.pop();
    for (NodeId w : g.neighbors(u)) {
      if (r.dist[w] == kNoPath) {
        r.dist[w] = r.dist[u] + 1;
        q.push(w);
      }
      if (r.dist[w] == r.dist[u] + 1) r.paths[w] += r.paths[u];
    }
  }
  return r;
}

// Minimum over per-source BFS runs.
inline std::vector<std::int64_t> min_of_single_sources(const Graph& g, const std::vector<NodeId>& sources) {
  std::vector<std::int64_t> best(g.node_count(), kNoPath);
  for (NodeId s : sources) {
    const auto r = bfs_from(g, s);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (r.dist[v] == kNoPath) continue;
      if (best[v] == kNoPath || r.dist[v] < best[v]) best[v] = r.dist[v];
    }
  }
  return best;
}

// Pairwise definition: for every unordered pair {s, t} and every v on some
// shortest s-t path, add sigma_sv * sigma_vt / sigma_st.
inline std::vector<double> brute_betweenness(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<BfsResult> from(n);
  for (NodeId s = 0; s < n; ++s) from[s] = bfs_from(g, s);
  std::vector<double> score(n, 0.0);
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId t = s + 1; t < n; ++t) {
      const auto d_st = from[s].dist[t];
      if (d_st == kNoPath) continue;
      for (NodeId v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        const auto d_sv = from[s].dist[v];
        const auto d_vt = from[v].dist[t];
        if (d_sv == kNoPath || d_vt == kNoPath || d_sv + d_vt != d_st) continue;
        score[v] += from[s].paths[v] * from[v].paths[t] / from[s].paths[t];
      }
    }
  }
  return score;
}

// Direct two-distribution KL(p || uniform) with p proportional to e^{i}.
inline double direct_kl(const std::vector<int>& mutual_counts) {
  const std::size_t k = mutual_counts.size();
  std::vector<double> p(k);
  double z = 0.0;
  for (std::size_t j = 0; j < k; ++j) z += p[j] = std::exp(static_cast<double>(mutual_counts[j]));
  double kl = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    const double pj = p[j] / z;
    const double qj = 1.0 / static_cast<double>(k);
    kl += pj * std::log(pj / qj);
  }
  return kl;
}

// Spearman rank correlation (average ranks for ties).
inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < idx.size();) {
      std::size_t j = i;
      while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
      for (std::size_t k = i; k <= j; ++k) r[idx[k]] = (static_cast<double>(i + j) / 2.0) + 1.0;
      i = j + 1;
    }
    return r;
  };
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += rx[i] / n;
    my += ry[i] / n;
  }
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0 || syy == 0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace tiefair::testing
