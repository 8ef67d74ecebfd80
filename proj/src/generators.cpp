#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "tiefair/graph.hpp"
#include "tiefair/random.hpp"

namespace tiefair {

namespace {

// Inverse of the row-major enumeration of pairs (i, j), i < j.
std::pair<NodeId, NodeId> pair_from_index(std::uint64_t index, std::uint64_t n) {
  // Row i holds n-1-i pairs and starts at i*(2n-i-1)/2.
  const double nd = static_cast<double>(n);
  const double disc = (2.0 * nd - 1.0) * (2.0 * nd - 1.0) - 8.0 * static_cast<double>(index);
  auto i = static_cast<std::uint64_t>(std::floor(((2.0 * nd - 1.0) - std::sqrt(std::max(disc, 0.0))) / 2.0));
  auto row_start = [n](std::uint64_t r) { return r * (2 * n - r - 1) / 2; };
  while (i > 0 && row_start(i) > index) --i;
  while (row_start(i + 1) <= index) ++i;
  const std::uint64_t j = index - row_start(i) + i + 1;
  return {static_cast<NodeId>(i), static_cast<NodeId>(j)};
}

}  // namespace

Graph erdos_renyi(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  if (m > pairs) {
    throw std::invalid_argument("erdos_renyi: m=" + std::to_string(m) + " exceeds n(n-1)/2=" +
                                std::to_string(pairs));
  }
  Rng rng(seed);
  // Floyd's subset sampling over pair indices: uniform m-subset of [0, pairs).
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  std::vector<std::uint64_t> order;
  order.reserve(m);
  for (std::uint64_t j = pairs - m; j < pairs; ++j) {
    const std::uint64_t t = uniform_below(rng, j + 1);
    const std::uint64_t pick = chosen.insert(t).second ? t : j;
    if (pick == j) chosen.insert(j);
    order.push_back(pick);
  }
  std::sort(order.begin(), order.end());
  Graph g(n);
  for (std::uint64_t index : order) {
    const auto [u, v] = pair_from_index(index, n);
    g.add_edge(u, v);
  }
  return g;
}

Graph barabasi_albert(std::size_t n, std::size_t m_attach, std::uint64_t seed) {
  if (m_attach < 1 || m_attach >= n) {
    throw std::invalid_argument("barabasi_albert: need 1 <= m_attach < n (n=" + std::to_string(n) +
                                ", m_attach=" + std::to_string(m_attach) + ")");
  }
  Rng rng(seed);
  Graph g(n);
  // Every edge endpoint appears once here, so a uniform pick is
  // degree-proportional.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * m_attach * n);
  for (NodeId leaf = 1; leaf <= m_attach; ++leaf) {
    g.add_edge(0, leaf);
    endpoints.push_back(0);
    endpoints.push_back(leaf);
  }
  std::vector<NodeId> targets;
  targets.reserve(m_attach);
  for (auto v = static_cast<NodeId>(m_attach + 1); v < n; ++v) {
    targets.clear();
    while (targets.size() < m_attach) {
      const NodeId t = endpoints[uniform_below(rng, endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (NodeId t : targets) {
      g.add_edge(v, t);
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }
  return g;
}

}  // namespace tiefair
