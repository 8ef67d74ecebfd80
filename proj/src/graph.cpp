#include "tiefair/graph.hpp"

#include <algorithm>
#include <queue>

namespace tiefair {

Graph::Graph(std::size_t node_count) : adjacency_(node_count) {
  labels_.reserve(node_count);
  index_of_.reserve(node_count);
  for (std::size_t i = 0; i < node_count; ++i) {
    labels_.push_back(std::to_string(i));
    index_of_.emplace(labels_.back(), static_cast<NodeId>(i));
  }
}

Graph::Graph(std::vector<std::string> labels)
    : adjacency_(labels.size()), labels_(std::move(labels)) {
  index_of_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_of_.emplace(labels_[i], static_cast<NodeId>(i)).second) {
      throw std::invalid_argument("duplicate node label '" + labels_[i] + "'");
    }
  }
}

void Graph::check_node(NodeId v) const {
  if (v >= adjacency_.size()) {
    throw std::out_of_range("node index " + std::to_string(v) + " out of range (n=" +
                            std::to_string(adjacency_.size()) + ")");
  }
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  check_node(v);
  return adjacency_[v];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const NodeId other = &a == &adjacency_[u] ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

void Graph::add_edge(NodeId u, NodeId v) {
  check_node(u);
  check_node(v);
  if (u == v) {
    throw std::invalid_argument("self-loop on node " + std::to_string(u));
  }
  auto& au = adjacency_[u];
  auto pos_u = std::lower_bound(au.begin(), au.end(), v);
  if (pos_u != au.end() && *pos_u == v) {
    throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") already present");
  }
  au.insert(pos_u, v);
  auto& av = adjacency_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edge_count_;
}

const std::string& Graph::label(NodeId v) const {
  check_node(v);
  return labels_[v];
}

std::optional<NodeId> Graph::find_label(std::string_view label) const {
  auto it = index_of_.find(std::string(label));
  if (it == index_of_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> Graph::check_invariants() const {
  std::size_t endpoint_total = 0;
  for (NodeId v = 0; v < adjacency_.size(); ++v) {
    const auto& nbrs = adjacency_[v];
    endpoint_total += nbrs.size();
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const NodeId u = nbrs[i];
      if (u >= adjacency_.size()) return "neighbor out of range at node " + std::to_string(v);
      if (u == v) return "self-loop at node " + std::to_string(v);
      if (i > 0 && nbrs[i - 1] >= u) {
        return "adjacency of node " + std::to_string(v) + " not strictly sorted";
      }
      const auto& back = adjacency_[u];
      if (!std::binary_search(back.begin(), back.end(), v)) {
        return "asymmetric edge " + std::to_string(v) + "->" + std::to_string(u);
      }
    }
  }
  if (endpoint_total != 2 * edge_count_) {
    return "edge_count " + std::to_string(edge_count_) + " disagrees with adjacency total " +
           std::to_string(endpoint_total);
  }
  if (labels_.size() != adjacency_.size() || index_of_.size() != labels_.size()) {
    return "label map size mismatch";
  }
  return std::nullopt;
}

std::size_t mutual_friends(const Graph& g, NodeId u, NodeId v) {
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

Graph graph_from_edges(std::size_t node_count,
                       std::span<const std::pair<NodeId, NodeId>> edges) {
  Graph g(node_count);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph permute(const Graph& g, std::span<const NodeId> perm) {
  const std::size_t n = g.node_count();
  if (perm.size() != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::string> labels(n);
  std::vector<bool> seen(n, false);
  for (NodeId v = 0; v < n; ++v) {
    if (perm[v] >= n || seen[perm[v]]) throw std::invalid_argument("not a permutation");
    seen[perm[v]] = true;
    labels[perm[v]] = g.label(v);
  }
  Graph out(std::move(labels));
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u : g.neighbors(v)) {
      if (v < u) out.add_edge(perm[v], perm[u]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

DistanceField::DistanceField(std::vector<std::uint32_t> raw, std::vector<NodeId> sources)
    : dist_(std::move(raw)), sources_(std::move(sources)) {}

std::size_t DistanceField::unreachable_count() const {
  return static_cast<std::size_t>(std::count(dist_.begin(), dist_.end(), kUnreachable));
}

namespace {

std::vector<std::uint32_t> seeded_distances(const Graph& g, std::span<const NodeId> sources) {
  if (sources.empty()) throw std::invalid_argument("source set is empty");
  std::vector<std::uint32_t> dist(g.node_count(), DistanceField::kUnreachable);
  for (NodeId s : sources) {
    if (s >= g.node_count()) {
      throw std::out_of_range("source " + std::to_string(s) + " out of range");
    }
    dist[s] = 0;
  }
  return dist;
}

}  // namespace

DistanceField multi_source_distances(const Graph& g, std::span<const NodeId> sources) {
  auto dist = seeded_distances(g, sources);
  std::vector<NodeId> frontier;
  frontier.reserve(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (dist[v] == 0) frontier.push_back(v);
  }
  // frontier doubles as the FIFO queue
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const NodeId u = frontier[head];
    for (NodeId w : g.neighbors(u)) {
      if (dist[w] == DistanceField::kUnreachable) {
        dist[w] = dist[u] + 1;
        frontier.push_back(w);
      }
    }
  }
  return {std::move(dist), std::vector<NodeId>(sources.begin(), sources.end())};
}

DistanceField dijkstra_distances(const Graph& g, std::span<const NodeId> sources) {
  auto dist = seeded_distances(g, sources);
  using Entry = std::pair<std::uint32_t, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (NodeId s : sources) heap.emplace(0, s);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (NodeId w : g.neighbors(u)) {
      const std::uint32_t candidate = d + 1;
      if (candidate < dist[w]) {
        dist[w] = candidate;
        heap.emplace(candidate, w);
      }
    }
  }
  return {std::move(dist), std::vector<NodeId>(sources.begin(), sources.end())};
}

std::size_t component_count(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack;
  std::size_t components = 0;
  for (NodeId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++components;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

}  // namespace tiefair
