#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tiefair {

using NodeId = std::uint32_t;

/*
  Undirected simple graph over dense node indices 0..n-1.

  Adjacency lists are kept sorted so neighbor-set intersection and edge lookup
  are merge/binary-search operations. Every node carries a textual label; the
  label map is bijective.
*/
class Graph {
 public:
  Graph() = default;

  // n nodes labelled "0".."n-1", no edges.
  explicit Graph(std::size_t node_count);

  // Nodes labelled with the given (distinct) labels, no edges.
  explicit Graph(std::vector<std::string> labels);

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId v) const;
  std::size_t degree(NodeId v) const { return neighbors(v).size(); }

  bool has_edge(NodeId u, NodeId v) const;

  // Throws std::invalid_argument on self-loop or existing edge,
  // std::out_of_range on bad indices.
  void add_edge(NodeId u, NodeId v);

  const std::string& label(NodeId v) const;
  std::optional<NodeId> find_label(std::string_view label) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // Returns a description of the first violated structural invariant, if any.
  std::optional<std::string> check_invariants() const;

 private:
  void check_node(NodeId v) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_of_;
  std::size_t edge_count_ = 0;
};

// |adj(u) ∩ adj(v)|.
std::size_t mutual_friends(const Graph& g, NodeId u, NodeId v);

// Build a graph from a list of (u, v) pairs over n nodes. Pairs must be
// distinct, non-loop and in range.
Graph graph_from_edges(std::size_t node_count,
                       std::span<const std::pair<NodeId, NodeId>> edges);

// Relabel: node v of g becomes node perm[v] of the result. Labels travel
// with their node.
Graph permute(const Graph& g, std::span<const NodeId> perm);

// ---------------------------------------------------------------------------
// Edge-list ingestion

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct EdgeListOptions {
  // Characters that, when they start a line (after leading blanks), mark it
  // as a comment.
  std::string comment_prefixes = "#%";
  // Token separators besides whitespace.
  std::string extra_delimiters = ",";
};

struct EdgeListLoad {
  Graph graph;
  std::size_t records = 0;
  std::size_t duplicates_dropped = 0;
  std::size_t self_loops_dropped = 0;
};

// Labels receive dense indices in order of first appearance.
EdgeListLoad load_edge_list(std::istream& in, const EdgeListOptions& options = {});
EdgeListLoad load_edge_list_file(const std::string& path,
                                 const EdgeListOptions& options = {});

// ---------------------------------------------------------------------------
// Shortest paths

// Hop distances from a set of sources. Unreachable nodes have no value.
class DistanceField {
 public:
  DistanceField() = default;
  DistanceField(std::vector<std::uint32_t> raw, std::vector<NodeId> sources);

  std::size_t size() const noexcept { return dist_.size(); }
  bool reachable(NodeId v) const { return dist_.at(v) != kUnreachable; }
  std::optional<std::uint32_t> operator[](NodeId v) const {
    const auto d = dist_.at(v);
    if (d == kUnreachable) return std::nullopt;
    return d;
  }
  std::span<const NodeId> sources() const noexcept { return sources_; }
  std::size_t unreachable_count() const;

  bool operator==(const DistanceField&) const = default;

  // Internal encoding for algorithms in this library; never a real distance.
  static constexpr std::uint32_t kUnreachable = UINT32_MAX;

 private:
  std::vector<std::uint32_t> dist_;
  std::vector<NodeId> sources_;
};

// Breadth-first traversal from all sources at once. Throws on an empty
// source set or out-of-range source.
DistanceField multi_source_distances(const Graph& g, std::span<const NodeId> sources);

// Same contract as multi_source_distances, computed with a binary-heap
// Dijkstra over unit weights.
DistanceField dijkstra_distances(const Graph& g, std::span<const NodeId> sources);

// Number of connected components.
std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);

// ---------------------------------------------------------------------------
// Random graphs

// Uniform G(n, m): exactly m distinct edges among all node pairs.
Graph erdos_renyi(std::size_t n, std::size_t m, std::uint64_t seed);

// Preferential attachment starting from a star on m_attach + 1 nodes. Each
// arriving node links to m_attach distinct existing nodes drawn
// proportionally to degree.
Graph barabasi_albert(std::size_t n, std::size_t m_attach, std::uint64_t seed);

}  // namespace tiefair
