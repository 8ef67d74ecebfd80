#include <fstream>
#include <set>
#include <utility>

#include "tiefair/graph.hpp"

namespace tiefair {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool is_separator(char c, const std::string& extra) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f' ||
         extra.find(c) != std::string::npos;
}

std::vector<std::string_view> tokenize(std::string_view line, const std::string& extra) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_separator(line[i], extra)) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_separator(line[i], extra)) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

EdgeListLoad load_edge_list(std::istream& in, const EdgeListOptions& options) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> index_of;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::set<std::pair<NodeId, NodeId>> seen;
  EdgeListLoad result;

  auto intern = [&](std::string_view token) {
    auto [it, inserted] = index_of.emplace(std::string(token), static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (options.comment_prefixes.find(line[first]) != std::string::npos) continue;

    const auto tokens = tokenize(line, options.extra_delimiters);
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 2 endpoint labels, found " + std::to_string(tokens.size()));
    }
    ++result.records;
    const NodeId u = intern(tokens[0]);
    const NodeId v = intern(tokens[1]);
    if (u == v) {
      ++result.self_loops_dropped;
      continue;
    }
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      ++result.duplicates_dropped;
      continue;
    }
    edges.emplace_back(u, v);
  }
  if (in.bad()) throw std::runtime_error("read error after line " + std::to_string(line_no));
  if (labels.empty()) throw ParseError(line_no, "edge list contains no edges");

  Graph g(std::move(labels));
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  result.graph = std::move(g);
  return result;
}

EdgeListLoad load_edge_list_file(const std::string& path, const EdgeListOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list '" + path + "'");
  return load_edge_list(in, options);
}

}  // namespace tiefair
