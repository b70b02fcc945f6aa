#pragma once

// Side-information graphs. Vertices are 1-based: receiver i demands message i
// and knows the messages in K_i. Edge (i, j) exists iff j is in K_i.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ldic {

using Vertex = int;
using VertexSet = std::vector<Vertex>; // sorted, duplicate-free

class SideInformationGraph {
public:
  /// side_info[i-1] is K_i. Sets are sorted and deduplicated.
  /// Throws StructuralError on self side information or out-of-range members.
  explicit SideInformationGraph(std::vector<VertexSet> side_info);

  static SideInformationGraph directed_cycle(int n);
  static SideInformationGraph empty(int n);

  int size() const noexcept { return static_cast<int>(side_info_.size()); }
  const VertexSet& side_info(Vertex i) const { return side_info_.at(static_cast<std::size_t>(i - 1)); }
  bool has_edge(Vertex from, Vertex to) const;
  std::size_t edge_count() const noexcept;

  friend bool operator==(const SideInformationGraph&, const SideInformationGraph&) = default;

private:
  std::vector<VertexSet> side_info_;
};

/// Reads the text format:
///   N=<int>
///   i: j1 j2 ...
/// '#' starts a comment, blank lines are ignored. Receivers without a line get K_i = {}.
/// Throws ParseError (carrying the line number) on malformed input.
SideInformationGraph parse_graph(std::string_view text);

/// Inverse of parse_graph; every receiver gets a line.
std::string format_graph(const SideInformationGraph& g);

struct InducedSubgraph {
  SideInformationGraph graph;
  std::vector<Vertex> original; // original[k-1] = vertex of g relabeled to k
};

/// G_S with vertices relabeled 1..|S| in ascending order of S.
InducedSubgraph induced_subgraph(const SideInformationGraph& g, const VertexSet& subset);

struct DirectedCycle {
  int length = 0;
  std::vector<Vertex> vertices; // v_1 -> v_2 -> ... -> v_len -> v_1, starting at the smallest vertex
};

/// A minimum-length directed cycle (directed girth), or nullopt for a DAG.
/// Among minimum cycles the lexicographically smallest vertex sequence is returned.
std::optional<DirectedCycle> shortest_directed_cycle(const SideInformationGraph& g);

bool is_acyclic(const SideInformationGraph& g);

/// True iff g is exactly the directed N-cycle K_i = {i+1}, K_N = {1}.
bool is_directed_cycle(const SideInformationGraph& g);

/// Vector problem of message length M seen as a scalar problem on MN symbols.
struct IndexExpansion {
  int M = 1;
  std::vector<VertexSet> demands;   // D_i, 1-based indices into [MN]
  std::vector<VertexSet> side_info; // calligraphic K_i
};

IndexExpansion expand_indices(const SideInformationGraph& g, int M);

} // namespace ldic
