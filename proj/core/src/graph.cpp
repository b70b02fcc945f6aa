#include "ldic/graph.hpp"

#include "ldic/errors.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <sstream>

namespace ldic {

SideInformationGraph::SideInformationGraph(std::vector<VertexSet> side_info) : side_info_(std::move(side_info)) {
  const int n = size();
  for (int i = 1; i <= n; ++i) {
    VertexSet& k = side_info_[static_cast<std::size_t>(i - 1)];
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    for (Vertex j : k) {
      if (j < 1 || j > n) {
        throw StructuralError("receiver " + std::to_string(i) + " lists vertex " + std::to_string(j) +
                              " outside [1.." + std::to_string(n) + "]");
      }
      if (j == i) {
        throw StructuralError("receiver " + std::to_string(i) + " lists its own demand as side information");
      }
    }
  }
}

SideInformationGraph SideInformationGraph::directed_cycle(int n) {
  std::vector<VertexSet> k(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    k[static_cast<std::size_t>(i - 1)] = {i == n ? 1 : i + 1};
  }
  return SideInformationGraph(std::move(k));
}

SideInformationGraph SideInformationGraph::empty(int n) {
  return SideInformationGraph(std::vector<VertexSet>(static_cast<std::size_t>(n)));
}

bool SideInformationGraph::has_edge(Vertex from, Vertex to) const {
  const VertexSet& k = side_info(from);
  return std::binary_search(k.begin(), k.end(), to);
}

std::size_t SideInformationGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const VertexSet& k : side_info_) {
    total += k.size();
  }
  return total;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) {
    s.remove_prefix(1);
  }
  while (!s.empty() && is_space(s.back())) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_int(std::string_view token, std::size_t line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    throw ParseError("expected an integer, got '" + std::string(token) + "'", line);
  }
  return v;
}

} // namespace

SideInformationGraph parse_graph(std::string_view text) {
  std::optional<int> n;
  std::vector<VertexSet> side_info;
  std::vector<bool> declared;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) {
        break;
      }
      continue;
    }

    if (!n) {
      if (line.substr(0, 2) != "N=") {
        throw ParseError("first line must be 'N=<int>'", line_no);
      }
      n = parse_int(trim(line.substr(2)), line_no);
      if (*n < 1) {
        throw ParseError("N must be positive", line_no);
      }
      side_info.assign(static_cast<std::size_t>(*n), {});
      declared.assign(static_cast<std::size_t>(*n), false);
      continue;
    }

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected 'i: j1 j2 ...'", line_no);
    }
    const int i = parse_int(trim(line.substr(0, colon)), line_no);
    if (i < 1 || i > *n) {
      throw ParseError("receiver " + std::to_string(i) + " outside [1.." + std::to_string(*n) + "]", line_no);
    }
    const auto idx = static_cast<std::size_t>(i - 1);
    if (declared[idx]) {
      throw ParseError("receiver " + std::to_string(i) + " declared twice", line_no);
    }
    declared[idx] = true;

    std::string_view rest = line.substr(colon + 1);
    while (true) {
      rest = trim(rest);
      if (rest.empty()) {
        break;
      }
      const auto sep = rest.find_first_of(" \t");
      const std::string_view token = rest.substr(0, sep);
      rest = sep == std::string_view::npos ? std::string_view{} : rest.substr(sep);
      const int j = parse_int(token, line_no);
      if (j == i) {
        throw ParseError("self-loop: receiver " + std::to_string(i) + " lists itself", line_no);
      }
      if (j < 1 || j > *n) {
        throw ParseError("vertex " + std::to_string(j) + " outside [1.." + std::to_string(*n) + "]", line_no);
      }
      VertexSet& k = side_info[idx];
      if (std::find(k.begin(), k.end(), j) != k.end()) {
        throw ParseError("vertex " + std::to_string(j) + " listed twice for receiver " + std::to_string(i),
                         line_no);
      }
      k.push_back(j);
    }

    if (end == text.size()) {
      break;
    }
  }

  if (!n) {
    throw ParseError("missing 'N=<int>' header");
  }
  return SideInformationGraph(std::move(side_info));
}

std::string format_graph(const SideInformationGraph& g) {
  std::ostringstream out;
  out << "N=" << g.size() << '\n';
  for (Vertex i = 1; i <= g.size(); ++i) {
    out << i << ':';
    for (Vertex j : g.side_info(i)) {
      out << ' ' << j;
    }
    out << '\n';
  }
  return out.str();
}

InducedSubgraph induced_subgraph(const SideInformationGraph& g, const VertexSet& subset) {
  if (subset.empty()) {
    throw StructuralError("induced subgraph needs a nonempty vertex set");
  }
  VertexSet s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (Vertex v : s) {
    if (v < 1 || v > g.size()) {
      throw StructuralError("vertex " + std::to_string(v) + " outside [1.." + std::to_string(g.size()) + "]");
    }
  }

  std::vector<int> relabel(static_cast<std::size_t>(g.size()) + 1, 0);
  for (std::size_t k = 0; k < s.size(); ++k) {
    relabel[static_cast<std::size_t>(s[k])] = static_cast<int>(k) + 1;
  }
  std::vector<VertexSet> side_info(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    for (Vertex j : g.side_info(s[k])) {
      if (const int r = relabel[static_cast<std::size_t>(j)]; r != 0) {
        side_info[k].push_back(r);
      }
    }
  }
  return InducedSubgraph{SideInformationGraph(std::move(side_info)), std::move(s)};
}

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

// Shortest distance from every vertex v >= floor to target, walking edges forward,
// using only vertices >= floor. Index 0 unused.
std::vector<int> distances_to(const SideInformationGraph& g, Vertex target, Vertex floor) {
  const int n = g.size();
  std::vector<VertexSet> reverse(static_cast<std::size_t>(n) + 1);
  for (Vertex v = floor; v <= n; ++v) {
    for (Vertex w : g.side_info(v)) {
      if (w >= floor) {
        reverse[static_cast<std::size_t>(w)].push_back(v);
      }
    }
  }
  std::vector<int> dist(static_cast<std::size_t>(n) + 1, kUnreached);
  dist[static_cast<std::size_t>(target)] = 0;
  std::deque<Vertex> queue{target};
  while (!queue.empty()) {
    const Vertex w = queue.front();
    queue.pop_front();
    for (Vertex v : reverse[static_cast<std::size_t>(w)]) {
      if (dist[static_cast<std::size_t>(v)] == kUnreached) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(w)] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

} // namespace

std::optional<DirectedCycle> shortest_directed_cycle(const SideInformationGraph& g) {
  const int n = g.size();

  // Girth: BFS from every vertex.
  int girth = kUnreached;
  for (Vertex s = 1; s <= n; ++s) {
    const std::vector<int> dist = distances_to(g, s, 1);
    for (Vertex w : g.side_info(s)) {
      if (dist[static_cast<std::size_t>(w)] != kUnreached) {
        girth = std::min(girth, dist[static_cast<std::size_t>(w)] + 1);
      }
    }
  }
  if (girth == kUnreached) {
    return std::nullopt;
  }

  // Lexicographically smallest cycle: smallest start vertex, then greedy smallest successor.
  for (Vertex s = 1; s <= n; ++s) {
    const std::vector<int> dist = distances_to(g, s, s);
    bool through_s = false;
    for (Vertex w : g.side_info(s)) {
      if (w > s && dist[static_cast<std::size_t>(w)] == girth - 1) {
        through_s = true;
      }
    }
    if (!through_s) {
      continue;
    }
    DirectedCycle cycle{girth, {s}};
    Vertex current = s;
    for (int remaining = girth - 1; remaining > 0; --remaining) {
      for (Vertex w : g.side_info(current)) {
        if (w > s && dist[static_cast<std::size_t>(w)] == remaining) {
          cycle.vertices.push_back(w);
          current = w;
          break;
        }
      }
    }
    return cycle;
  }
  return std::nullopt; // unreachable: a girth implies some cycle
}

bool is_acyclic(const SideInformationGraph& g) {
  const int n = g.size();
  std::vector<int> indegree(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    for (Vertex w : g.side_info(v)) {
      ++indegree[static_cast<std::size_t>(w)];
    }
  }
  std::vector<Vertex> ready;
  for (Vertex v = 1; v <= n; ++v) {
    if (indegree[static_cast<std::size_t>(v)] == 0) {
      ready.push_back(v);
    }
  }
  int removed = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    for (Vertex w : g.side_info(v)) {
      if (--indegree[static_cast<std::size_t>(w)] == 0) {
        ready.push_back(w);
      }
    }
  }
  return removed == n;
}

bool is_directed_cycle(const SideInformationGraph& g) {
  return g.size() >= 2 && g == SideInformationGraph::directed_cycle(g.size());
}

IndexExpansion expand_indices(const SideInformationGraph& g, int M) {
  if (M < 1) {
    throw StructuralError("message length M must be >= 1");
  }
  IndexExpansion out;
  out.M = M;
  const int n = g.size();
  out.demands.resize(static_cast<std::size_t>(n));
  out.side_info.resize(static_cast<std::size_t>(n));
  for (Vertex i = 1; i <= n; ++i) {
    VertexSet& d = out.demands[static_cast<std::size_t>(i - 1)];
    for (int m = 1; m <= M; ++m) {
      d.push_back((i - 1) * M + m);
    }
    VertexSet& k = out.side_info[static_cast<std::size_t>(i - 1)];
    for (Vertex j : g.side_info(i)) {
      for (int m = 1; m <= M; ++m) {
        k.push_back((j - 1) * M + m);
      }
    }
  }
  return out;
}

} // namespace ldic
