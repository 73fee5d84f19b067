#include "mmatch/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "mmatch/errors.hpp"

namespace mmatch {

VertexSet::VertexSet(int universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {
  if (universe < 0) throw InputError("negative vertex set universe");
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members)
    : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  VertexSet s(universe);
  for (int v = 0; v < universe && v < 64; ++v)
    if (mask >> v & 1U) s.insert(v);
  return s;
}

bool VertexSet::contains(int v) const {
  if (v < 0 || v >= universe_) return false;
  return words_[v / 64] >> (v % 64) & 1U;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= universe_)
    throw InputError("vertex " + std::to_string(v) + " outside set universe");
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= universe_) return;
  words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

int VertexSet::count() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

std::uint64_t VertexSet::mask() const {
  return words_.empty() ? 0 : words_.front();
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw InputError("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("vertex index out of range");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adjacency_.assign(n, {});
  masks_.assign(n, 0);
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    if (n <= 64) {
      masks_[u] |= std::uint64_t{1} << v;
      masks_[v] |= std::uint64_t{1} << u;
    }
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view token, int line_no) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw InputError("line " + std::to_string(line_no) +
                     ": unparsable token '" + std::string(token) + "'");
  return value;
}

[[noreturn]] void line_error(int line_no, const std::string& what) {
  throw InputError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int n = -1;
  std::vector<Graph::Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const auto line = trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = split_tokens(line);
    if (n < 0) {
      if (tokens.size() != 1) line_error(line_no, "expected vertex count");
      n = parse_int(tokens[0], line_no);
      if (n < 0) line_error(line_no, "negative vertex count");
      continue;
    }
    if (tokens.size() != 2) line_error(line_no, "expected \"u v\"");
    const int u = parse_int(tokens[0], line_no);
    const int v = parse_int(tokens[1], line_no);
    if (u < 0 || v < 0 || u >= n || v >= n)
      line_error(line_no, "vertex index out of range");
    if (u == v) line_error(line_no, "self-loop");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw InputError("missing vertex count");
  return Graph(n, std::move(edges));
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph graph6_decode(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw InputError("graph6: empty input");
  for (unsigned char ch : text)
    if (ch < 63 || ch > 126)
      throw InputError("graph6: byte " + std::to_string(ch) +
                       " outside [63, 126]");
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > 62) throw InputError("graph6: only n <= 62 is supported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() - 1 < groups) throw InputError("graph6: truncated bit stream");
  if (text.size() - 1 > groups) throw InputError("graph6: trailing bytes");

  std::vector<Graph::Edge> edges;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int chunk = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if (chunk >> (5 - k % 6) & 1) edges.emplace_back(u, v);
    }
  }
  for (; k < groups * 6; ++k) {
    const int chunk = static_cast<unsigned char>(text[1 + k / 6]) - 63;
    if (chunk >> (5 - k % 6) & 1)
      throw InputError("graph6: nonzero padding bits");
  }
  return Graph(n, std::move(edges));
}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw InputError("graph6: only n <= 62 is supported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::string out(1 + (bits + 5) / 6, '\0');
  out[0] = static_cast<char>(63 + n);
  std::vector<int> chunks((bits + 5) / 6, 0);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if (g.has_edge(u, v)) chunks[k / 6] |= 1 << (5 - k % 6);
  for (std::size_t i = 0; i < chunks.size(); ++i)
    out[1 + i] = static_cast<char>(63 + chunks[i]);
  return out;
}

Graph thorn(const Graph& g) {
  const int n = g.order();
  std::vector<Graph::Edge> edges = g.edges();
  edges.reserve(edges.size() + n);
  for (int v = 0; v < n; ++v) edges.emplace_back(v, n + v);
  return Graph(2 * n, std::move(edges));
}

InducedSubgraph remove_vertices(const Graph& g, const VertexSet& removed) {
  std::vector<int> index(g.order(), -1);
  InducedSubgraph out;
  for (int v = 0; v < g.order(); ++v) {
    if (removed.contains(v)) continue;
    index[v] = static_cast<int>(out.original.size());
    out.original.push_back(v);
  }
  std::vector<Graph::Edge> edges;
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  out.graph = Graph(static_cast<int>(out.original.size()), std::move(edges));
  return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  return std::none_of(g.edges().begin(), g.edges().end(), [&](const auto& e) {
    return s.contains(e.first) && s.contains(e.second);
  });
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.order();
}

}  // namespace mmatch
