#include "transit/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "transit/errors.hpp"

namespace transit {

Graph::Graph(int order) : order_(order) {
  if (order < 1 || order > kMaxOrder) {
    throw DomainError("graph order must be in 1.." + std::to_string(kMaxOrder) +
                      ", got " + std::to_string(order));
  }
  adj_.assign(static_cast<std::size_t>(order) * kWordsPerRow, 0);
}

Graph::Graph(int order, const std::vector<std::pair<int, int>>& edges) : Graph(order) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order_) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for order " +
                      std::to_string(order_));
  }
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (std::uint64_t word : adj_) twice += std::popcount(word);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u) * kWordsPerRow + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  adj_[static_cast<std::size_t>(v) * kWordsPerRow + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < kWordsPerRow; ++w) {
    d += std::popcount(adj_[static_cast<std::size_t>(v) * kWordsPerRow + w]);
  }
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order_; ++u) {
    for_each_neighbor(u, [&](int v) {
      if (v > u) out.emplace_back(u, v);
    });
  }
  return out;
}

Graph Graph::without_vertex(int v) const {
  check_vertex(v);
  if (order_ == 1) throw DomainError("cannot remove the only vertex");
  Graph out(order_ - 1);
  for (int u = 0; u < order_; ++u) {
    if (u == v) continue;
    const int uu = u < v ? u : u - 1;
    for_each_neighbor(u, [&](int w) {
      if (w == v || w <= u) return;
      out.add_edge(uu, w < v ? w : w - 1);
    });
  }
  return out;
}

namespace {

constexpr int kGraph6Offset = 63;
constexpr int kGraph6MaxOrder = 62;

}  // namespace

Graph parse_graph6(std::string_view text) {
  using Kind = Graph6ParseError::Kind;
  if (text.empty()) throw Graph6ParseError(Kind::kEmptyInput, "empty graph6 string");

  const unsigned char header = static_cast<unsigned char>(text[0]);
  if (header < kGraph6Offset || header > 126) {
    throw Graph6ParseError(Kind::kBadCharacter,
                           "graph6 header byte " + std::to_string(header) + " out of range");
  }
  if (header == 126) {
    throw Graph6ParseError(Kind::kUnsupportedHeader,
                           "multi-byte graph6 order header not supported (order > 62)");
  }
  const int n = header - kGraph6Offset;
  if (n == 0) {
    throw Graph6ParseError(Kind::kUnsupportedHeader, "graph6 order 0 not supported");
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  const std::size_t have = text.size() - 1;
  if (have < need) {
    throw Graph6ParseError(Kind::kTruncated, "graph6 body too short: need " +
                                                 std::to_string(need) + " characters, got " +
                                                 std::to_string(have));
  }
  if (have > need) {
    throw Graph6ParseError(Kind::kTrailingGarbage,
                           "graph6 body too long: " + std::to_string(have - need) +
                               " extra character(s)");
  }

  Graph g(n);
  // Upper-triangle bits in column-major order: (0,1),(0,2),(1,2),(0,3),...
  int row = 0, col = 1;
  std::size_t pos = 0;
  for (std::size_t k = 0; k < need; ++k) {
    const unsigned char c = static_cast<unsigned char>(text[1 + k]);
    if (c < kGraph6Offset || c > 126) {
      throw Graph6ParseError(Kind::kBadCharacter,
                             "graph6 body byte " + std::to_string(c) + " out of range");
    }
    const int group = c - kGraph6Offset;
    for (int b = 5; b >= 0; --b, ++pos) {
      const bool set = (group >> b) & 1;
      if (pos >= bits) {
        if (set) {
          throw Graph6ParseError(Kind::kBadPadding, "nonzero padding bit in graph6 body");
        }
        continue;
      }
      if (set) g.add_edge(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw UnsupportedOrderError("graph6 encoding supports order <= 62, got " +
                                std::to_string(n));
  }
  std::string out;
  out += static_cast<char>(kGraph6Offset + n);
  int group = 0;
  int used = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++used == 6) {
        out += static_cast<char>(kGraph6Offset + group);
        group = 0;
        used = 0;
      }
    }
  }
  if (used > 0) {
    group <<= (6 - used);  // zero padding
    out += static_cast<char>(kGraph6Offset + group);
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  const int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::array<std::uint64_t, Graph::kWordsPerRow> visited{}, frontier{}, next{};
  visited[source >> 6] = std::uint64_t{1} << (source & 63);
  frontier = visited;
  int depth = 0;
  bool more = true;
  while (more) {
    next.fill(0);
    for (int w = 0; w < Graph::kWordsPerRow; ++w) {
      std::uint64_t f = frontier[w];
      while (f) {
        const int v = 64 * w + std::countr_zero(f);
        f &= f - 1;
        dist[v] = depth;
        for (int x = 0; x < Graph::kWordsPerRow; ++x) next[x] |= g.neighbor_word(v, x);
      }
    }
    more = false;
    for (int w = 0; w < Graph::kWordsPerRow; ++w) {
      frontier[w] = next[w] & ~visited[w];
      visited[w] |= frontier[w];
      more = more || frontier[w] != 0;
    }
    ++depth;
  }
  return dist;
}

bool is_connected(const Graph& g) {
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

DistanceMatrix::DistanceMatrix(int order, std::vector<int> entries)
    : order_(order), entries_(std::move(entries)) {}

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<int> entries(static_cast<std::size_t>(n) * n, 0);
  for (int v = 0; v < n; ++v) {
    const auto dist = bfs_distances(g, v);
    for (int u = 0; u < n; ++u) {
      if (dist[u] < 0) {
        throw NotConnectedError("distance matrix requires a connected graph");
      }
      entries[static_cast<std::size_t>(v) * n + u] = dist[u];
    }
  }
  return DistanceMatrix(n, std::move(entries));
}

TransmissionProfile transmission_profile(const DistanceMatrix& d) {
  const int n = d.order();
  TransmissionProfile p;
  p.transmissions.resize(static_cast<std::size_t>(n));
  long long total = 0;
  for (int i = 0; i < n; ++i) {
    int row = 0;
    for (int j = 0; j < n; ++j) row += d.at(i, j);
    p.transmissions[i] = row;
    total += row;
  }
  p.dmax = *std::max_element(p.transmissions.begin(), p.transmissions.end());
  p.dmin = *std::min_element(p.transmissions.begin(), p.transmissions.end());
  p.wiener = total / 2;
  p.gap = static_cast<long long>(n) * p.dmax - total;
  for (int i = 0; i < n; ++i) {
    if (p.transmissions[i] == p.dmax) p.argmax.push_back(i);
  }
  return p;
}

bool is_transmission_regular(const TransmissionProfile& p) { return p.gap == 0; }

}  // namespace transit
