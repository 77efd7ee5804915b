#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace transit {

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as a fixed number of 64-bit words per vertex, which caps
/// the order at 128. Self-loops and parallel edges cannot be represented, and
/// adjacency is symmetric by construction. Instances are cheap to copy and
/// safe to share across threads once built.
class Graph {
 public:
  static constexpr int kWordsPerRow = 2;
  static constexpr int kMaxOrder = 64 * kWordsPerRow;

  explicit Graph(int order);
  Graph(int order, const std::vector<std::pair<int, int>>& edges);

  int order() const noexcept { return order_; }
  int edge_count() const noexcept;

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u) * kWordsPerRow + (v >> 6)] >> (v & 63)) & 1u;
  }

  void add_edge(int u, int v);
  int degree(int v) const;

  /// One 64-bit slice of vertex v's neighbor set (word index 0 or 1).
  std::uint64_t neighbor_word(int v, int word) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v) * kWordsPerRow + word];
  }

  template <typename Visit>
  void for_each_neighbor(int v, Visit visit) const {
    check_vertex(v);
    for (int w = 0; w < kWordsPerRow; ++w) {
      std::uint64_t rest = adj_[static_cast<std::size_t>(v) * kWordsPerRow + w];
      while (rest) {
        visit(64 * w + std::countr_zero(rest));
        rest &= rest - 1;
      }
    }
  }

  std::vector<std::pair<int, int>> edges() const;

  /// Copy with vertex v removed; labels above v shift down by one.
  Graph without_vertex(int v) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int order_;
  std::vector<std::uint64_t> adj_;  // kWordsPerRow words per vertex
};

/// All-pairs shortest-path hop counts of a connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix(int order, std::vector<int> entries);
  int order() const noexcept { return order_; }
  int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * order_ + j]; }

 private:
  int order_;
  std::vector<int> entries_;
};

/// Row-sum statistics of a distance matrix. All fields are exact integers.
struct TransmissionProfile {
  std::vector<int> transmissions;  // D_i, one per vertex
  int dmax = 0;
  int dmin = 0;
  long long wiener = 0;        // W, half the entry sum
  long long gap = 0;           // n * dmax - 2W
  std::vector<int> argmax;     // vertices attaining dmax
};

/// Decode one graph6 line (no trailing newline). Orders 1..62.
Graph parse_graph6(std::string_view text);

/// Encode as the canonical shortest graph6 string. Requires order <= 62.
std::string to_graph6(const Graph& g);

bool is_connected(const Graph& g);

/// BFS hop counts from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Requires a connected input; disconnected graphs are an error, not an
/// infinite distance.
DistanceMatrix distance_matrix(const Graph& g);

TransmissionProfile transmission_profile(const DistanceMatrix& d);

bool is_transmission_regular(const TransmissionProfile& p);

}  // namespace transit
