#include "transit/enumerate.hpp"

#include <zlib.h>

#include <algorithm>
#include <bit>
#include <fstream>
#include <iostream>
#include <numeric>
#include <unordered_set>
#include <utility>

#include "transit/errors.hpp"

namespace transit {

namespace {

// ---------------------------------------------------------------------------
// Canonical labeling
// ---------------------------------------------------------------------------

using Bits = std::array<std::uint64_t, 2>;

// Triangle bit p (column-major order) lives at word p/64, bit 63-(p%64), so
// lexicographic comparison of words matches lexicographic bit order.
Bits pack_triangle(const Graph& g, const std::vector<int>& order) {
  Bits bits{0, 0};
  std::size_t p = 0;
  const int n = g.order();
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++p) {
      if (g.adjacent(order[row], order[col])) {
        bits[p >> 6] |= std::uint64_t{1} << (63 - (p & 63));
      }
    }
  }
  return bits;
}

// Reassign colors as dense ranks of (color, sorted neighbor colors)
// signatures until the class count stops growing. Signatures depend only on
// the current coloring and adjacency, never on vertex labels, so the refined
// class order is labeling-invariant.
void refine_colors(const Graph& g, std::vector<int>& color) {
  const int n = g.order();
  std::vector<std::vector<int>> keys(n);
  int classes = 1 + *std::max_element(color.begin(), color.end());
  for (;;) {
    for (int v = 0; v < n; ++v) {
      auto& key = keys[v];
      key.clear();
      key.push_back(color[v]);
      g.for_each_neighbor(v, [&](int u) { key.push_back(color[u]); });
      std::sort(key.begin() + 1, key.end());
    }
    std::vector<const std::vector<int>*> sorted;
    sorted.reserve(n);
    for (int v = 0; v < n; ++v) sorted.push_back(&keys[v]);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto* a, const auto* b) { return *a < *b; });
    sorted.erase(std::unique(sorted.begin(), sorted.end(),
                             [](const auto* a, const auto* b) { return *a == *b; }),
                 sorted.end());
    for (int v = 0; v < n; ++v) {
      const auto it = std::lower_bound(sorted.begin(), sorted.end(), &keys[v],
                                       [](const auto* a, const auto* b) { return *a < *b; });
      color[v] = static_cast<int>(it - sorted.begin());
    }
    const int refined = static_cast<int>(sorted.size());
    if (refined == classes) return;
    classes = refined;
  }
}

std::vector<int> initial_colors(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> keys(n);
  for (int v = 0; v < n; ++v) {
    auto& key = keys[v];
    key.push_back(g.degree(v));
    std::vector<int> nbr_degrees;
    g.for_each_neighbor(v, [&](int u) { nbr_degrees.push_back(g.degree(u)); });
    std::sort(nbr_degrees.begin(), nbr_degrees.end());
    key.insert(key.end(), nbr_degrees.begin(), nbr_degrees.end());
    auto dist = bfs_distances(g, v);
    for (int& d : dist) {
      if (d < 0) d = n;  // unreachable sentinel, valid for disconnected graphs
    }
    std::sort(dist.begin(), dist.end());
    key.insert(key.end(), dist.begin(), dist.end());
  }
  std::vector<std::vector<int>> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) {
    color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) -
                                sorted.begin());
  }
  return color;
}

struct CanonicalData {
  CanonicalForm form;
  std::vector<int> order;  // position -> vertex
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalData run() {
    std::vector<int> color = initial_colors(g_);
    refine_colors(g_, color);
    std::vector<int> prefix;
    descend(color, prefix);
    return CanonicalData{CanonicalForm{n_, best_bits_}, best_order_};
  }

 private:
  static constexpr std::size_t kMaxGenerators = 128;

  bool discrete(const std::vector<int>& color) const {
    // Colors are dense ranks, so n distinct values means all singletons.
    return *std::max_element(color.begin(), color.end()) == n_ - 1;
  }

  void descend(const std::vector<int>& color, std::vector<int>& prefix) {
    if (discrete(color)) {
      record_leaf(color);
      return;
    }
    // Target cell: first color class with at least two members.
    int target = -1;
    std::vector<int> members;
    for (int c = 0; target < 0; ++c) {
      members.clear();
      for (int v = 0; v < n_; ++v) {
        if (color[v] == c) members.push_back(v);
      }
      if (members.size() >= 2) target = c;
    }

    std::vector<int> tried;
    for (int v : members) {
      if (pruned_by_automorphism(v, tried, prefix)) continue;
      tried.push_back(v);
      std::vector<int> next(color);
      // Individualize: v keeps the class color, former classmates shift up.
      for (int u = 0; u < n_; ++u) {
        if (next[u] > target || (next[u] == target && u != v)) ++next[u];
      }
      refine_colors(g_, next);
      prefix.push_back(v);
      descend(next, prefix);
      prefix.pop_back();
    }
  }

  // A generator that fixes the whole prefix pointwise maps the subtree of an
  // already-explored candidate onto the subtree of v, leaf for leaf, so v
  // cannot improve on the best string.
  bool pruned_by_automorphism(int v, const std::vector<int>& tried,
                              const std::vector<int>& prefix) {
    if (tried.empty() || generators_.empty()) return false;
    std::vector<int> root(n_);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&root](int x) {
      while (root[x] != x) {
        root[x] = root[root[x]];
        x = root[x];
      }
      return x;
    };
    for (const auto& gen : generators_) {
      bool fixes_prefix = true;
      for (int p : prefix) {
        if (gen[p] != p) {
          fixes_prefix = false;
          break;
        }
      }
      if (!fixes_prefix) continue;
      for (int x = 0; x < n_; ++x) {
        int a = find(x), b = find(gen[x]);
        if (a != b) root[a] = b;
      }
    }
    const int rv = find(v);
    return std::any_of(tried.begin(), tried.end(), [&](int u) { return find(u) == rv; });
  }

  void record_leaf(const std::vector<int>& color) {
    // Discrete coloring: color value is the canonical position.
    std::vector<int> order(n_);
    for (int v = 0; v < n_; ++v) order[color[v]] = v;
    const Bits bits = pack_triangle(g_, order);
    if (!have_best_ || bits < best_bits_) {
      best_bits_ = bits;
      best_order_ = order;
      have_best_ = true;
      return;
    }
    if (bits != best_bits_ || generators_.size() >= kMaxGenerators) return;
    // Equal leaves compose to an automorphism: map this order onto the best.
    std::vector<int> gen(n_);
    bool identity = true;
    for (int pos = 0; pos < n_; ++pos) {
      gen[order[pos]] = best_order_[pos];
      if (gen[order[pos]] != order[pos]) identity = false;
    }
    if (!identity && std::find(generators_.begin(), generators_.end(), gen) ==
                         generators_.end()) {
      generators_.push_back(std::move(gen));
    }
  }

  const Graph& g_;
  int n_;
  bool have_best_ = false;
  Bits best_bits_{~0ull, ~0ull};
  std::vector<int> best_order_;
  std::vector<std::vector<int>> generators_;
};

CanonicalData canonical_data(const Graph& g) {
  if (g.order() > kCanonicalOrderCap) {
    throw UnsupportedOrderError("canonical labeling supports order <= " +
                                std::to_string(kCanonicalOrderCap) + ", got " +
                                std::to_string(g.order()));
  }
  return CanonicalSearch(g).run();
}

// ---------------------------------------------------------------------------
// Connected graph generation by canonical augmentation
// ---------------------------------------------------------------------------

// Compact labeled-graph code: upper triangle of the adjacency matrix with the
// same packing as CanonicalForm, plus the parent's canonical form so the next
// level can test canonical deletions without recomputing it.
struct LevelEntry {
  Bits code;
  CanonicalForm form;
};

Graph expand_code(int n, const Bits& code) {
  Graph g(n);
  std::size_t p = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++p) {
      if ((code[p >> 6] >> (63 - (p & 63))) & 1u) g.add_edge(row, col);
    }
  }
  return g;
}

Bits labeled_code(const Graph& g) {
  std::vector<int> identity(g.order());
  std::iota(identity.begin(), identity.end(), 0);
  return pack_triangle(g, identity);
}

// All simple graphs on n vertices, one per isomorphism class. A child built
// from a parent by attaching vertex k to a neighborhood subset survives iff
// removing the child's canonically-last vertex reproduces the parent; one
// representative per child class is kept within each parent's brood.
std::vector<LevelEntry> graphs_up_to_iso(int n) {
  std::vector<LevelEntry> level;
  {
    Graph single(1);
    level.push_back({labeled_code(single), canonical_form(single)});
  }
  for (int k = 1; k < n; ++k) {
    std::vector<LevelEntry> next;
    std::unordered_set<CanonicalForm, CanonicalFormHash> brood;
    for (const auto& parent : level) {
      const Graph pg = expand_code(k, parent.code);
      Graph base(k + 1);
      for (const auto& [u, v] : pg.edges()) base.add_edge(u, v);
      brood.clear();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Graph child = base;
        std::uint64_t rest = mask;
        while (rest) {
          int u = std::countr_zero(rest);
          rest &= rest - 1;
          child.add_edge(u, k);
        }
        CanonicalData data = canonical_data(child);
        if (!brood.insert(data.form).second) continue;
        const int deleted = data.order[k];
        const bool keep = deleted == k
                              ? true
                              : canonical_form(child.without_vertex(deleted)) == parent.form;
        if (keep) next.push_back({labeled_code(child), std::move(data.form)});
      }
    }
    level = std::move(next);
  }
  return level;
}

// ---------------------------------------------------------------------------
// Free tree generation: centroid decomposition over rooted shapes
// ---------------------------------------------------------------------------

// Rooted trees are cataloged per size; children are (size, index) pairs in
// nonincreasing lexicographic order, which makes each multiset unique.
struct RootedShape {
  std::vector<std::pair<int, int>> children;
};

class RootedCatalog {
 public:
  explicit RootedCatalog(int max_size) : by_size_(max_size + 1) {
    if (max_size >= 1) by_size_[1].push_back({});
    for (int s = 2; s <= max_size; ++s) {
      std::vector<std::pair<int, int>> current;
      emit_children(s - 1, s - 1, -1, current, by_size_[s]);
    }
  }

  const std::vector<RootedShape>& of_size(int s) const { return by_size_[s]; }

  // Child sequences with sizes <= max_child summing to total; used both for
  // catalog construction and for assembling single-centroid trees.
  void emit_children(int total, int max_child, int max_index_at_max,
                     std::vector<std::pair<int, int>>& current,
                     std::vector<RootedShape>& out) const {
    if (total == 0) {
      out.push_back({current});
      return;
    }
    for (int c = std::min(total, max_child); c >= 1; --c) {
      const int hi = (c == max_child && max_index_at_max >= 0)
                         ? max_index_at_max
                         : static_cast<int>(by_size_[c].size()) - 1;
      for (int idx = hi; idx >= 0; --idx) {
        current.emplace_back(c, idx);
        emit_children(total - c, c, idx, current, out);
        current.pop_back();
      }
    }
  }

  void build_edges(const RootedShape& shape, int size_hint, int root, int& next,
                   Graph& g) const {
    (void)size_hint;
    for (const auto& [csize, cidx] : shape.children) {
      const int child_root = next++;
      g.add_edge(root, child_root);
      build_edges(by_size_[csize][cidx], csize, child_root, next, g);
    }
  }

 private:
  std::vector<std::vector<RootedShape>> by_size_;
};

}  // namespace

std::string CanonicalForm::hex() const {
  static const char* digits = "0123456789abcdef";
  const int nbits = order * (order - 1) / 2;
  const int nhex = (nbits + 3) / 4;
  std::string out = std::to_string(order) + ":";
  for (int h = 0; h < nhex; ++h) {
    const int shift = 60 - 4 * (h % 16);
    out += digits[(bits[h / 16] >> shift) & 0xF];
  }
  if (nhex == 0) out += "0";
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_data(g).form; }

std::vector<Graph> connected_graphs(int n, bool allow_order_ten) {
  if (n < 1 || n > (allow_order_ten ? 10 : 9)) {
    throw DomainError("connected graph generation capped at order 9 (10 with override), got " +
                      std::to_string(n));
  }
  std::vector<Graph> out;
  for (const auto& entry : graphs_up_to_iso(n)) {
    Graph g = expand_code(n, entry.code);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> free_trees(int n) {
  if (n < 1 || n > 18) {
    throw DomainError("free tree generation capped at order 18, got " + std::to_string(n));
  }
  std::vector<Graph> out;
  if (n == 1) {
    out.emplace_back(1);
    return out;
  }
  const RootedCatalog catalog(n / 2);

  // Single centroid: every branch has at most floor((n-1)/2) vertices.
  std::vector<RootedShape> tops;
  std::vector<std::pair<int, int>> current;
  catalog.emit_children(n - 1, (n - 1) / 2, -1, current, tops);
  for (const auto& top : tops) {
    Graph g(n);
    int next = 1;
    catalog.build_edges(top, n, 0, next, g);
    out.push_back(std::move(g));
  }

  // Two adjacent centroids: unordered pairs of rooted trees of size n/2.
  if (n % 2 == 0) {
    const auto& halves = catalog.of_size(n / 2);
    for (std::size_t i = 0; i < halves.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        Graph g(n);
        int next = 1;
        catalog.build_edges(halves[i], n / 2, 0, next, g);
        const int other_root = next++;
        g.add_edge(0, other_root);
        catalog.build_edges(halves[j], n / 2, other_root, next, g);
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// graph6 line streams
// ---------------------------------------------------------------------------

std::optional<std::string> IstreamLineSource::next_line() {
  std::string line;
  if (!std::getline(in_, line)) return std::nullopt;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

GzipLineSource::GzipLineSource(const std::string& path) {
  gzFile f = gzopen(path.c_str(), "rb");
  if (f == nullptr) throw DomainError("cannot open gzip file: " + path);
  handle_ = f;
}

GzipLineSource::~GzipLineSource() {
  if (handle_ != nullptr) gzclose(static_cast<gzFile>(handle_));
}

std::optional<std::string> GzipLineSource::next_line() {
  gzFile f = static_cast<gzFile>(handle_);
  std::string line;
  char buf[4096];
  for (;;) {
    if (gzgets(f, buf, sizeof buf) == nullptr) {
      int err = 0;
      const char* msg = gzerror(f, &err);
      if (err != Z_OK && err != Z_STREAM_END) {
        throw DomainError(std::string("gzip read error: ") + (msg ? msg : "unknown"));
      }
      if (line.empty()) return std::nullopt;
      return line;
    }
    line += buf;
    if (!line.empty() && line.back() == '\n') {
      line.pop_back();
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    // Otherwise the line was longer than the buffer; keep reading.
  }
}

std::unique_ptr<LineSource> open_line_source(const std::string& path) {
  if (path == "-") {
    return std::make_unique<IstreamLineSource>(std::cin);
  }
  if (path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0) {
    return std::make_unique<GzipLineSource>(path);
  }
  struct OwningFileSource final : LineSource {
    explicit OwningFileSource(const std::string& p) : file(p), lines(file) {
      if (!file) throw DomainError("cannot open file: " + p);
    }
    std::ifstream file;
    IstreamLineSource lines;
    std::optional<std::string> next_line() override { return lines.next_line(); }
  };
  return std::make_unique<OwningFileSource>(path);
}

std::optional<Graph> Graph6Reader::next() {
  for (;;) {
    auto line = source_.next_line();
    if (!line) return std::nullopt;
    ++line_;
    if (line->empty()) continue;
    try {
      return parse_graph6(*line);
    } catch (const Graph6ParseError& e) {
      if (policy_ == StreamErrorPolicy::kAbort) {
        throw StreamError("line " + std::to_string(line_) + ": " + e.what(), line_);
      }
      diagnostics_.push_back({line_, e.what()});
    }
  }
}

}  // namespace transit
