#include "transit/families.hpp"

#include <algorithm>
#include <string>

#include "transit/errors.hpp"

namespace transit {

Graph star(int n) {
  if (n < 2) throw DomainError("star requires n >= 2, got " + std::to_string(n));
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) throw DomainError("complete multipartite graph needs at least one part");
  int n = 0;
  for (int p : parts) {
    if (p <= 0) throw DomainError("part sizes must be positive, got " + std::to_string(p));
    n += p;
  }
  Graph g(n);
  int offset = 0;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    int next = offset + parts[a];
    for (int u = offset; u < next; ++u) {
      for (int v = next; v < n; ++v) g.add_edge(u, v);
    }
    offset = next;
  }
  return g;
}

Graph cocktail_apex(int n) {
  if (n < 3 || n % 2 == 0) {
    throw DomainError("cocktail apex graph requires odd n >= 3, got " + std::to_string(n));
  }
  std::vector<int> parts{1};
  parts.insert(parts.end(), static_cast<std::size_t>((n - 1) / 2), 2);
  return complete_multipartite(parts);
}

Graph dvdr_join(const Graph& h) {
  const int m = h.order();
  const int r = h.degree(0);
  for (int v = 1; v < m; ++v) {
    if (h.degree(v) != r) {
      throw DomainError("dvdr join requires a regular graph; degrees " + std::to_string(r) +
                        " and " + std::to_string(h.degree(v)) + " both present");
    }
  }
  Graph g(m + 1);
  for (int v = 1; v <= m; ++v) g.add_edge(0, v);
  for (const auto& [u, v] : h.edges()) g.add_edge(u + 1, v + 1);
  return g;
}

std::optional<DvdrWitness> is_dvdr(const Graph& g) {
  const int n = g.order();
  if (n == 1) return DvdrWitness{0, 0};
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != n - 1) continue;
    // Every other vertex is adjacent to v, so its degree in g - v drops by 1.
    int common = -1;
    bool regular = true;
    for (int u = 0; u < n && regular; ++u) {
      if (u == v) continue;
      if (common < 0) {
        common = g.degree(u);
      } else if (g.degree(u) != common) {
        regular = false;
      }
    }
    if (regular) return DvdrWitness{v, common - 1};
  }
  return std::nullopt;
}

namespace {

// Partitions of total into parts >= 3, descending lexicographic order.
void cycle_partitions(int total, int max_part, std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(total, max_part); part >= 3; --part) {
    if (total - part != 0 && total - part < 3) continue;
    current.push_back(part);
    cycle_partitions(total - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Graph> extremal_even_family(int n) {
  if (n < 4 || n % 2 != 0) {
    throw DomainError("extremal even family requires even n >= 4, got " + std::to_string(n));
  }
  const int m = n - 1;
  std::vector<std::vector<int>> partitions;
  std::vector<int> scratch;
  cycle_partitions(m, m, scratch, partitions);

  std::vector<Graph> out;
  out.reserve(partitions.size());
  for (const auto& lengths : partitions) {
    // Disjoint cycles on vertices 1..n-1, then complement within that set.
    Graph cycles(n);
    int base = 1;
    for (int len : lengths) {
      for (int k = 0; k < len; ++k) cycles.add_edge(base + k, base + (k + 1) % len);
      base += len;
    }
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    for (int u = 1; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!cycles.adjacent(u, v)) g.add_edge(u, v);
      }
    }
    out.push_back(g);
  }
  return out;
}

}  // namespace transit
