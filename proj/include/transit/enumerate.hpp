#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "transit/graph.hpp"

namespace transit {

/// Labeling-invariant representative of an isomorphism class.
///
/// Two graphs compare equal here exactly when they are isomorphic. Bits hold
/// the upper triangle of the adjacency matrix under the canonical order,
/// column-major, packed most-significant first (at most 120 bits for the
/// order cap of 16).
struct CanonicalForm {
  int order = 0;
  std::array<std::uint64_t, 2> bits{};

  auto operator<=>(const CanonicalForm&) const = default;
  std::string hex() const;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(f.order) * 0x9e3779b97f4a7c15ull;
    h ^= f.bits[0] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= f.bits[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

inline constexpr int kCanonicalOrderCap = 16;

/// Canonical labeling by iterated color refinement plus backtracking over
/// admissible orders, pruned with discovered automorphisms. Order <= 16.
CanonicalForm canonical_form(const Graph& g);

/// One representative per isomorphism class of connected simple graphs on n
/// vertices, in a deterministic order. Default cap n <= 9; n = 10 opt-in.
std::vector<Graph> connected_graphs(int n, bool allow_order_ten = false);

/// One representative per isomorphism class of free trees on n vertices,
/// n <= 18, deterministic order.
std::vector<Graph> free_trees(int n);

enum class StreamErrorPolicy { kSkip, kAbort };

struct StreamDiagnostic {
  std::size_t line = 0;  // 1-based
  std::string message;
};

/// Line-by-line text source; concrete implementations wrap std::istream or a
/// gzip-compressed file.
class LineSource {
 public:
  virtual ~LineSource() = default;
  virtual std::optional<std::string> next_line() = 0;
};

class IstreamLineSource final : public LineSource {
 public:
  explicit IstreamLineSource(std::istream& in) : in_(in) {}
  std::optional<std::string> next_line() override;

 private:
  std::istream& in_;
};

class GzipLineSource final : public LineSource {
 public:
  explicit GzipLineSource(const std::string& path);
  ~GzipLineSource() override;
  GzipLineSource(const GzipLineSource&) = delete;
  GzipLineSource& operator=(const GzipLineSource&) = delete;
  std::optional<std::string> next_line() override;

 private:
  void* handle_ = nullptr;
};

/// Open a path as a line source: "-" reads stdin, "*.gz" inflates with zlib,
/// anything else is a plain text file.
std::unique_ptr<LineSource> open_line_source(const std::string& path);

/// Lazy graph6 stream decoder. Under kSkip, malformed lines become
/// diagnostics and decoding continues; under kAbort the first malformed line
/// throws StreamError with its line number. Blank lines are ignored.
class Graph6Reader {
 public:
  Graph6Reader(LineSource& source, StreamErrorPolicy policy = StreamErrorPolicy::kAbort)
      : source_(source), policy_(policy) {}

  std::optional<Graph> next();
  const std::vector<StreamDiagnostic>& diagnostics() const noexcept { return diagnostics_; }
  std::size_t lines_read() const noexcept { return line_; }

 private:
  LineSource& source_;
  StreamErrorPolicy policy_;
  std::size_t line_ = 0;
  std::vector<StreamDiagnostic> diagnostics_;
};

}  // namespace transit
