#pragma once

#include <span>
#include <vector>

#include "transit/graph.hpp"

namespace transit {

/// Dense real symmetric matrix stored as its upper triangle (diagonal
/// included), so symmetry is exact by construction.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int order);

  int order() const noexcept { return order_; }
  double operator()(int i, int j) const { return upper_[index(i, j)]; }
  void set(int i, int j, double value) { upper_[index(i, j)] = value; }

  /// Maximum absolute row sum.
  double inf_norm() const;

  /// y = M x. Both spans must have length order().
  void multiply(std::span<const double> x, std::span<double> y) const;

  /// True when every entry is an exact integer.
  bool is_integral() const;

 private:
  std::size_t index(int i, int j) const {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i) * (2 * order_ - i - 1) / 2 + j;
  }

  int order_;
  std::vector<double> upper_;
};

SymmetricMatrix distance_as_matrix(const DistanceMatrix& d);

/// Distance matrix plus the diagonal of transmissions.
SymmetricMatrix distance_signless_laplacian(const DistanceMatrix& d);

struct PerronOptions {
  double tolerance = 1e-12;  // residual bound relative to max(1, inf-norm)
  int max_iterations = 0;    // 0 selects 200 * order + 10000
};

/// Perron data of a nonnegative irreducible symmetric matrix.
struct PerronResult {
  double radius = 0.0;
  std::vector<double> vector;  // unit 2-norm, all entries > 0
  double residual = 0.0;       // inf-norm of M x - radius x
  int iterations = 0;
};

/// Power iteration on M + I with the all-ones start vector. The unit shift
/// keeps the iteration primitive (the 2x2 distance matrix of K2 would
/// otherwise oscillate with period 2). Radius is the Rayleigh quotient of the
/// final iterate, shifted back.
PerronResult perron(const SymmetricMatrix& m, const PerronOptions& options = {});

/// Spectral radius and Perron vector of the distance matrix. Connected, n >= 2.
PerronResult distance_spectral_radius(const Graph& g, const PerronOptions& options = {});

/// Spectral radius and Perron vector of the distance signless Laplacian.
PerronResult dsl_spectral_radius(const Graph& g, const PerronOptions& options = {});

struct IrregularityReport {
  double sigma = 0.0;  // dmax - distance radius
  double tau = 0.0;    // 2 dmax - dsl radius
  int dmax = 0;
  int dmin = 0;
  double distance_radius = 0.0;
  double dsl_radius = 0.0;
};

IrregularityReport irregularity(const Graph& g, const PerronOptions& options = {});

using VertexPartition = std::vector<std::vector<int>>;

/// Quotient of a matrix under an equitable partition. Generally not symmetric.
struct QuotientMatrix {
  int block_count = 0;
  std::vector<double> entries;  // row-major block_count x block_count
  VertexPartition partition;

  double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * block_count + j]; }
};

/// Validates that every block of m has constant row sums under the partition
/// and returns those sums. Integer-entried matrices are checked with exact
/// integer sums; otherwise a 1e-9 relative tolerance applies.
QuotientMatrix check_equitable(const SymmetricMatrix& m, const VertexPartition& partition);

/// Largest eigenvalue of a 2x2 quotient matrix in closed form.
double quotient_radius_2x2(const QuotientMatrix& b);

}  // namespace transit
