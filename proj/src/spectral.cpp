#include "transit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "transit/errors.hpp"

namespace transit {

SymmetricMatrix::SymmetricMatrix(int order) : order_(order) {
  if (order < 1) throw DomainError("matrix order must be positive");
  upper_.assign(static_cast<std::size_t>(order) * (order + 1) / 2, 0.0);
}

double SymmetricMatrix::inf_norm() const {
  double worst = 0.0;
  for (int i = 0; i < order_; ++i) {
    double row = 0.0;
    for (int j = 0; j < order_; ++j) row += std::abs((*this)(i, j));
    worst = std::max(worst, row);
  }
  return worst;
}

void SymmetricMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  std::fill(y.begin(), y.end(), 0.0);
  std::size_t idx = 0;
  for (int i = 0; i < order_; ++i) {
    y[i] += upper_[idx] * x[i];
    ++idx;
    for (int j = i + 1; j < order_; ++j, ++idx) {
      const double m = upper_[idx];
      y[i] += m * x[j];
      y[j] += m * x[i];
    }
  }
}

bool SymmetricMatrix::is_integral() const {
  for (double v : upper_) {
    if (v != std::round(v)) return false;
  }
  return true;
}

SymmetricMatrix distance_as_matrix(const DistanceMatrix& d) {
  SymmetricMatrix m(d.order());
  for (int i = 0; i < d.order(); ++i) {
    for (int j = i; j < d.order(); ++j) m.set(i, j, d.at(i, j));
  }
  return m;
}

SymmetricMatrix distance_signless_laplacian(const DistanceMatrix& d) {
  SymmetricMatrix m = distance_as_matrix(d);
  const auto profile = transmission_profile(d);
  for (int i = 0; i < d.order(); ++i) m.set(i, i, profile.transmissions[i]);
  return m;
}

PerronResult perron(const SymmetricMatrix& m, const PerronOptions& options) {
  const int n = m.order();
  const std::size_t un = static_cast<std::size_t>(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (m(i, j) < 0.0) {
        throw DomainError("perron requires nonnegative entries, found " +
                          std::to_string(m(i, j)));
      }
    }
  }

  const int cap = options.max_iterations > 0 ? options.max_iterations : 200 * n + 10000;
  const double threshold = options.tolerance * std::max(1.0, m.inf_norm());

  // Deterministic start: normalized all-ones.
  std::vector<double> x(un, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(un, 0.0);

  double best_residual = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= cap; ++it) {
    m.multiply(x, y);
    // Rayleigh quotient of the shifted operator M + I is rq + 1; x is unit.
    double rq = 0.0;
    for (int i = 0; i < n; ++i) rq += x[i] * y[i];

    double residual = 0.0;
    for (int i = 0; i < n; ++i) residual = std::max(residual, std::abs(y[i] - rq * x[i]));
    best_residual = std::min(best_residual, residual);

    if (residual <= threshold) {
      for (double v : x) {
        if (!(v > 0.0)) {
          throw DomainError("perron vector has a nonpositive entry; matrix not irreducible?");
        }
      }
      return PerronResult{rq, std::move(x), residual, it};
    }

    // Next iterate of the shifted operator, renormalized.
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
      y[i] += x[i];
      norm += y[i] * y[i];
    }
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  throw ConvergenceError("power iteration did not converge in " + std::to_string(cap) +
                             " iterations (best residual " + std::to_string(best_residual) + ")",
                         best_residual, cap);
}

PerronResult distance_spectral_radius(const Graph& g, const PerronOptions& options) {
  return perron(distance_as_matrix(distance_matrix(g)), options);
}

PerronResult dsl_spectral_radius(const Graph& g, const PerronOptions& options) {
  return perron(distance_signless_laplacian(distance_matrix(g)), options);
}

IrregularityReport irregularity(const Graph& g, const PerronOptions& options) {
  const DistanceMatrix d = distance_matrix(g);
  const TransmissionProfile p = transmission_profile(d);
  IrregularityReport r;
  r.dmax = p.dmax;
  r.dmin = p.dmin;
  r.distance_radius = perron(distance_as_matrix(d), options).radius;
  r.dsl_radius = perron(distance_signless_laplacian(d), options).radius;
  r.sigma = p.dmax - r.distance_radius;
  r.tau = 2.0 * p.dmax - r.dsl_radius;
  // Rounding can push the Rayleigh quotient an ulp past the exact radius on
  // transmission-regular graphs; both measures are nonnegative by definition.
  const double guard = 1e-9;
  if (r.sigma < 0.0 && r.sigma > -guard) r.sigma = 0.0;
  if (r.tau < 0.0 && r.tau > -guard) r.tau = 0.0;
  return r;
}

QuotientMatrix check_equitable(const SymmetricMatrix& m, const VertexPartition& partition) {
  const int n = m.order();
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (const auto& block : partition) {
    if (block.empty()) throw DomainError("equitable partition blocks must be nonempty");
    for (int v : block) {
      if (v < 0 || v >= n) throw DomainError("partition vertex out of range");
      if (seen[v]++) throw DomainError("partition blocks overlap at vertex " + std::to_string(v));
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!seen[v]) throw DomainError("partition misses vertex " + std::to_string(v));
  }

  const bool exact = m.is_integral();
  const int k = static_cast<int>(partition.size());
  QuotientMatrix q;
  q.block_count = k;
  q.partition = partition;
  q.entries.assign(static_cast<std::size_t>(k) * k, 0.0);

  for (int bi = 0; bi < k; ++bi) {
    for (int bj = 0; bj < k; ++bj) {
      double reference = 0.0;
      bool first = true;
      int reference_row = -1;
      for (int i : partition[bi]) {
        double sum = 0.0;
        for (int j : partition[bj]) sum += m(i, j);
        if (first) {
          reference = sum;
          reference_row = i;
          first = false;
          continue;
        }
        const bool equal = exact ? sum == reference
                                 : std::abs(sum - reference) <=
                                       1e-9 * std::max(1.0, std::abs(reference));
        if (!equal) {
          throw NotEquitableError(
              "partition not equitable: block (" + std::to_string(bi) + "," +
                  std::to_string(bj) + ") row sums differ between vertices " +
                  std::to_string(reference_row) + " and " + std::to_string(i),
              bi, bj, reference_row, i);
        }
      }
      q.entries[static_cast<std::size_t>(bi) * k + bj] = reference;
    }
  }
  return q;
}

double quotient_radius_2x2(const QuotientMatrix& b) {
  if (b.block_count != 2) {
    throw DomainError("closed-form quotient radius requires a 2x2 quotient, got " +
                      std::to_string(b.block_count));
  }
  const double a = b.at(0, 0), d = b.at(1, 1);
  const double off = b.at(0, 1) * b.at(1, 0);
  return (a + d + std::sqrt((a - d) * (a - d) + 4.0 * off)) / 2.0;
}

}  // namespace transit
