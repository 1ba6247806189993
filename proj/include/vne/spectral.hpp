#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vne/graph.hpp"

namespace vne {

/// Dense symmetric matrix, packed lower triangle (row-major).
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t order) : order_(order), data_(order * (order + 1) / 2, 0.0) {}

  std::size_t order() const noexcept { return order_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[slot(i, j)]; }
  void set(std::size_t i, std::size_t j, double value) { data_[slot(i, j)] = value; }

  /// Full row-major copy, order()*order() entries.
  std::vector<double> dense() const;

 private:
  static std::size_t slot(std::size_t i, std::size_t j) {
    if (i < j) std::swap(i, j);
    return i * (i + 1) / 2 + j;
  }

  std::size_t order_ = 0;
  std::vector<double> data_;
};

/// Eigenvalues in ascending order.
struct Spectrum {
  std::vector<double> eigenvalues;

  std::size_t size() const noexcept { return eigenvalues.size(); }
  double sum() const;
  /// Eigenvalues below `tolerance` count as zero.
  std::size_t zero_count(double tolerance = kZeroTolerance) const;

  static constexpr double kZeroTolerance = 1e-8;
};

/// Normalized Laplacian I - D^{-1/2} A D^{-1/2}; isolated nodes get an all-zero
/// row and column.
SymmetricMatrix normalized_laplacian(const Graph& g);

/// All eigenvalues of a symmetric matrix: Householder reduction to
/// tridiagonal form, then implicit-shift QL. Throws NumericalError if an
/// eigenvalue fails to converge within the iteration cap.
Spectrum symmetric_eigenvalues(const SymmetricMatrix& m);

/// -sum (l/2) ln(l/2) over the given spectrum; 0 ln 0 and terms at l = 2 vanish.
/// Eigenvalues within 2e-12 of 0 or 2 contribute nothing (solver round-off).
double entropy_from_spectrum(std::span<const double> eigenvalues);

/// von Neumann entropy of the normalized Laplacian's spectrum (nats).
double von_neumann_entropy(const Graph& g);

/// |S(G) - S(G \ v)| by full eigendecomposition.
double entropy_centrality_exact(const Graph& g, NodeIndex v);

/// |S(G) - S(G \ s)|; s must be a proper subset of the nodes.
double entropy_centrality_subgraph(const Graph& g, std::span<const NodeIndex> s);

/// S_1 = |V|/4 - sum over ordered adjacent pairs 1/(4 d_i d_j).
/// Requires a graph with no isolated nodes.
double entropy_s1(const Graph& g);

/// Tr(L^t) for t in {1, 2, 3} from degrees, edges and triangles only.
/// Requires a graph with no isolated nodes.
double trace_power(const Graph& g, int t);

/// Second-order truncation: (3/4)Tr(L) - (1/2)Tr(L^2) + (1/16)Tr(L^3), i.e.
/// (5/16)|V| - (5/16) sum_{i~j} 1/(d_i d_j) - (1/16) sum_{i~j~k~i} 1/(d_i d_j d_k)
/// with ordered pairs and ordered triangles. Requires no isolated nodes.
double entropy_s2(const Graph& g);

/// The second-order formula with the coefficients as originally published
/// (5/16, -11/16, +1/16). Kept only for comparison; it does not match the
/// truncated series.
double entropy_s2_published(const Graph& g);

/// Degree-local approximation of entropy_centrality_exact from the
/// first-order truncation:
///   1/4 - sum_{j~v} 1/(4 d_v d_j) + sum_{v~j~k, k!=v} 1/(4 (d_j - 1) d_j d_k).
/// Only needs the distance-2 neighbourhood of v. Throws DomainError if v is
/// isolated.
double entropy_centrality_approx(const Graph& g, NodeIndex v);

}  // namespace vne
