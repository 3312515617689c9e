#pragma once

// Signed boundary matrices, combinatorial Laplacians L_k = ∂_{k+1}∂_{k+1}^T +
// ∂_k^T ∂_k, their entrywise form, the P/Q split of L_k, and Betti numbers
// via exact integer ranks.

#include <vector>

#include "lapbound/complex.hpp"
#include "lapbound/linalg.hpp"

namespace lapbound {

// Rows are X(k-1), columns X(k), both in lexicographic order. Column tau has
// entry (-1)^{pos_tau(u)} in row tau\{u}. ∂_0 is the all-ones row indexed by
// the empty face, so Laplacians and Betti numbers below are reduced.
struct BoundaryMatrix {
  int k = 0;
  IntegerMatrix matrix;
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& x, int k);

// L_k assembled from the two boundary maps; exact integer arithmetic.
IntegerMatrix integer_laplacian(const SimplicialComplex& x, int k);

// L_k assembled entrywise: diagonal deg(sigma) + k + 1; for |sigma∩tau| = k
// with sigma∪tau not a face, the entry is the product of removal signs; zero
// otherwise.
IntegerMatrix integer_laplacian_explicit(const SimplicialComplex& x, int k);

SymmetricMatrix laplacian_from_boundaries(const SimplicialComplex& x, int k);
SymmetricMatrix laplacian_explicit(const SimplicialComplex& x, int k);

enum class LaplacianSource { boundaries, explicit_form };

struct LaplacianBundle {
  int k = 0;
  SymmetricMatrix L;  // = Q - P, verified exactly at construction
  SymmetricMatrix P;  // diag Σ_{v∈σ} deg_G(v) − deg_X(σ); −sign on ∼₁ pairs
  SymmetricMatrix Q;  // diag Σ_{v∈σ} deg_G(v) + k + 1; +sign on ∼₂ pairs
  LaplacianSource built_from = LaplacianSource::boundaries;
};

// Builds P and Q from their entrywise definitions and L_k from the boundary
// maps, then checks Q - P = L_k exactly (a failure is a bug and throws
// std::logic_error).
LaplacianBundle pq_decomposition(const SimplicialComplex& x, int k);

SymmetricMatrix graph_laplacian(const Graph& g);

// deg(v)+1 on the diagonal, 1 on non-adjacent pairs, 0 on edges; equals
// L(g) + J entrywise.
SymmetricMatrix graph_laplacian_plus_j(const Graph& g);

struct BettiCrossCheck {
  std::vector<long long> from_boundary_ranks;   // f_k − rank ∂_k − rank ∂_{k+1}
  std::vector<long long> from_laplacian_nullity;  // f_k − rank L_k
};

// Both routes for reduced Betti numbers b̃_0..b̃_kmax, all ranks exact.
BettiCrossCheck betti_cross_check(const SimplicialComplex& x, int kmax);

// The boundary-rank route, with the Laplacian-nullity route asserted equal
// (std::logic_error on disagreement).
std::vector<long long> betti_numbers(const SimplicialComplex& x, int kmax);

}  // namespace lapbound
