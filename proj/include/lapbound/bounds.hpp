#pragma once

// The spectral lower bounds this library exists to check: per-index bounds on
// Laplacian eigenvalues from subset sums of the graph Laplacian spectrum, the
// induced bound on cohomology dimension, the subcomplex comparison bound, and
// a sufficient condition for vanishing cohomology.

#include <vector>

#include "lapbound/complex.hpp"
#include "lapbound/linalg.hpp"

namespace lapbound {

struct BoundRow {
  long long i = 0;        // 1-based eigenvalue index
  double lower_bound = 0.0;
  double actual = 0.0;
  double slack = 0.0;     // actual - lower_bound
};

struct BoundReport {
  int k = 0;
  bool vacuous = false;             // X(k) empty, no rows
  std::vector<BoundRow> rows;       // i = 1..f_k
  long long correction = 0;         // the subtracted correction term
  double scale = 1.0;               // max(1, ‖L_k‖_F) (and ‖L_k(X)‖_F for pairs)
  double tolerance = 0.0;           // kSlackRelTol × scale

  bool all_hold() const;            // every slack >= -tolerance
  double min_slack() const;
};

// λ_i(L_k(X)) >= S_{k+1,i}(L(G_X)+J) − (k·n + Δ(k)) for i = 1..f_k, where
// Δ(k) is the maximum weighted sigma-partition defect and n = |V(X)|.
BoundReport main1_bounds(const SimplicialComplex& x, int k);

// #{ A ∈ C([n], k+1) : Σ_{i∈A} λ_i(L(G_X)+J) <= k·n + Δ(k) }, an upper bound
// for dim H̃^k(X;R). Throws VacuousDimension when f_k = 0.
long long cohomology_dim_bound(const SimplicialComplex& x, int k);

// λ_i(L_k(Xsub)) >= λ_i(L_k(X)) − (k+2)·max_{σ∈Xsub(k)} (deg_X(σ) − deg_Xsub(σ))
// for i = 1..f_k(Xsub). Throws NotASubcomplex if Xsub is not a subcomplex of X.
BoundReport main2_bounds(const SimplicialComplex& x, const SimplicialComplex& xsub, int k);

struct SyVerdict {
  bool applicable = false;          // k-skeleton of X equals that of flag(G_X)
  double lambda2 = 0.0;             // second-smallest eigenvalue of L(G_X)
  double threshold = 0.0;           // k·n/(k+1) + (k+2)/(k+1)·D_k(X,k+1)
  long long d_parameter = 0;
  bool concludes_vanishing = false; // lambda2 > threshold beyond the cushion
  bool tie_within_cushion = false;  // |lambda2 - threshold| inside the cushion
  long long betti_k = 0;            // asserted 0 whenever the check concludes
};

// Sufficient condition for H̃^k(X;R) = 0 when the k-skeleton is flag.
// Requires k >= 1. When the verdict concludes, b̃_k = 0 is re-verified
// exactly (std::logic_error otherwise).
SyVerdict sy_vanishing_check(const SimplicialComplex& x, int k);

struct RemarkComparison {
  long long delta_k = 0;      // max weighted defect
  long long alternative = 0;  // (k+2) × max_σ (deg_flag(σ) − deg_X(σ))
};

// Computes both sides and asserts delta_k <= alternative. Throws
// VacuousDimension when f_k = 0.
RemarkComparison remark_comparison(const SimplicialComplex& x, int k);

}  // namespace lapbound
