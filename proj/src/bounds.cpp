#include "lapbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "lapbound/errors.hpp"
#include "lapbound/laplacian.hpp"

namespace lapbound {

bool BoundReport::all_hold() const {
  for (const BoundRow& row : rows)
    if (row.slack < -tolerance) return false;
  return true;
}

double BoundReport::min_slack() const {
  double best = std::numeric_limits<double>::infinity();
  for (const BoundRow& row : rows) best = std::min(best, row.slack);
  return best;
}

BoundReport main1_bounds(const SimplicialComplex& x, int k) {
  if (k < 0) throw std::invalid_argument("dimension must be >= 0");
  BoundReport report;
  report.k = k;
  const long long f_k = x.face_count(k);
  if (f_k == 0) {
    report.vacuous = true;
    return report;
  }

  const long long n = x.vertex_count();
  const long long delta = max_weighted_sigma_defect(x, k);
  report.correction = static_cast<long long>(k) * n + delta;

  const Spectrum graph_spec = sym_eigenvalues(graph_laplacian_plus_j(underlying_graph(x)));
  const SymmetricMatrix l_k = laplacian_from_boundaries(x, k);
  const Spectrum actual = sym_eigenvalues(l_k);

  report.scale = std::max(1.0, l_k.frobenius_norm());
  report.tolerance = kSlackRelTol * report.scale;
  for (long long i = 1; i <= f_k; ++i) {
    BoundRow row;
    row.i = i;
    row.lower_bound =
        s_stat(graph_spec.eigenvalues, k + 1, i) - static_cast<double>(report.correction);
    row.actual = actual.eigenvalues[static_cast<std::size_t>(i - 1)];
    row.slack = row.actual - row.lower_bound;
    report.rows.push_back(row);
  }
  return report;
}

long long cohomology_dim_bound(const SimplicialComplex& x, int k) {
  if (k < 0) throw std::invalid_argument("dimension must be >= 0");
  if (x.face_count(k) == 0)
    throw VacuousDimension("no faces of dimension " + std::to_string(k));
  const long long n = x.vertex_count();
  const long long delta = max_weighted_sigma_defect(x, k);
  const double threshold = static_cast<double>(k) * static_cast<double>(n) +
                           static_cast<double>(delta);
  const Spectrum graph_spec = sym_eigenvalues(graph_laplacian_plus_j(underlying_graph(x)));
  return count_subset_sums_at_most(graph_spec.eigenvalues, k + 1, threshold);
}

BoundReport main2_bounds(const SimplicialComplex& x, const SimplicialComplex& xsub, int k) {
  if (k < 0) throw std::invalid_argument("dimension must be >= 0");
  if (!xsub.is_subcomplex_of(x))
    throw NotASubcomplex("second complex is not a subcomplex of the first");
  BoundReport report;
  report.k = k;
  const long long f_sub = xsub.face_count(k);
  if (f_sub == 0) {
    report.vacuous = true;
    return report;
  }

  long long defect = 0;
  for (const Simplex& sigma : xsub.faces(k))
    defect = std::max(defect, x.degree(sigma) - xsub.degree(sigma));
  report.correction = static_cast<long long>(k + 2) * defect;

  const SymmetricMatrix l_x = laplacian_from_boundaries(x, k);
  const SymmetricMatrix l_sub = laplacian_from_boundaries(xsub, k);
  const Spectrum spec_x = sym_eigenvalues(l_x);
  const Spectrum spec_sub = sym_eigenvalues(l_sub);

  report.scale = std::max({1.0, l_x.frobenius_norm(), l_sub.frobenius_norm()});
  report.tolerance = kSlackRelTol * report.scale;
  for (long long i = 1; i <= f_sub; ++i) {
    BoundRow row;
    row.i = i;
    row.lower_bound = spec_x.eigenvalues[static_cast<std::size_t>(i - 1)] -
                      static_cast<double>(report.correction);
    row.actual = spec_sub.eigenvalues[static_cast<std::size_t>(i - 1)];
    row.slack = row.actual - row.lower_bound;
    report.rows.push_back(row);
  }
  return report;
}

SyVerdict sy_vanishing_check(const SimplicialComplex& x, int k) {
  if (k < 1) throw std::invalid_argument("vanishing check requires k >= 1");
  SyVerdict verdict;
  const Graph g = underlying_graph(x);
  const SimplicialComplex flag = flag_complex(g);

  verdict.applicable = x.vertex_count() >= 2;
  for (int d = 0; d <= k && verdict.applicable; ++d)
    if (x.faces(d) != flag.faces(d)) verdict.applicable = false;
  if (!verdict.applicable) return verdict;

  const Spectrum graph_spec = sym_eigenvalues(graph_laplacian(g));
  verdict.lambda2 = graph_spec.eigenvalues[1];
  verdict.d_parameter = dk_parameter(x, k, k + 1);
  const double n = static_cast<double>(x.vertex_count());
  verdict.threshold = k * n / (k + 1) +
                      static_cast<double>(k + 2) / (k + 1) *
                          static_cast<double>(verdict.d_parameter);

  // Strictness cushion: equality within rounding must not be read as ">".
  const double cushion = 1e-9 * std::max(1.0, n);
  verdict.tie_within_cushion = std::abs(verdict.lambda2 - verdict.threshold) <= cushion;
  verdict.concludes_vanishing = verdict.lambda2 > verdict.threshold + cushion;

  verdict.betti_k = betti_numbers(x, k)[static_cast<std::size_t>(k)];
  if (verdict.concludes_vanishing && verdict.betti_k != 0)
    throw std::logic_error("vanishing conclusion contradicted by an exact Betti number");
  return verdict;
}

RemarkComparison remark_comparison(const SimplicialComplex& x, int k) {
  if (k < 0) throw std::invalid_argument("dimension must be >= 0");
  if (x.face_count(k) == 0)
    throw VacuousDimension("no faces of dimension " + std::to_string(k));
  RemarkComparison out;
  out.delta_k = max_weighted_sigma_defect(x, k);
  const SimplicialComplex flag = flag_complex(underlying_graph(x));
  long long max_defect = 0;
  for (const Simplex& sigma : x.faces(k))
    max_defect = std::max(max_defect, flag.degree(sigma) - x.degree(sigma));
  out.alternative = static_cast<long long>(k + 2) * max_defect;
  if (out.delta_k > out.alternative)
    throw std::logic_error("weighted defect exceeds its coarse bound");
  return out;
}

}  // namespace lapbound
