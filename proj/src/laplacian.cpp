#include "lapbound/laplacian.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lapbound {

namespace {

// Σ_{v∈σ} deg_G(v) for a face σ.
long long vertex_degree_sum(const Graph& g, const Simplex& sigma) {
  long long sum = 0;
  for (VertexId v : sigma) sum += g.degree(v);
  return sum;
}

Simplex merged_union(const Simplex& a, const Simplex& b) {
  Simplex out;
  out.reserve(a.size() + 1);
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

BoundaryMatrix boundary_matrix(const SimplicialComplex& x, int k) {
  if (k < 0) throw std::invalid_argument("boundary dimension must be >= 0");
  const auto& rows = x.faces(k - 1);
  const auto& cols = x.faces(k);
  BoundaryMatrix out;
  out.k = k;
  out.matrix = IntegerMatrix(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int c = 0; c < out.matrix.cols; ++c) {
    const Simplex& tau = cols[static_cast<std::size_t>(c)];
    Simplex facet;
    facet.reserve(tau.size());
    for (std::size_t drop = 0; drop < tau.size(); ++drop) {
      facet.clear();
      for (std::size_t j = 0; j < tau.size(); ++j)
        if (j != drop) facet.push_back(tau[j]);
      const long long r = x.index_of(facet);
      if (r < 0) throw std::logic_error("boundary facet missing from the complex");
      out.matrix.at(static_cast<int>(r), c) = (drop % 2 == 0) ? 1 : -1;
    }
  }
  return out;
}

IntegerMatrix integer_laplacian(const SimplicialComplex& x, int k) {
  if (k < 0) throw std::invalid_argument("laplacian dimension must be >= 0");
  const IntegerMatrix up = boundary_matrix(x, k + 1).matrix;
  const IntegerMatrix down = boundary_matrix(x, k).matrix;
  const int f_k = static_cast<int>(x.face_count(k));
  IntegerMatrix l(f_k, f_k);
  if (up.cols > 0) l = up * up.transposed();
  if (down.rows > 0) {
    const IntegerMatrix dtd = down.transposed() * down;
    l = (up.cols > 0) ? l + dtd : dtd;
  }
  return l;
}

IntegerMatrix integer_laplacian_explicit(const SimplicialComplex& x, int k) {
  if (k < 0) throw std::invalid_argument("laplacian dimension must be >= 0");
  const auto& level = x.faces(k);
  const int f_k = static_cast<int>(level.size());
  IntegerMatrix l(f_k, f_k);
  for (int a = 0; a < f_k; ++a) {
    const Simplex& sigma = level[static_cast<std::size_t>(a)];
    l.at(a, a) = x.degree(sigma) + k + 1;
    for (int b = a + 1; b < f_k; ++b) {
      const Simplex& tau = level[static_cast<std::size_t>(b)];
      const NearPair np = near_pair(sigma, tau);
      if (np.sign == 0) continue;
      if (x.contains(merged_union(sigma, tau))) continue;  // not in relation ~
      l.at(a, b) = np.sign;
      l.at(b, a) = np.sign;
    }
  }
  return l;
}

SymmetricMatrix laplacian_from_boundaries(const SimplicialComplex& x, int k) {
  return SymmetricMatrix::from_integer(integer_laplacian(x, k));
}

SymmetricMatrix laplacian_explicit(const SimplicialComplex& x, int k) {
  return SymmetricMatrix::from_integer(integer_laplacian_explicit(x, k));
}

LaplacianBundle pq_decomposition(const SimplicialComplex& x, int k) {
  if (k < 0) throw std::invalid_argument("laplacian dimension must be >= 0");
  const Graph g = underlying_graph(x);
  const auto& level = x.faces(k);
  const int f_k = static_cast<int>(level.size());

  IntegerMatrix p(f_k, f_k), q(f_k, f_k);
  for (int a = 0; a < f_k; ++a) {
    const Simplex& sigma = level[static_cast<std::size_t>(a)];
    const long long degsum = vertex_degree_sum(g, sigma);
    p.at(a, a) = degsum - x.degree(sigma);
    q.at(a, a) = degsum + k + 1;
    for (int b = a + 1; b < f_k; ++b) {
      const Simplex& tau = level[static_cast<std::size_t>(b)];
      const NearPair np = near_pair(sigma, tau);
      if (np.sign == 0) continue;
      if (x.contains(merged_union(sigma, tau))) continue;
      // sigma ~ tau; split by whether the exchanged pair is an edge of X
      const Simplex exchanged =
          np.i < np.j ? Simplex{np.i, np.j} : Simplex{np.j, np.i};
      if (x.contains(exchanged)) {
        p.at(a, b) = -np.sign;
        p.at(b, a) = -np.sign;
      } else {
        q.at(a, b) = np.sign;
        q.at(b, a) = np.sign;
      }
    }
  }

  const IntegerMatrix l = integer_laplacian(x, k);
  if (!(q - p == l)) throw std::logic_error("Q - P does not reproduce the Laplacian");
  if (!(integer_laplacian_explicit(x, k) == l))
    throw std::logic_error("entrywise Laplacian disagrees with the boundary assembly");

  LaplacianBundle bundle;
  bundle.k = k;
  bundle.L = SymmetricMatrix::from_integer(l);
  bundle.P = SymmetricMatrix::from_integer(p);
  bundle.Q = SymmetricMatrix::from_integer(q);
  bundle.built_from = LaplacianSource::boundaries;
  return bundle;
}

SymmetricMatrix graph_laplacian(const Graph& g) {
  const int n = g.vertex_count();
  SymmetricMatrix l(n);
  for (int i = 0; i < n; ++i)
    l.set(i, i, static_cast<double>(g.degree(g.vertices()[static_cast<std::size_t>(i)])));
  for (const auto& [u, v] : g.edges()) {
    const int i = g.vertex_index(u), j = g.vertex_index(v);
    l.set(i, j, -1.0);
  }
  return l;
}

SymmetricMatrix graph_laplacian_plus_j(const Graph& g) {
  const int n = g.vertex_count();
  SymmetricMatrix l(n);
  for (int i = 0; i < n; ++i) {
    const VertexId u = g.vertices()[static_cast<std::size_t>(i)];
    l.set(i, i, static_cast<double>(g.degree(u)) + 1.0);
    for (int j = i + 1; j < n; ++j) {
      const VertexId v = g.vertices()[static_cast<std::size_t>(j)];
      l.set(i, j, g.has_edge(u, v) ? 0.0 : 1.0);
    }
  }
  return l;
}

BettiCrossCheck betti_cross_check(const SimplicialComplex& x, int kmax) {
  if (kmax < 0) throw std::invalid_argument("kmax must be >= 0");
  BettiCrossCheck out;
  std::vector<long long> boundary_rank(static_cast<std::size_t>(kmax) + 2, 0);
  for (int k = 0; k <= kmax + 1; ++k)
    boundary_rank[static_cast<std::size_t>(k)] = integer_rank(boundary_matrix(x, k).matrix);
  for (int k = 0; k <= kmax; ++k) {
    const long long f_k = x.face_count(k);
    out.from_boundary_ranks.push_back(f_k - boundary_rank[static_cast<std::size_t>(k)] -
                                      boundary_rank[static_cast<std::size_t>(k) + 1]);
    out.from_laplacian_nullity.push_back(f_k - integer_rank(integer_laplacian(x, k)));
  }
  return out;
}

std::vector<long long> betti_numbers(const SimplicialComplex& x, int kmax) {
  BettiCrossCheck check = betti_cross_check(x, kmax);
  if (check.from_boundary_ranks != check.from_laplacian_nullity)
    throw std::logic_error("Betti numbers from boundary ranks and Laplacian nullity disagree");
  return std::move(check.from_boundary_ranks);
}

}  // namespace lapbound
