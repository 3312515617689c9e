#pragma once

// Finite abstract simplicial complexes and the combinatorial statistics this
// library derives from them: links, skeletons, flag and neighborhood
// constructions, and the partition of a face's "almost-cone" vertices that
// measures how far the complex is from being flag.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace lapbound {

using VertexId = int;

// Strictly increasing vertex list; the empty simplex {} has dimension -1.
using Simplex = std::vector<VertexId>;

inline int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

bool is_strictly_increasing(const Simplex& s);

// Sorts the vertices; throws std::invalid_argument on duplicates or negative labels.
Simplex make_simplex(std::vector<VertexId> vertices);

// Simple undirected graph on an ordered set of nonnegative integer labels.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<VertexId> vertices, std::vector<std::pair<VertexId, VertexId>> edges);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }

  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;
  int degree(VertexId v) const;
  const std::vector<VertexId>& neighbors(VertexId v) const;  // ascending
  int vertex_index(VertexId v) const;                        // -1 if absent

 private:
  std::vector<VertexId> vertices_;                       // ascending
  std::vector<std::pair<VertexId, VertexId>> edges_;     // u < v, lexicographic
  std::vector<std::vector<VertexId>> adjacency_;         // aligned with vertices_
};

inline constexpr long long kDefaultFaceBudget = 2'000'000;

// Immutable once constructed, safe to share across threads. Faces are stored
// per dimension in lexicographic order; that order is the canonical row and
// column index for every matrix built from the complex. The empty face is
// always present, so X(-1) = {{}} and f_{-1} = 1.
class SimplicialComplex {
 public:
  SimplicialComplex();  // the empty complex: no vertices, X(-1) = {{}}

  // Validating constructor used by every builder. faces_by_dim[d] must be
  // X(d) for d = 0..dim; the family must be downward closed, X(0) must match
  // `vertices` exactly, and every face must be strictly increasing. The empty
  // face is added by the constructor itself.
  static SimplicialComplex from_face_sets(std::vector<VertexId> vertices,
                                          std::vector<std::vector<Simplex>> faces_by_dim);

  int dim() const { return static_cast<int>(faces_.size()) - 2; }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }

  // X(k) for any k >= -1; dimensions beyond dim() yield an empty list.
  const std::vector<Simplex>& faces(int k) const;
  long long face_count(int k) const { return static_cast<long long>(faces(k).size()); }

  // (f_{-1}, f_0, ..., f_dim, 0): one trailing zero entry past the dimension.
  std::vector<long long> f_vector() const;

  bool contains(const Simplex& s) const;
  // Position of s in the lexicographic order of X(dim s), or -1 if absent.
  long long index_of(const Simplex& s) const;

  // Number of cofacets: faces of dimension dim(s)+1 containing s.
  long long degree(const Simplex& s) const;

  bool is_subcomplex_of(const SimplicialComplex& other) const;
  bool operator==(const SimplicialComplex& other) const;

  // Faces with no cofacet (the empty face only for the empty complex).
  std::vector<Simplex> maximal_faces() const;

  // Brute-force re-check of the defining invariant, for tests.
  bool is_downward_closed() const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<std::vector<Simplex>> faces_;  // faces_[d+1] = X(d)
};

// Downward closure of the given faces plus all listed vertices. Throws
// std::invalid_argument on duplicate vertices or a face outside the vertex
// set, FaceBudgetExceeded if the closure would exceed `face_budget` faces.
SimplicialComplex from_maximal_faces(std::vector<VertexId> vertices,
                                     std::vector<Simplex> maximal,
                                     long long face_budget = kDefaultFaceBudget);

// lk_X(sigma) = { tau : tau ∩ sigma = {}, tau ∪ sigma ∈ X }, returned as a
// complex on the vertices appearing in its faces. sigma must be a face.
SimplicialComplex link(const SimplicialComplex& x, const Simplex& sigma);

// Faces of dimension <= k, same vertex set. k must be >= 0.
SimplicialComplex skeleton(const SimplicialComplex& x, int k);

// The 1-skeleton as a graph, isolated vertices included.
Graph underlying_graph(const SimplicialComplex& x);

// All cliques of g as faces (ordered clique extension, so construction is
// deterministic). Subject to the face budget.
SimplicialComplex flag_complex(const Graph& g,
                               long long face_budget = kDefaultFaceBudget);

// Downward closure of { N_g(v) : v ∈ V(g) }. Vertex set of the result is the
// set of vertices appearing in some neighborhood (equivalently, vertices of
// positive degree). If max_dim >= 0, only faces of dimension <= max_dim are
// materialized; the result is then that skeleton of the full complex.
SimplicialComplex neighborhood_complex(const Graph& g, int max_dim = -1,
                                       long long face_budget = kDefaultFaceBudget);

// Partition of the vertices u outside sigma that cone over sigma's boundary
// but not over sigma itself: u ∉ lk(sigma), u ∈ lk(v) for every v ∈ sigma,
// graded by j = #{ w ∈ sigma : u ∈ lk(sigma \ {w}) }.
struct SigmaPartition {
  Simplex sigma;
  std::vector<long long> counts;                 // counts[j], j = 0..k+1
  std::vector<std::vector<VertexId>> witnesses;  // the class members, ascending

  long long total() const;           // Σ_j counts[j]
  long long weighted_total() const;  // Σ_j (j+1)·counts[j]
};

// sigma must be a nonempty face of x.
SigmaPartition sigma_partition(const SimplicialComplex& x, const Simplex& sigma);

// max over sigma ∈ X(k) of Σ_j (j+1)·|sigma[j]|. Throws VacuousDimension when
// X(k) is empty.
long long max_weighted_sigma_defect(const SimplicialComplex& x, int k);

// Variant parameter with the "u ∈ lk(v) for all v ∈ sigma" clause dropped:
// max over sigma ∈ X(k) of #{ u : u ∉ lk(sigma), #{w ∈ sigma : u ∈ lk(sigma\{w})} = j }.
// Requires k >= 1 and j >= 1; an empty X(k) gives 0.
long long dk_parameter(const SimplicialComplex& x, int k, int j);

// Number of (k+1)-subsets of `universe` that are not faces of x. Every vertex
// of x must lie in the universe.
long long missing_face_count(const SimplicialComplex& x,
                             const std::vector<VertexId>& universe, int k);

}  // namespace lapbound
