#include "lapbound/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "lapbound/errors.hpp"

namespace lapbound {

namespace {

std::string simplex_str(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

// Comparator grading by size first, then lexicographically: the canonical
// total order used whenever faces of mixed dimensions share a container.
struct GradedLess {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using FaceSet = std::set<Simplex, GradedLess>;

// Visits all k-subsets of `pool` in lexicographic order.
void for_each_subset(const std::vector<VertexId>& pool, int k,
                     const std::function<void(const Simplex&)>& fn) {
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return;
  Simplex current(static_cast<std::size_t>(k));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      fn(current);
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      current[static_cast<std::size_t>(depth)] = pool[static_cast<std::size_t>(i)];
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

void insert_with_budget(FaceSet& faces, Simplex s, long long budget) {
  faces.insert(std::move(s));
  if (static_cast<long long>(faces.size()) > budget)
    throw FaceBudgetExceeded("face budget of " + std::to_string(budget) + " exceeded");
}

// All nonempty subsets of a face, dimension-capped when max_size >= 0.
void insert_subsets(FaceSet& faces, const Simplex& face, int max_size, long long budget) {
  const int m = static_cast<int>(face.size());
  if (max_size < 0 || max_size > m) max_size = m;
  if (max_size == m && m >= 21) {
    // the closure alone would hold 2^m - 1 faces; fail before enumerating them
    if (m >= 62 || (1LL << m) - 1 > budget)
      throw FaceBudgetExceeded("closure of a " + std::to_string(m) +
                               "-vertex face exceeds the face budget");
  }
  Simplex current;
  current.reserve(static_cast<std::size_t>(max_size));
  std::function<void(int)> rec = [&](int start) {
    for (int i = start; i < m; ++i) {
      current.push_back(face[static_cast<std::size_t>(i)]);
      insert_with_budget(faces, current, budget);
      if (static_cast<int>(current.size()) < max_size) rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
}

SimplicialComplex complex_from_face_set(std::vector<VertexId> vertices, const FaceSet& faces) {
  std::vector<std::vector<Simplex>> by_dim;
  for (const Simplex& s : faces) {
    const int d = simplex_dim(s);
    if (d < 0) continue;
    if (static_cast<int>(by_dim.size()) <= d) by_dim.resize(static_cast<std::size_t>(d) + 1);
    by_dim[static_cast<std::size_t>(d)].push_back(s);
  }
  return SimplicialComplex::from_face_sets(std::move(vertices), std::move(by_dim));
}

}  // namespace

bool is_strictly_increasing(const Simplex& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) return false;
  return true;
}

Simplex make_simplex(std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0) throw std::invalid_argument("negative vertex label");
    if (i > 0 && vertices[i - 1] == vertices[i])
      throw std::invalid_argument("repeated vertex " + std::to_string(vertices[i]) +
                                  " in simplex");
  }
  return vertices;
}

Graph::Graph(std::vector<VertexId> vertices, std::vector<std::pair<VertexId, VertexId>> edges)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] < 0) throw std::invalid_argument("negative vertex label");
    if (i > 0 && vertices_[i - 1] == vertices_[i])
      throw std::invalid_argument("duplicate vertex label " + std::to_string(vertices_[i]));
  }
  adjacency_.assign(vertices_.size(), {});
  for (auto& e : edges) {
    if (e.first == e.second)
      throw std::invalid_argument("loop at vertex " + std::to_string(e.first));
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!has_vertex(e.first) || !has_vertex(e.second))
      throw std::invalid_argument("edge endpoint outside the vertex set");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adjacency_[static_cast<std::size_t>(vertex_index(u))].push_back(v);
    adjacency_[static_cast<std::size_t>(vertex_index(v))].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int Graph::vertex_index(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const int i = vertex_index(u);
  if (i < 0) return false;
  const auto& nbrs = adjacency_[static_cast<std::size_t>(i)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::degree(VertexId v) const {
  const int i = vertex_index(v);
  if (i < 0) throw std::invalid_argument("unknown vertex " + std::to_string(v));
  return static_cast<int>(adjacency_[static_cast<std::size_t>(i)].size());
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
  const int i = vertex_index(v);
  if (i < 0) throw std::invalid_argument("unknown vertex " + std::to_string(v));
  return adjacency_[static_cast<std::size_t>(i)];
}

SimplicialComplex::SimplicialComplex() : faces_(1) { faces_[0].push_back(Simplex{}); }

SimplicialComplex SimplicialComplex::from_face_sets(std::vector<VertexId> vertices,
                                                    std::vector<std::vector<Simplex>> faces_by_dim) {
  SimplicialComplex x;
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0) throw std::invalid_argument("negative vertex label");
    if (i > 0 && vertices[i - 1] == vertices[i])
      throw std::invalid_argument("duplicate vertex label " + std::to_string(vertices[i]));
  }
  x.vertices_ = std::move(vertices);

  while (!faces_by_dim.empty() && faces_by_dim.back().empty()) faces_by_dim.pop_back();
  x.faces_.resize(faces_by_dim.size() + 1);
  for (std::size_t d = 0; d < faces_by_dim.size(); ++d) {
    auto& level = faces_by_dim[d];
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    for (const Simplex& s : level) {
      if (s.size() != d + 1 || !is_strictly_increasing(s))
        throw std::invalid_argument("malformed face " + simplex_str(s) + " at dimension " +
                                    std::to_string(d));
      for (VertexId v : s)
        if (!std::binary_search(x.vertices_.begin(), x.vertices_.end(), v))
          throw std::invalid_argument("face " + simplex_str(s) + " references unknown vertex " +
                                      std::to_string(v));
    }
    x.faces_[d + 1] = std::move(level);
  }

  if (x.faces_.size() >= 2 && x.faces_[1].size() != x.vertices_.size())
    throw std::invalid_argument("vertex set and 0-faces disagree");
  if (x.faces_.size() < 2 && !x.vertices_.empty())
    throw std::invalid_argument("vertex set and 0-faces disagree");

  // Downward closure: every facet of every face must be present.
  for (std::size_t d = 2; d < x.faces_.size(); ++d) {
    for (const Simplex& s : x.faces_[d]) {
      Simplex f;
      f.reserve(s.size() - 1);
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        f.clear();
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != drop) f.push_back(s[j]);
        if (!std::binary_search(x.faces_[d - 1].begin(), x.faces_[d - 1].end(), f))
          throw std::invalid_argument("family is not downward closed: " + simplex_str(s) +
                                      " present but facet " + simplex_str(f) + " missing");
      }
    }
  }
  return x;
}

const std::vector<Simplex>& SimplicialComplex::faces(int k) const {
  static const std::vector<Simplex> kEmpty;
  const int idx = k + 1;
  if (idx < 0 || idx >= static_cast<int>(faces_.size())) return kEmpty;
  return faces_[static_cast<std::size_t>(idx)];
}

std::vector<long long> SimplicialComplex::f_vector() const {
  std::vector<long long> f;
  for (int k = -1; k <= dim() + 1; ++k) f.push_back(face_count(k));
  return f;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  const auto& level = faces(simplex_dim(s));
  return std::binary_search(level.begin(), level.end(), s);
}

long long SimplicialComplex::index_of(const Simplex& s) const {
  const auto& level = faces(simplex_dim(s));
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return -1;
  return static_cast<long long>(it - level.begin());
}

long long SimplicialComplex::degree(const Simplex& s) const {
  if (!contains(s)) throw std::invalid_argument(simplex_str(s) + " is not a face");
  long long deg = 0;
  Simplex cofacet;
  cofacet.reserve(s.size() + 1);
  for (VertexId v : vertices_) {
    if (std::binary_search(s.begin(), s.end(), v)) continue;
    cofacet.assign(s.begin(), s.end());
    cofacet.insert(std::upper_bound(cofacet.begin(), cofacet.end(), v), v);
    if (contains(cofacet)) ++deg;
  }
  return deg;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  for (int k = 0; k <= dim(); ++k)
    for (const Simplex& s : faces(k))
      if (!other.contains(s)) return false;
  return true;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  return vertices_ == other.vertices_ && faces_ == other.faces_;
}

std::vector<Simplex> SimplicialComplex::maximal_faces() const {
  std::vector<Simplex> out;
  for (int k = -1; k <= dim(); ++k)
    for (const Simplex& s : faces(k))
      if (degree(s) == 0) out.push_back(s);
  return out;
}

bool SimplicialComplex::is_downward_closed() const {
  for (int k = 1; k <= dim(); ++k) {
    for (const Simplex& s : faces(k)) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex f;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != drop) f.push_back(s[j]);
        if (!contains(f)) return false;
      }
    }
  }
  return true;
}

SimplicialComplex from_maximal_faces(std::vector<VertexId> vertices, std::vector<Simplex> maximal,
                                     long long face_budget) {
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0) throw std::invalid_argument("negative vertex label");
    if (i > 0 && vertices[i - 1] == vertices[i])
      throw std::invalid_argument("duplicate vertex label " + std::to_string(vertices[i]));
  }
  FaceSet faces;
  for (VertexId v : vertices) insert_with_budget(faces, Simplex{v}, face_budget);
  for (Simplex& raw : maximal) {
    Simplex s = make_simplex(std::move(raw));
    for (VertexId v : s)
      if (!std::binary_search(vertices.begin(), vertices.end(), v))
        throw std::invalid_argument("face " + simplex_str(s) + " references unknown vertex " +
                                    std::to_string(v));
    insert_subsets(faces, s, -1, face_budget);
  }
  return complex_from_face_set(std::move(vertices), faces);
}

SimplicialComplex link(const SimplicialComplex& x, const Simplex& sigma) {
  if (!x.contains(sigma))
    throw std::invalid_argument(simplex_str(sigma) + " is not a face of the complex");
  FaceSet faces;
  Simplex joined;
  for (int k = 0; k <= x.dim(); ++k) {
    for (const Simplex& tau : x.faces(k)) {
      joined.clear();
      std::set_intersection(tau.begin(), tau.end(), sigma.begin(), sigma.end(),
                            std::back_inserter(joined));
      if (!joined.empty()) continue;
      joined.clear();
      std::set_union(tau.begin(), tau.end(), sigma.begin(), sigma.end(),
                     std::back_inserter(joined));
      if (x.contains(joined)) faces.insert(tau);
    }
  }
  std::vector<VertexId> verts;
  for (const Simplex& s : faces)
    if (s.size() == 1) verts.push_back(s[0]);
  return complex_from_face_set(std::move(verts), faces);
}

SimplicialComplex skeleton(const SimplicialComplex& x, int k) {
  if (k < 0) throw std::invalid_argument("skeleton dimension must be >= 0");
  std::vector<std::vector<Simplex>> by_dim;
  for (int d = 0; d <= std::min(k, x.dim()); ++d) by_dim.push_back(x.faces(d));
  return SimplicialComplex::from_face_sets(x.vertices(), std::move(by_dim));
}

Graph underlying_graph(const SimplicialComplex& x) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const Simplex& e : x.faces(1)) edges.emplace_back(e[0], e[1]);
  return Graph(x.vertices(), std::move(edges));
}

SimplicialComplex flag_complex(const Graph& g, long long face_budget) {
  FaceSet faces;
  const auto& verts = g.vertices();
  Simplex clique;
  // Ordered clique extension: every clique is reached exactly once, through
  // its ascending vertex order.
  std::function<void(const std::vector<VertexId>&)> extend =
      [&](const std::vector<VertexId>& candidates) {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          const VertexId v = candidates[i];
          clique.push_back(v);
          insert_with_budget(faces, clique, face_budget);
          std::vector<VertexId> next;
          for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (g.has_edge(v, candidates[j])) next.push_back(candidates[j]);
          if (!next.empty()) extend(next);
          clique.pop_back();
        }
      };
  extend(verts);
  return complex_from_face_set(verts, faces);
}

SimplicialComplex neighborhood_complex(const Graph& g, int max_dim, long long face_budget) {
  FaceSet faces;
  const int cap_size = max_dim >= 0 ? max_dim + 1 : -1;
  for (VertexId v : g.vertices()) {
    const auto& nbrs = g.neighbors(v);
    if (nbrs.empty()) continue;
    insert_subsets(faces, nbrs, cap_size, face_budget);
  }
  std::vector<VertexId> verts;
  for (const Simplex& s : faces)
    if (s.size() == 1) verts.push_back(s[0]);
  return complex_from_face_set(std::move(verts), faces);
}

long long SigmaPartition::total() const {
  long long t = 0;
  for (long long c : counts) t += c;
  return t;
}

long long SigmaPartition::weighted_total() const {
  long long t = 0;
  for (std::size_t j = 0; j < counts.size(); ++j)
    t += (static_cast<long long>(j) + 1) * counts[j];
  return t;
}

SigmaPartition sigma_partition(const SimplicialComplex& x, const Simplex& sigma) {
  if (sigma.empty()) throw std::invalid_argument("sigma must be nonempty");
  if (!x.contains(sigma))
    throw std::invalid_argument(simplex_str(sigma) + " is not a face of the complex");
  const int k = simplex_dim(sigma);
  SigmaPartition part;
  part.sigma = sigma;
  part.counts.assign(static_cast<std::size_t>(k) + 2, 0);
  part.witnesses.assign(static_cast<std::size_t>(k) + 2, {});

  Simplex tmp;
  for (VertexId u : x.vertices()) {
    if (std::binary_search(sigma.begin(), sigma.end(), u)) continue;
    // u ∉ lk(sigma): sigma ∪ {u} is not a face
    tmp = sigma;
    tmp.insert(std::upper_bound(tmp.begin(), tmp.end(), u), u);
    if (x.contains(tmp)) continue;
    // u ∈ lk(v) for every v ∈ sigma
    bool adjacent_to_all = true;
    for (VertexId v : sigma) {
      Simplex edge = u < v ? Simplex{u, v} : Simplex{v, u};
      if (!x.contains(edge)) {
        adjacent_to_all = false;
        break;
      }
    }
    if (!adjacent_to_all) continue;
    // j = #{ w ∈ sigma : u ∈ lk(sigma \ {w}) }
    int j = 0;
    for (std::size_t w = 0; w < sigma.size(); ++w) {
      tmp.clear();
      for (std::size_t t = 0; t < sigma.size(); ++t)
        if (t != w) tmp.push_back(sigma[t]);
      tmp.insert(std::upper_bound(tmp.begin(), tmp.end(), u), u);
      if (x.contains(tmp)) ++j;
    }
    part.counts[static_cast<std::size_t>(j)] += 1;
    part.witnesses[static_cast<std::size_t>(j)].push_back(u);
  }
  return part;
}

long long max_weighted_sigma_defect(const SimplicialComplex& x, int k) {
  if (x.face_count(k) == 0)
    throw VacuousDimension("no faces of dimension " + std::to_string(k));
  long long best = 0;
  for (const Simplex& sigma : x.faces(k))
    best = std::max(best, sigma_partition(x, sigma).weighted_total());
  return best;
}

long long dk_parameter(const SimplicialComplex& x, int k, int j) {
  if (k < 1 || j < 1) throw std::invalid_argument("dk_parameter requires k >= 1 and j >= 1");
  long long best = 0;
  Simplex tmp;
  for (const Simplex& sigma : x.faces(k)) {
    long long count = 0;
    for (VertexId u : x.vertices()) {
      if (std::binary_search(sigma.begin(), sigma.end(), u)) continue;
      tmp = sigma;
      tmp.insert(std::upper_bound(tmp.begin(), tmp.end(), u), u);
      if (x.contains(tmp)) continue;
      int hits = 0;
      for (std::size_t w = 0; w < sigma.size(); ++w) {
        tmp.clear();
        for (std::size_t t = 0; t < sigma.size(); ++t)
          if (t != w) tmp.push_back(sigma[t]);
        tmp.insert(std::upper_bound(tmp.begin(), tmp.end(), u), u);
        if (x.contains(tmp)) ++hits;
      }
      if (hits == j) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

long long missing_face_count(const SimplicialComplex& x, const std::vector<VertexId>& universe,
                             int k) {
  if (k < 0) throw std::invalid_argument("missing_face_count requires k >= 0");
  std::vector<VertexId> uni = universe;
  std::sort(uni.begin(), uni.end());
  uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
  if (uni.size() != universe.size())
    throw std::invalid_argument("universe has duplicate vertices");
  for (VertexId v : x.vertices())
    if (!std::binary_search(uni.begin(), uni.end(), v))
      throw std::invalid_argument("complex vertex " + std::to_string(v) +
                                  " is outside the universe");

  if (uni == x.vertices()) {
    // Every (k+1)-subset is drawn from the complex's own vertex set.
    long long total = 1;
    const long long n = static_cast<long long>(uni.size());
    const long long r = std::min<long long>(k + 1, n - (k + 1));
    if (r < 0) return 0;
    for (long long i = 1; i <= r; ++i) total = total * (n - r + i) / i;
    return total - x.face_count(k);
  }
  long long missing = 0;
  for_each_subset(uni, k + 1, [&](const Simplex& s) {
    if (!x.contains(s)) ++missing;
  });
  return missing;
}

}  // namespace lapbound
