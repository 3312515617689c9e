#include "lapbound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "lapbound/errors.hpp"

namespace lapbound {

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (cols != rhs.rows) throw std::invalid_argument("integer matrix shape mismatch");
  IntegerMatrix out(rows, rhs.cols);
  for (int i = 0; i < rows; ++i) {
    for (int l = 0; l < cols; ++l) {
      const std::int64_t v = at(i, l);
      if (v == 0) continue;  // boundary matrices are mostly zero
      const std::int64_t* brow = &rhs.a[static_cast<std::size_t>(l) * rhs.cols];
      std::int64_t* orow = &out.a[static_cast<std::size_t>(i) * rhs.cols];
      for (int j = 0; j < rhs.cols; ++j) orow[j] += v * brow[j];
    }
  }
  return out;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& rhs) const {
  if (rows != rhs.rows || cols != rhs.cols)
    throw std::invalid_argument("integer matrix shape mismatch");
  IntegerMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] + rhs.a[i];
  return out;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& rhs) const {
  if (rows != rhs.rows || cols != rhs.cols)
    throw std::invalid_argument("integer matrix shape mismatch");
  IntegerMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] - rhs.a[i];
  return out;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v == 0; });
}

bool IntegerMatrix::is_symmetric() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = i + 1; j < cols; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

SymmetricMatrix::SymmetricMatrix(int n)
    : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {
  if (n < 0) throw std::invalid_argument("negative matrix order");
}

SymmetricMatrix SymmetricMatrix::from_integer(const IntegerMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("integer matrix is not symmetric");
  SymmetricMatrix s(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = i; j < m.cols; ++j) s.set(i, j, static_cast<double>(m.at(i, j)));
  return s;
}

void SymmetricMatrix::set(int i, int j, double v) {
  a_[static_cast<std::size_t>(i) * n_ + j] = v;
  a_[static_cast<std::size_t>(j) * n_ + i] = v;
}

double SymmetricMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (double v : a_) sum += v * v;
  return std::sqrt(sum);
}

Spectrum sym_eigenvalues(const SymmetricMatrix& m, double tol) {
  const int n = m.order();
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (n == 0) return {};
  if (n > kDenseOrderCap)
    throw TooLarge("matrix order " + std::to_string(n) + " exceeds the dense eigensolve cap");
  for (double v : m.data())
    if (!std::isfinite(v)) throw std::invalid_argument("matrix has a non-finite entry");

  Eigen::Map<const Eigen::MatrixXd> a(m.data().data(), n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed to converge");

  Spectrum out;
  out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  const double fro = a.norm();
  if (fro > 0.0) {
    const Eigen::MatrixXd residual =
        a * solver.eigenvectors() - solver.eigenvectors() * solver.eigenvalues().asDiagonal();
    out.residual_tol = residual.colwise().norm().maxCoeff() / fro;
  }
  if (out.residual_tol > tol)
    throw std::runtime_error("eigensolver residual " + std::to_string(out.residual_tol) +
                             " exceeds tolerance");
  return out;
}

long long modular_rank(const IntegerMatrix& m, std::uint32_t prime) {
  if (m.rows == 0 || m.cols == 0) return 0;
  // Fewer rows means less elimination work; rank is transpose-invariant.
  if (m.rows > m.cols) return modular_rank(m.transposed(), prime);

  const int rows = m.rows, cols = m.cols;
  const std::uint64_t p = prime;
  std::vector<std::uint64_t> a(m.a.size());
  for (std::size_t i = 0; i < m.a.size(); ++i) {
    std::int64_t v = m.a[i] % static_cast<std::int64_t>(p);
    if (v < 0) v += static_cast<std::int64_t>(p);
    a[i] = static_cast<std::uint64_t>(v);
  }

  auto modpow = [p](std::uint64_t base, std::uint64_t exp) {
    std::uint64_t acc = 1;
    while (exp) {
      if (exp & 1) acc = acc * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return acc;
  };

  long long rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = static_cast<int>(rank); r < rows; ++r) {
      if (a[static_cast<std::size_t>(r) * cols + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      std::swap_ranges(a.begin() + static_cast<std::size_t>(pivot) * cols + col,
                       a.begin() + static_cast<std::size_t>(pivot) * cols + cols,
                       a.begin() + static_cast<std::size_t>(rank) * cols + col);
    const std::uint64_t* prow = &a[static_cast<std::size_t>(rank) * cols];
    const std::uint64_t inv = modpow(prow[col], p - 2);
    for (int r = static_cast<int>(rank) + 1; r < rows; ++r) {
      std::uint64_t* row = &a[static_cast<std::size_t>(r) * cols];
      const std::uint64_t f = row[col] * inv % p;
      if (f == 0) continue;
      const std::uint64_t neg = p - f;
      for (int j = col; j < cols; ++j) row[j] = (row[j] + neg * prow[j]) % p;
    }
    ++rank;
  }
  return rank;
}

long long bareiss_rank(const IntegerMatrix& m) {
  using boost::multiprecision::cpp_int;
  const int rows = m.rows, cols = m.cols;
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<cpp_int>> a(static_cast<std::size_t>(rows),
                                      std::vector<cpp_int>(static_cast<std::size_t>(cols)));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);

  cpp_int prev = 1;
  int rank = 0;
  int col = 0;
  for (; rank < rows && col < cols; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
    const auto& prow = a[static_cast<std::size_t>(rank)];
    for (int r = rank + 1; r < rows; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      for (int j = col + 1; j < cols; ++j)
        row[static_cast<std::size_t>(j)] =
            (row[static_cast<std::size_t>(j)] * prow[static_cast<std::size_t>(col)] -
             row[static_cast<std::size_t>(col)] * prow[static_cast<std::size_t>(j)]) /
            prev;
      row[static_cast<std::size_t>(col)] = 0;
    }
    prev = prow[static_cast<std::size_t>(col)];
    ++rank;
  }
  return rank;
}

long long integer_rank(const IntegerMatrix& m) {
  const long long r1 = modular_rank(m, kRankPrimeA);
  const long long r2 = modular_rank(m, kRankPrimeB);
  if (r1 == r2) return r1;
  return bareiss_rank(m);
}

long long binomial_capped(long long n, long long k, long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long result = 1;
  // Partial products C(n-k+i, i) increase toward C(n,k), so saturating on
  // overflow is sound.
  for (long long i = 1; i <= k; ++i) {
    const long long factor = n - k + i;
    if (result > std::numeric_limits<long long>::max() / factor) return cap;
    result = result * factor / i;
    if (result >= cap) return cap;
  }
  return result;
}

std::vector<std::vector<int>> lex_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

NearPair near_pair(const std::vector<int>& s, const std::vector<int>& t) {
  NearPair out;
  int pi = -1, pj = -1;
  std::size_t a = 0, b = 0;
  int unique_s = 0, unique_t = 0;
  while (a < s.size() || b < t.size()) {
    if (a < s.size() && b < t.size() && s[a] == t[b]) {
      ++a;
      ++b;
    } else if (b == t.size() || (a < s.size() && s[a] < t[b])) {
      if (++unique_s > 1) return out;
      out.i = s[a];
      pi = static_cast<int>(a);
      ++a;
    } else {
      if (++unique_t > 1) return out;
      out.j = t[b];
      pj = static_cast<int>(b);
      ++b;
    }
  }
  if (unique_s != 1 || unique_t != 1) return out;
  out.sign = ((pi + pj) % 2 == 0) ? 1 : -1;
  return out;
}

SymmetricMatrix additive_compound(const SymmetricMatrix& m, int k, long long cap) {
  const int n = m.order();
  if (k < 1 || k > n) throw std::invalid_argument("compound order k out of range");
  if (binomial_capped(n, k, cap + 1) > cap)
    throw TooLarge("additive compound dimension C(" + std::to_string(n) + "," +
                   std::to_string(k) + ") exceeds the cap");
  const auto subsets = lex_subsets(n, k);
  const int order = static_cast<int>(subsets.size());
  SymmetricMatrix out(order);
  for (int a = 0; a < order; ++a) {
    double diag = 0.0;
    for (int i : subsets[static_cast<std::size_t>(a)]) diag += m(i, i);
    out.set(a, a, diag);
    for (int b = a + 1; b < order; ++b) {
      const NearPair np =
          near_pair(subsets[static_cast<std::size_t>(a)], subsets[static_cast<std::size_t>(b)]);
      if (np.sign != 0) out.set(a, b, np.sign * m(np.i, np.j));
    }
  }
  return out;
}

namespace {

struct HeapEntry {
  double sum;
  std::vector<int> idx;  // strictly increasing positions into the value list
};

struct HeapCompare {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const { return a.sum > b.sum; }
};

// Visits k-subsets of positions 0..n-1 in nondecreasing order of summed
// values. Successors replace one position of the trailing consecutive run
// with (max position + 1); a seen-set guards against duplicates. Returns the
// number of subsets visited before `visit` stopped the walk.
long long enumerate_increasing_sums(const std::vector<double>& values, int k,
                                    const std::function<bool(const HeapEntry&)>& visit) {
  const int n = static_cast<int>(values.size());
  if (k < 1 || k > n) throw std::invalid_argument("subset size out of range");
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapCompare> heap;
  std::set<std::vector<int>> seen;

  HeapEntry root;
  root.idx.resize(static_cast<std::size_t>(k));
  root.sum = 0.0;
  for (int i = 0; i < k; ++i) {
    root.idx[static_cast<std::size_t>(i)] = i;
    root.sum += values[static_cast<std::size_t>(i)];
  }
  heap.push(root);
  seen.insert(root.idx);

  long long visited = 0;
  while (!heap.empty()) {
    HeapEntry top = std::move(const_cast<HeapEntry&>(heap.top()));
    heap.pop();
    ++visited;
    if (!visit(top)) return visited;

    const int next = top.idx[static_cast<std::size_t>(k - 1)] + 1;
    if (next >= n) continue;
    int run_start = k - 1;
    while (run_start > 0 && top.idx[static_cast<std::size_t>(run_start)] ==
                                top.idx[static_cast<std::size_t>(run_start - 1)] + 1)
      --run_start;
    for (int pos = run_start; pos < k; ++pos) {
      HeapEntry succ;
      succ.sum = top.sum - values[static_cast<std::size_t>(top.idx[static_cast<std::size_t>(pos)])] +
                 values[static_cast<std::size_t>(next)];
      succ.idx.reserve(static_cast<std::size_t>(k));
      for (int q = 0; q < k; ++q)
        if (q != pos) succ.idx.push_back(top.idx[static_cast<std::size_t>(q)]);
      succ.idx.push_back(next);
      if (seen.insert(succ.idx).second) heap.push(std::move(succ));
    }
  }
  return visited;
}

void require_ascending(const std::vector<double>& values) {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i - 1] > values[i])
      throw std::invalid_argument("eigenvalue list must be ascending");
}

}  // namespace

double s_stat(const std::vector<double>& ascending, int k, long long i) {
  require_ascending(ascending);
  if (k < 0) throw std::invalid_argument("subset size must be >= 0");
  const long long total = binomial_capped(static_cast<long long>(ascending.size()), k,
                                          std::numeric_limits<long long>::max() / 2);
  if (i < 1 || i > total) throw std::invalid_argument("subset-sum index out of range");
  if (k == 0) return 0.0;  // the empty sum
  double answer = 0.0;
  long long remaining = i;
  enumerate_increasing_sums(ascending, k, [&](const HeapEntry& e) {
    if (--remaining == 0) {
      answer = e.sum;
      return false;
    }
    return true;
  });
  return answer;
}

long long count_subset_sums_at_most(const std::vector<double>& ascending, int k,
                                    double threshold) {
  require_ascending(ascending);
  if (k == 0) return threshold + kCountCushionRel >= 0.0 ? 1 : 0;  // the empty sum
  if (ascending.empty() || k < 1 || k > static_cast<int>(ascending.size())) return 0;
  double max_abs = 0.0;
  for (double v : ascending) max_abs = std::max(max_abs, std::abs(v));
  const double scale = std::max(1.0, static_cast<double>(k) * max_abs);
  const double cushioned = threshold + kCountCushionRel * scale;
  long long count = 0;
  enumerate_increasing_sums(ascending, k, [&](const HeapEntry& e) {
    if (e.sum > cushioned) return false;
    ++count;
    return true;
  });
  return count;
}

double gershgorin_upper(const SymmetricMatrix& m) {
  const int n = m.order();
  if (n == 0) return -std::numeric_limits<double>::infinity();
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    double row = m(i, i);
    for (int j = 0; j < n; ++j)
      if (j != i) row += std::abs(m(i, j));
    best = std::max(best, row);
  }
  return best;
}

}  // namespace lapbound
