#pragma once

// Dense symmetric eigensolves with certified residuals, exact integer rank,
// additive compound matrices, and best-first enumeration of k-subset
// eigenvalue sums.

#include <cstdint>
#include <vector>

namespace lapbound {

// Numeric policy, pinned in one place.
inline constexpr int kDenseOrderCap = 4000;         // largest order eigensolved densely
inline constexpr long long kCompoundCap = 4000;     // largest C(n,k) a compound may have
inline constexpr double kDefaultEigTol = 1e-10;     // relative residual tolerance
inline constexpr double kZeroEigRelTol = 1e-8;      // |λ| <= this × ‖M‖_F counts as zero
inline constexpr double kSlackRelTol = 1e-8;        // inequality slack, relative
inline constexpr double kCountCushionRel = 1e-9;    // subset-sum threshold cushion

struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;  // row-major, rows*cols entries

  IntegerMatrix() = default;
  IntegerMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  IntegerMatrix transposed() const;
  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  IntegerMatrix operator+(const IntegerMatrix& rhs) const;
  IntegerMatrix operator-(const IntegerMatrix& rhs) const;
  bool operator==(const IntegerMatrix& rhs) const = default;
  bool is_zero() const;
  bool is_symmetric() const;
};

// Dense real symmetric matrix; set() writes both (i,j) and (j,i), so the
// stored entries are symmetric exactly, not merely up to rounding.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int n);
  static SymmetricMatrix from_integer(const IntegerMatrix& m);  // m must be symmetric

  int order() const { return n_; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, double v);
  double frobenius_norm() const;
  const std::vector<double>& data() const { return a_; }
  bool operator==(const SymmetricMatrix& rhs) const = default;

 private:
  int n_ = 0;
  std::vector<double> a_;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending, length = matrix order
  double residual_tol = 0.0;        // achieved max_i ‖Mv_i − λ_i v_i‖ / ‖M‖_F
};

// All eigenvalues of a dense symmetric matrix, ascending. Throws
// std::invalid_argument on non-finite entries, TooLarge past kDenseOrderCap,
// std::runtime_error if the certified residual exceeds tol.
Spectrum sym_eigenvalues(const SymmetricMatrix& m, double tol = kDefaultEigTol);

// Exact rank over the rationals. Computed modulo two fixed 31-bit primes; a
// mismatch falls back to exact fraction-free elimination over big integers.
long long integer_rank(const IntegerMatrix& m);

// The two routes behind integer_rank, exposed so tests can cross them.
long long modular_rank(const IntegerMatrix& m, std::uint32_t prime);
long long bareiss_rank(const IntegerMatrix& m);

inline constexpr std::uint32_t kRankPrimeA = 2147483647u;  // 2^31 - 1
inline constexpr std::uint32_t kRankPrimeB = 2147483629u;

// C(n,k), saturating at `cap` instead of overflowing.
long long binomial_capped(long long n, long long k, long long cap);

// All k-subsets of {0,...,n-1} in lexicographic order.
std::vector<std::vector<int>> lex_subsets(int n, int k);

// For equal-size increasing lists with |S∩T| = |S|-1: the elements i = S\T,
// j = T\S and the product of removal signs (-1)^{pos_S(i)} (-1)^{pos_T(j)}.
// sign = 0 when the lists differ in more than one element.
struct NearPair {
  int i = -1;
  int j = -1;
  int sign = 0;
};
NearPair near_pair(const std::vector<int>& s, const std::vector<int>& t);

// Additive compound: rows and columns indexed by lex_subsets(order, k).
// Diagonal (S,S) is Σ_{i∈S} M(i,i); for |S∩T| = k-1 with S\T = {i}, T\S = {j}
// the entry is (-1)^{pos_S(i)} (-1)^{pos_T(j)} M(i,j); all else zero. Throws
// TooLarge when C(n,k) exceeds the cap.
SymmetricMatrix additive_compound(const SymmetricMatrix& m, int k,
                                  long long cap = kCompoundCap);

// i-th smallest (1-based) sum of k distinct entries of the list, as a
// multiset over index subsets. Best-first heap enumeration; expects the list
// ascending and 1 <= i <= C(n,k).
double s_stat(const std::vector<double>& ascending, int k, long long i);

// Number of k-subsets whose sum is <= threshold + kCountCushionRel·scale,
// where scale = max(1, k·max|entry|). Same enumeration, stopped at the first
// sum past the cushioned threshold.
long long count_subset_sums_at_most(const std::vector<double>& ascending, int k,
                                    double threshold);

// max_i ( M(i,i) + Σ_{j≠i} |M(i,j)| ), an upper bound for the largest
// eigenvalue of a symmetric matrix; -inf for an empty matrix.
double gershgorin_upper(const SymmetricMatrix& m);

}  // namespace lapbound
