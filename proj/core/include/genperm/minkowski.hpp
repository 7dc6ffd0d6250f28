#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "genperm/faces.hpp"
#include "genperm/numbers.hpp"

namespace genperm {

/// Vector of consecutive differences (v_2 - v_1, ..., v_n - v_{n-1}).
/// Requires length >= 2.
std::vector<Rat> diff(std::span<const Rat> v);

/// Position of a negative entry in an iterated difference: `order` is the
/// number of difference applications, `index` the 0-based position within
/// that difference vector.
struct DiffWitness {
  int order = 0;
  int index = 0;
  bool operator==(const DiffWitness&) const = default;
};

/// True iff every iterated difference of v (including order 0, v itself)
/// is entrywise nonnegative.  On failure, *witness (if given) receives the
/// first negative entry scanning by ascending order, then position.
bool all_diffs_nonneg(std::span<const Rat> v, DiffWitness* witness = nullptr);

/// The k-th basis weight vector (0,...,0, C(k-1,k-1), ..., C(n-1,k-1))
/// with k-1 leading zeros; for k = 1 the all-ones vector.
VertexVector basis_vector(int n, int k);

/// Result of expressing v as sum_k y_k * basis_vector(n, k).
struct Decomposition {
  bool feasible = false;
  std::vector<Rat> y;     // meaningful when feasible
  DiffWitness witness;    // meaningful when infeasible
};

/// Solves the triangular system v = sum_k y_k basis_vector(n,k).  Feasible
/// iff every y_k >= 0, which happens exactly when all iterated differences
/// of v are nonnegative; the infeasible branch carries a difference witness.
/// The input must be sorted ascending (throws otherwise).
Decomposition decompose(std::span<const Rat> v);

/// Rational weights indexed by nonempty subsets of {0,...,n-1}, stored
/// sparsely (absent subsets weigh 0).  Subsets are encoded as bitmasks.
class SubsetCollection {
 public:
  explicit SubsetCollection(int n);

  int n() const { return n_; }
  void set(uint32_t subset, const Rat& value);
  Rat value(uint32_t subset) const;
  const std::map<uint32_t, Rat>& entries() const { return entries_; }

  bool operator==(const SubsetCollection&) const = default;

 private:
  int n_ = 0;
  std::map<uint32_t, Rat> entries_;
};

/// z_I = sum over subsets J of I of y_J.
SubsetCollection zeta(const SubsetCollection& y);

struct MobiusResult {
  SubsetCollection y;
  /// Whether every inverted weight is nonnegative, i.e. whether the
  /// hyperplane description defines the same polytope as a Minkowski sum
  /// with these weights.
  bool all_nonneg = true;
};

/// Inverse of zeta: y_I = sum_{J subset of I} (-1)^{|I|-|J|} z_J.
MobiusResult mobius(const SubsetCollection& z);

/// True iff the value of every subset depends only on its cardinality.
bool is_symmetric(const SubsetCollection& t);

/// Membership of t in the permutation polytope of v, checked against all
/// 2^n - 2 proper nonempty subsets: equal totals, and every subset sum of t
/// bounded by the corresponding top-|I| prefix sum of v.
bool rado_membership_subsets(std::span<const Rat> t, std::span<const Rat> v);

/// Same predicate via the sorted-prefix shortcut: only the m largest
/// entries of t are compared against the m largest entries of v.
bool rado_membership_prefix(std::span<const Rat> t, std::span<const Rat> v);

/// The distinct coordinate permutations of v.  With certify = true, checks
/// the strict self-functional certificate <t, u> < <t, t> for every other
/// orbit point u, confirming each point is an actual vertex.
std::vector<std::vector<Rat>> p_v_vertices(std::span<const Rat> v,
                                           bool certify = false);

/// 0 when all coordinates of v coincide, n-1 otherwise.
int dim_p_v(std::span<const Rat> v);

}  // namespace genperm
