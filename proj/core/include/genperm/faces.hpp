#pragma once

#include <optional>
#include <vector>

#include "genperm/numbers.hpp"
#include "genperm/vectors.hpp"

namespace genperm {

/// Ordered pseudo-partition (Z, X_0, ..., X_p) of {0,...,n-1}: the canonical
/// identifier of a face of the Minkowski sum of all simplices with k-element
/// support in R^n.  Z collects the coordinates that are zero on the whole
/// face and may be empty; the parts X_0..X_p are nonempty and ordered from
/// low functional value to high.
///
/// Validity: the tuple partitions {0,...,n-1}, 0 <= |Z| <= k-1 and
/// k <= |Z| + |X_0|.  The face dimension is n - |Z| - p - 1; the whole
/// polytope appears as the improper face (Z empty, single part).
struct Opp {
  int n = 0;
  int k = 0;
  std::vector<int> zero_set;              // sorted ascending, possibly empty
  std::vector<std::vector<int>> parts;    // X_0..X_p, each sorted ascending

  int p() const { return static_cast<int>(parts.size()) - 1; }
  int dim() const { return n - static_cast<int>(zero_set.size()) - p() - 1; }
  bool improper() const { return zero_set.empty() && parts.size() == 1; }

  /// Throws std::invalid_argument when the tuple is not a valid OPP for
  /// its (n, k) context.
  void validate() const;

  /// Per-coordinate level: 0 on Z and i+1 on X_i.  Two OPPs describe the
  /// same face iff their level vectors are equal.
  std::vector<int> levels() const;

  /// The representative functional with value 0 on Z and i+1 on X_i.
  FunctionalVector canonical_functional() const;

  bool operator==(const Opp&) const = default;
};

/// Strict ordering by dimension, then lexicographically on (Z, X_0..X_p).
/// Used for deterministic face streams.
bool face_order_less(const Opp& a, const Opp& b);

/// All vertices: the distinct permutations of the coordinate multiset
/// {0 (k-1 times), C(k-1,k-1), C(k,k-1), ..., C(n-1,k-1)}.  There are
/// n!/(k-1)! of them for k >= 2.
std::vector<VertexVector> vertices(int n, int k);

/// The OPP of the face maximizing the functional c, obtained by merging the
/// lower blocks of c's order type into Z so that the retained top blocks
/// cover at least n-k+1 coordinates with as few blocks as possible.
Opp opp_from_functional(const FunctionalVector& c, int n, int k);

/// The vertices lying on the face: those whose |X_p| largest entries sit in
/// coordinates X_p, the next |X_{p-1}| in X_{p-1}, and so on, with all
/// coordinates of Z equal to zero.
std::vector<VertexVector> face_vertices(const Opp& f);

int face_dim(const Opp& f);

/// Whether the face of `inner` is contained in the face of `outer`.
/// Both OPPs must share the same (n, k).
bool face_contains(const Opp& inner, const Opp& outer);

/// Every valid OPP exactly once, sorted by face_order_less.  With dim_filter
/// set, only faces of that dimension.
std::vector<Opp> enumerate_faces(int n, int k,
                                 std::optional<int> dim_filter = std::nullopt);

enum class FlagMethod {
  kFormula,    // simple-polytope product formula
  kEnumerate,  // chain enumeration over OPPs via face_contains
  kBoth,       // run both and require agreement
};

/// Number of chains A_1 <= ... <= A_l of faces with dim(A_i) = chain[i].
/// The chain must be nondecreasing within [0, n-1].
Int count_flags(int n, int k, const std::vector<int>& chain,
                FlagMethod method = FlagMethod::kFormula);

/// Merges consecutive blocks of c's order type on which v is constant
/// (replacing both block values by their average) until every consecutive
/// pair of blocks sees two distinct v-values.  Requires both vectors
/// nondecreasing; the result defines the same face of the polytope of v's
/// permutation orbit.
FunctionalVector v_reduce(const FunctionalVector& c, const VertexVector& v);

}  // namespace genperm
