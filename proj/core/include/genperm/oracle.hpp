#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "genperm/numbers.hpp"
#include "genperm/polynomials.hpp"
#include "genperm/vectors.hpp"

namespace genperm {

/// A Minkowski sum of coordinate simplices, one per support subset.
/// Subsets are bitmasks over {0,...,n-1}.
struct SimplexFamily {
  int n = 0;
  std::vector<uint32_t> supports;

  /// All subsets of size k, in ascending mask order.
  static SimplexFamily uniform(int n, int k);
};

/// A face of the sum, recorded by the argmax subset of each summand.
/// By the uniqueness of the summand decomposition, two faces are equal iff
/// these tuples are equal.
struct FaceDecomposition {
  std::vector<uint32_t> argmax;  // parallel to SimplexFamily::supports

  bool componentwise_subset_of(const FaceDecomposition& other) const;
  uint32_t union_support() const;

  bool operator==(const FaceDecomposition&) const = default;
  auto operator<=>(const FaceDecomposition&) const = default;
};

/// Calls `emit` once per ordered set partition of {0,...,n-1} (blocks from
/// the lowest functional value to the highest).  Guarded to n <= 8.
void order_types(int n, const std::function<void(const OrderType&)>& emit);

/// Number of ordered set partitions of an n-set (Fubini number).
Int ordered_set_partition_total(int n);

/// For each summand, the argmax of any functional with this order type:
/// the intersection with the highest block the support meets.
FaceDecomposition face_from_ordertype(const OrderType& ot,
                                      const SimplexFamily& fam);

/// Dimension of the face as the rank over the rationals of the difference
/// directions e_i - e_j spanned inside each argmax set, computed by
/// fraction-free Gaussian elimination.
int face_dim_oracle(const FaceDecomposition& d, int n);

/// Rank of an integer matrix by Bareiss fraction-free elimination.
int integer_matrix_rank(std::vector<std::vector<Int>> m);

/// A deduplicated face together with its dimension and the block levels of
/// one functional that produced it (level of coordinate i = index of its
/// order-type block, lowest block = 0).
struct OracleFace {
  FaceDecomposition decomposition;
  int dim = 0;
  std::vector<int> rep_levels;
};

/// Every face of the sum exactly once (the whole polytope included),
/// sorted by dimension then by decomposition.  Guarded to n <= 7.
std::vector<OracleFace> enumerate_faces_oracle(const SimplexFamily& fam);

/// Face counts by dimension, from first principles.
IntPolynomial f_vector_oracle(const SimplexFamily& fam);

/// Number of chains of faces with the given dimension vector, containment
/// tested componentwise on decompositions.  Guarded to n <= 6 and chains of
/// length <= 3.
Int flag_count_oracle(const SimplexFamily& fam, const std::vector<int>& chain);

/// All distinct sums of one simplex vertex per summand, each restricted to
/// its argmax set: the generating points of the face (its vertices are the
/// extreme ones among them).
std::vector<VertexVector> decomposition_points(const SimplexFamily& fam,
                                               const FaceDecomposition& d);

}  // namespace genperm
