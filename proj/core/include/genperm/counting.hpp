#pragma once

#include <vector>

#include "genperm/numbers.hpp"
#include "genperm/polynomials.hpp"

namespace genperm {

/// f-polynomial of the Minkowski sum of all k-support simplices in R^n:
/// coefficient of x^d counts d-faces (the improper top face included).
/// Requires 2 <= k <= n.
IntPolynomial f_polynomial(int n, int k);

/// n! / (k-1)!.
Int vertex_count(int n, int k);

struct EdgeCounts {
  Int first_kind;   // edges whose generic points have k-1 zero coordinates
  Int second_kind;  // edges whose generic points have k-2 zero coordinates
  Int total() const { return first_kind + second_kind; }
  bool operator==(const EdgeCounts&) const = default;
};

/// first_kind = (n-k) n!/(2 (k-1)!), second_kind = n!/(2 (k-2)!).
EdgeCounts edge_counts(int n, int k);

/// Flag count of a simple d-polytope from its f-vector:
/// f_{s_1} * multinomial(d - s_1; s_2-s_1, ..., s_l - s_{l-1}).
Int flag_count_simple(const IntPolynomial& fvec, int d,
                      const std::vector<int>& chain);

/// Multivariate flag polynomial in x_1..x_ell: coefficient of
/// x_1^{s_1} x_2^{s_2-s_1} ... equals the number of chains with dimension
/// vector (s_1,...,s_ell).  Computed by exact expansion of
/// (x_2+...+x_ell+1)^{n-1-s_1} against each f-polynomial monomial.
MultiPolynomial flag_polynomial(int n, int k, int ell);

/// Flag count of the standard permutahedron on n coordinates:
/// S(n, n-s_1) (n-s_1)! * multinomial(n-s_1-1; diffs of the chain).
Int perm_flag_count(int n, const std::vector<int>& chain);

}  // namespace genperm
