#include <doctest.h>

#include <vector>

#include "genperm/counting.hpp"
#include "genperm/faces.hpp"

using namespace genperm;

namespace {

IntPolynomial poly(std::initializer_list<int> ascending_coeffs) {
  std::vector<Int> c;
  for (int v : ascending_coeffs) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

// ((x+1)^n - 1)/x, the face polynomial of the (n-1)-simplex.
IntPolynomial simplex_f_polynomial(int n) {
  IntPolynomial f;
  for (int d = 0; d <= n - 1; ++d) {
    f.add_term(d, binomial(n, d + 1));
  }
  return f;
}

// Chains of nonempty subsets S_1 <= ... <= S_l of {0,...,n-1} with
// |S_i| = chain[i] + 1, counted directly; these are the flag counts of the
// (n-1)-simplex.
Int simplex_flags_by_subsets(int n, const std::vector<int>& chain) {
  // Chains of nested subsets with prescribed sizes: choose the largest,
  // then each next inside the previous.
  Int total(1);
  int outer = n;
  for (size_t t = chain.size(); t-- > 0;) {
    const int size = chain[t] + 1;
    total *= binomial(outer, size);
    outer = size;
  }
  return total;
}

}  // namespace

TEST_CASE("f-polynomial worked instances") {
  CHECK(f_polynomial(4, 3) == poly({12, 18, 8, 1}));
  CHECK(f_polynomial(3, 2) == poly({6, 6, 1}));
  for (int n = 2; n <= 8; ++n) {
    CHECK(f_polynomial(n, n) == simplex_f_polynomial(n));
  }
  CHECK_THROWS_AS(f_polynomial(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(f_polynomial(4, 5), std::invalid_argument);
}

TEST_CASE("f-polynomial low coefficients match vertex and edge counts") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 2; k <= n; ++k) {
      const IntPolynomial f = f_polynomial(n, k);
      CHECK(f.coefficient(0) == vertex_count(n, k));
      if (n >= 2) CHECK(f.coefficient(1) == edge_counts(n, k).total());
      CHECK(f.coefficient(n - 1) == 1);
    }
  }
}

TEST_CASE("euler relation") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 2; k <= n; ++k) {
      const IntPolynomial f = f_polynomial(n, k);
      // Including the improper top face the alternating sum is exactly 1;
      // the proper faces alone give the Euler characteristic of a sphere
      // of dimension n-2.
      Int alternating(0);
      for (int d = 0; d <= f.degree(); ++d) {
        alternating += (d % 2 == 0 ? f.coefficient(d) : -f.coefficient(d));
      }
      CHECK(alternating == 1);
      const Int top = (n - 1) % 2 == 0 ? Int(1) : Int(-1);
      const Int sphere = (n - 2) % 2 == 0 ? Int(2) : Int(0);
      CHECK(alternating - top == sphere);
    }
  }
}

TEST_CASE("edge counts") {
  const EdgeCounts e43 = edge_counts(4, 3);
  CHECK(e43.first_kind == 6);
  CHECK(e43.second_kind == 12);
  CHECK(e43.total() == 18);
  CHECK(vertex_count(4, 3) == 12);

  CHECK(edge_counts(3, 2).total() == 6);
  CHECK(vertex_count(3, 2) == 6);

  for (int k = 2; k <= 7; ++k) {
    CHECK(edge_counts(k, k).first_kind == 0);
  }
}

TEST_CASE("simple-polytope flag formula") {
  const IntPolynomial hexagon = f_polynomial(3, 2);
  CHECK(flag_count_simple(hexagon, 2, {0, 1}) == 12);
  CHECK(flag_count_simple(hexagon, 2, {2}) == 1);
  const IntPolynomial f43 = f_polynomial(4, 3);
  CHECK(flag_count_simple(f43, 3, {0, 1, 2}) == 72);
  CHECK_THROWS_AS(flag_count_simple(f43, 3, {1, 0}), std::invalid_argument);
}

TEST_CASE("flag polynomial worked coefficients") {
  const MultiPolynomial p322 = flag_polynomial(3, 2, 2);
  CHECK(p322.coefficient({0, 1}) == 12);
  const MultiPolynomial p432 = flag_polynomial(4, 3, 2);
  CHECK(p432.coefficient({3, 0}) == 1);

  // One variable recovers the f-polynomial.
  const MultiPolynomial p1 = flag_polynomial(4, 3, 1);
  const IntPolynomial f = f_polynomial(4, 3);
  for (int d = 0; d <= f.degree(); ++d) {
    CHECK(p1.coefficient({d}) == f.coefficient(d));
  }
}

TEST_CASE("flag polynomial coefficients count chains") {
  for (int n = 3; n <= 5; ++n) {
    for (int k = 2; k <= n; ++k) {
      for (int ell = 2; ell <= 3; ++ell) {
        const MultiPolynomial poly = flag_polynomial(n, k, ell);
        // Probe every monomial against the chain it encodes.
        for (const auto& [exponents, coeff] : poly.terms) {
          std::vector<int> chain{exponents[0]};
          for (int t = 1; t < ell; ++t) {
            chain.push_back(chain.back() + exponents[t]);
          }
          if (chain.back() > n - 1) continue;
          CHECK(coeff == count_flags(n, k, chain, FlagMethod::kEnumerate));
        }
      }
    }
  }
}

TEST_CASE("flag polynomial of the simplex counts subset chains") {
  for (int n = 2; n <= 5; ++n) {
    const MultiPolynomial poly = flag_polynomial(n, n, 2);
    for (int s1 = 0; s1 <= n - 1; ++s1) {
      for (int s2 = s1; s2 <= n - 1; ++s2) {
        CHECK(poly.coefficient({s1, s2 - s1}) ==
              simplex_flags_by_subsets(n, {s1, s2}));
      }
    }
  }
}

TEST_CASE("standard permutahedron flag counts") {
  CHECK(perm_flag_count(3, {0, 1}) == 12);
  CHECK(perm_flag_count(3, {2}) == 1);
  CHECK(perm_flag_count(4, {1, 2}) == 72);
}

TEST_CASE("permutahedron flags agree with the simple-polytope formula") {
  for (int n = 2; n <= 6; ++n) {
    const IntPolynomial f = f_polynomial(n, 2);
    for (int s1 = 0; s1 <= n - 1; ++s1) {
      for (int s2 = s1; s2 <= n - 1; ++s2) {
        CHECK(perm_flag_count(n, {s1, s2}) ==
              flag_count_simple(f, n - 1, {s1, s2}));
      }
    }
  }
}
