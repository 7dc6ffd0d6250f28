#include "genperm/counting.hpp"

#include <stdexcept>

namespace genperm {

namespace {

void require(bool cond, const char* message) {
  if (!cond) throw std::invalid_argument(message);
}

void require_chain(const std::vector<int>& chain, int max_dim) {
  require(!chain.empty(), "flag chain must be nonempty");
  for (size_t i = 0; i < chain.size(); ++i) {
    require(chain[i] >= 0 && chain[i] <= max_dim,
            "flag chain entry out of range");
    require(i == 0 || chain[i - 1] <= chain[i],
            "flag chain must be nondecreasing");
  }
}

std::vector<unsigned> chain_diffs(const std::vector<int>& chain) {
  std::vector<unsigned> diffs;
  for (size_t i = 1; i < chain.size(); ++i) {
    diffs.push_back(static_cast<unsigned>(chain[i] - chain[i - 1]));
  }
  return diffs;
}

}  // namespace

IntPolynomial f_polynomial(int n, int k) {
  require(2 <= k && k <= n, "f_polynomial: need 2 <= k <= n");
  IntPolynomial f;
  for (int i = 0; i <= k - 1; ++i) {
    for (int j = k - i; j <= n - i; ++j) {
      const Int pair_ways = binomial(n, i) * binomial(n - i, j);
      const int rest = n - i - j;
      for (int p = 0; p <= rest; ++p) {
        const Int ways = pair_ways * ordered_partition_count(rest, p);
        if (ways != 0) f.add_term(n - i - p - 1, ways);
      }
    }
  }
  return f;
}

Int vertex_count(int n, int k) {
  require(2 <= k && k <= n, "vertex_count: need 2 <= k <= n");
  return factorial(n) / factorial(k - 1);
}

EdgeCounts edge_counts(int n, int k) {
  require(2 <= k && k <= n, "edge_counts: need 2 <= k <= n");
  EdgeCounts e;
  e.first_kind = Int(n - k) * factorial(n) / (2 * factorial(k - 1));
  e.second_kind = factorial(n) / (2 * factorial(k - 2));
  return e;
}

Int flag_count_simple(const IntPolynomial& fvec, int d,
                      const std::vector<int>& chain) {
  require_chain(chain, d);
  const int s1 = chain.front();
  return fvec.coefficient(s1) *
         multinomial(static_cast<unsigned>(d - s1), chain_diffs(chain));
}

namespace {

// Expands coeff * x_1^{s1} * (x_2+...+x_ell+1)^{budget} into `poly`.
void expand_block_power(MultiPolynomial& poly, const Int& coeff, int s1,
                        int budget, int ell) {
  std::vector<int> exponents(ell, 0);
  exponents[0] = s1;
  // Recurse over exponents of x_2..x_ell with total at most `budget`.
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == ell) {
      std::vector<unsigned> parts;
      for (int v = 1; v < ell; ++v) {
        parts.push_back(static_cast<unsigned>(exponents[v]));
      }
      poly.add_term(exponents,
                    coeff * multinomial(static_cast<unsigned>(budget), parts));
      return;
    }
    for (int e = 0; e <= left; ++e) {
      exponents[var] = e;
      self(self, var + 1, left - e);
    }
    exponents[var] = 0;
  };
  rec(rec, 1, budget);
}

}  // namespace

MultiPolynomial flag_polynomial(int n, int k, int ell) {
  require(ell >= 1, "flag_polynomial: need ell >= 1");
  const IntPolynomial f = f_polynomial(n, k);
  MultiPolynomial poly;
  for (int s1 = 0; s1 <= f.degree(); ++s1) {
    const Int c = f.coefficient(s1);
    if (c == 0) continue;
    expand_block_power(poly, c, s1, n - 1 - s1, ell);
  }
  return poly;
}

Int perm_flag_count(int n, const std::vector<int>& chain) {
  require(n >= 1, "perm_flag_count: need n >= 1");
  require_chain(chain, n - 1);
  const int s1 = chain.front();
  return ordered_partition_count(n, n - s1) *
         multinomial(static_cast<unsigned>(n - s1 - 1), chain_diffs(chain));
}

}  // namespace genperm
