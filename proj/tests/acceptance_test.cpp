// Acceptance suite: runs every certification criterion at zero tolerance
// (exact integer/rational equality) and prints one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "genperm/counting.hpp"
#include "genperm/faces.hpp"
#include "genperm/minkowski.hpp"
#include "genperm/oracle.hpp"
#include "genperm/series.hpp"

using namespace genperm;

namespace {

int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<bool()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::printf("%s criterion %2d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL",
              number, label.c_str(), static_cast<long long>(ms),
              error.empty() ? "" : " error: ", error.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::vector<int> all_chains_up_to(int max_dim, int ell_limit) {
  // Encodes chains as flat lists separated by -1; decoded by the caller.
  std::vector<int> encoded;
  for (int l = 1; l <= ell_limit; ++l) {
    std::vector<int> chain(l, 0);
    while (true) {
      for (int v : chain) encoded.push_back(v);
      encoded.push_back(-1);
      int pos = l - 1;
      while (pos >= 0 && chain[pos] == max_dim) --pos;
      if (pos < 0) break;
      ++chain[pos];
      for (int t = pos + 1; t < l; ++t) chain[t] = chain[pos];
    }
  }
  return encoded;
}

std::vector<std::vector<int>> decode_chains(const std::vector<int>& encoded) {
  std::vector<std::vector<int>> chains;
  std::vector<int> current;
  for (int v : encoded) {
    if (v == -1) {
      chains.push_back(current);
      current.clear();
    } else {
      current.push_back(v);
    }
  }
  return chains;
}

Rat random_nonneg(std::mt19937_64& rng, int num_max = 12, int den_max = 6) {
  return Rat(static_cast<int>(rng() % (num_max + 1)),
             1 + static_cast<int>(rng() % den_max));
}

}  // namespace

int main() {
  criterion(1, "vertex counts formula vs oracle, 2<=k<=n<=7", [] {
    for (int n = 2; n <= 7; ++n) {
      for (int k = 2; k <= n; ++k) {
        const Int expected = factorial(n) / factorial(k - 1);
        if (Int(vertices(n, k).size()) != expected) return false;
        const IntPolynomial oracle =
            f_vector_oracle(SimplexFamily::uniform(n, k));
        if (oracle.coefficient(0) != expected) return false;
      }
    }
    return true;
  });

  criterion(2, "edge counts by kind vs oracle zero patterns, n<=6", [] {
    for (int n = 2; n <= 6; ++n) {
      for (int k = 2; k <= n; ++k) {
        const EdgeCounts formula = edge_counts(n, k);
        Int first(0);
        Int second(0);
        for (const OracleFace& f :
             enumerate_faces_oracle(SimplexFamily::uniform(n, k))) {
          if (f.dim != 1) continue;
          const int zeros =
              n - std::popcount(f.decomposition.union_support());
          if (zeros == k - 1) {
            first += 1;
          } else if (zeros == k - 2) {
            second += 1;
          } else {
            return false;
          }
        }
        if (first != formula.first_kind) return false;
        if (second != formula.second_kind) return false;
        if (first + second != Int(n - 1) * factorial(n) / (2 * factorial(k - 1)))
          return false;
      }
    }
    return true;
  });

  criterion(3, "f-vector formula vs oracle (n<=6) and simplex form (n<=8)", [] {
    if (!(f_polynomial(4, 3) ==
          IntPolynomial({Int(12), Int(18), Int(8), Int(1)}))) {
      return false;
    }
    for (int n = 2; n <= 6; ++n) {
      for (int k = 2; k <= n; ++k) {
        if (!(f_polynomial(n, k) ==
              f_vector_oracle(SimplexFamily::uniform(n, k)))) {
          return false;
        }
      }
    }
    for (int n = 2; n <= 8; ++n) {
      IntPolynomial simplex;
      for (int d = 0; d <= n - 1; ++d) simplex.add_term(d, binomial(n, d + 1));
      if (!(f_polynomial(n, n) == simplex)) return false;
    }
    return true;
  });

  criterion(4, "simplicity: each vertex meets n-1 oracle edges, n<=6", [] {
    for (int n = 2; n <= 6; ++n) {
      for (int k = 2; k <= n; ++k) {
        const auto faces = enumerate_faces_oracle(SimplexFamily::uniform(n, k));
        std::vector<const OracleFace*> verts;
        std::vector<const OracleFace*> edges;
        for (const auto& f : faces) {
          if (f.dim == 0) verts.push_back(&f);
          if (f.dim == 1) edges.push_back(&f);
        }
        for (const auto* v : verts) {
          int incident = 0;
          for (const auto* e : edges) {
            if (v->decomposition.componentwise_subset_of(e->decomposition)) {
              ++incident;
            }
          }
          if (incident != n - 1) return false;
        }
      }
    }
    return true;
  });

  criterion(5, "flag counts: formula = enumeration = oracle, n<=5, l<=3", [] {
    for (int n = 2; n <= 5; ++n) {
      const auto chains = decode_chains(all_chains_up_to(n - 1, 3));
      for (int k = 2; k <= n; ++k) {
        const SimplexFamily fam = SimplexFamily::uniform(n, k);
        const IntPolynomial f = f_polynomial(n, k);
        for (const auto& chain : chains) {
          const Int formula = flag_count_simple(f, n - 1, chain);
          const Int enumerated = count_flags(n, k, chain,
                                             FlagMethod::kEnumerate);
          const Int oracle = flag_count_oracle(fam, chain);
          if (formula != enumerated || formula != oracle) return false;
        }
      }
    }
    return true;
  });

  criterion(6, "valid OPPs per dimension equal the f-vector, n<=7", [] {
    for (int n = 2; n <= 7; ++n) {
      for (int k = 2; k <= n; ++k) {
        const IntPolynomial f = f_polynomial(n, k);
        IntPolynomial histogram;
        for (const Opp& face : enumerate_faces(n, k)) {
          histogram.add_term(face.dim(), Int(1));
        }
        if (!(histogram == f)) return false;
      }
    }
    return true;
  });

  criterion(7, "series extraction equals flag counts, k<=4, n<=7, l<=2", [] {
    for (int k = 2; k <= 4; ++k) {
      const BiSeries xi1 = xi_series(k, 1);
      const BiSeries xi2 = xi_series(k, 2);
      for (int n = k; n <= 7; ++n) {
        const IntPolynomial f = f_polynomial(n, k);
        for (int s1 = 0; s1 <= n - 1; ++s1) {
          const Int expect1 = flag_count_simple(f, n - 1, {s1});
          if (extract_flag_count(xi1, n, {s1}, 1) != expect1) return false;
          for (int s2 = s1; s2 <= n - 1; ++s2) {
            if (s2 - s1 > xi2.caps().s) continue;
            const Int expect2 = flag_count_simple(f, n - 1, {s1, s2});
            if (extract_flag_count(xi2, n, {s1, s2}, 2) != expect2) {
              return false;
            }
          }
        }
      }
    }
    return true;
  });

  criterion(8, "k=2 series equals the closed form to caps 8, l in {1,2,3}", [] {
    for (int ell = 1; ell <= 3; ++ell) {
      const SeriesCaps caps{8, 6, 8};
      const BiSeries xi = xi_series(2, ell, caps);
      const BiSeries closed = permutahedron_xi_series(ell, caps);
      // The closed form also covers the single point (one extra y term).
      const BiSeries adjusted =
          series_add(xi, BiSeries::monomial(xi.caps(), 0, 0, 1, 1));
      if (!(adjusted == truncated(closed, adjusted.caps()))) return false;
    }
    return true;
  });

  criterion(9, "Stirling series coefficients (n<=10) and rooted identity", [] {
    const BiSeries t = touchard_series(10, 10);
    for (int n = 0; n <= 10; ++n) {
      for (int k = 0; k <= n; ++k) {
        if (t.coefficient(k, 0, n) != Rat(stirling2(n, k), factorial(n))) {
          return false;
        }
      }
    }
    for (unsigned N = 1; N <= 12; ++N) {
      for (unsigned m = 1; m <= N; ++m) {
        Int lhs(0);
        for (unsigned i = 1; i <= N - m + 1; ++i) {
          lhs += binomial(N, i) * stirling2(N - i, m - 1);
        }
        if (lhs != Int(m) * stirling2(N, m)) return false;
      }
    }
    return true;
  });

  criterion(10, "basis decomposition roundtrip, witness, equivalence", [] {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 8);
      std::vector<Rat> y;
      for (int k = 0; k < n; ++k) y.push_back(random_nonneg(rng));
      std::vector<Rat> v(n, Rat(0));
      for (int k = 1; k <= n; ++k) {
        const VertexVector b = basis_vector(n, k);
        for (int i = 0; i < n; ++i) v[i] += y[k - 1] * Rat(b[i]);
      }
      const Decomposition d = decompose(v);
      if (!d.feasible || d.y != y) return false;
    }

    const std::vector<Rat> example{Rat(0), Rat(1), Rat(2), Rat(2)};
    const Decomposition bad = decompose(example);
    if (bad.feasible || bad.witness.order != 2) return false;

    for (int trial = 0; trial < 200; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 7);
      std::vector<Rat> v;
      for (int i = 0; i < n; ++i) {
        v.push_back(Rat(static_cast<int>(rng() % 19) - 6,
                        1 + static_cast<int>(rng() % 4)));
      }
      std::sort(v.begin(), v.end());
      if (decompose(v).feasible != all_diffs_nonneg(v)) return false;
    }
    return true;
  });

  criterion(11, "zeta/mobius inverses and symmetry transport, n<=6", [] {
    std::mt19937_64 rng(2025);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 6);
      const uint32_t full = (1u << n) - 1;
      SubsetCollection y(n);
      const int entries = 1 + static_cast<int>(rng() % (2 * n));
      for (int e = 0; e < entries; ++e) {
        y.set(1 + static_cast<uint32_t>(rng() % full), random_nonneg(rng));
      }
      const SubsetCollection z = zeta(y);
      const MobiusResult back = mobius(z);
      if (!(back.y == y) || !back.all_nonneg) return false;
      if (!(zeta(back.y) == z)) return false;

      // Symmetric weights stay symmetric in both directions.
      SubsetCollection sym(n);
      std::vector<Rat> by_size;
      for (int m = 0; m <= n; ++m) by_size.push_back(random_nonneg(rng));
      for (uint32_t set = 1; set <= full; ++set) {
        sym.set(set, by_size[std::popcount(set)]);
      }
      const SubsetCollection sym_z = zeta(sym);
      if (!is_symmetric(sym) || !is_symmetric(sym_z)) return false;
      if (!is_symmetric(mobius(sym_z).y)) return false;
      if (is_symmetric(y) != is_symmetric(z)) return false;
    }
    return true;
  });

  criterion(12, "rado membership routes, orbit points, scaled failures", [] {
    std::mt19937_64 rng(2026);
    for (int poly = 0; poly < 10; ++poly) {
      const int n = 2 + static_cast<int>(rng() % 5);
      std::vector<Rat> v;
      bool constant = true;
      do {
        v.clear();
        for (int i = 0; i < n; ++i) v.push_back(random_nonneg(rng));
        constant = std::all_of(v.begin(), v.end(),
                               [&](const Rat& x) { return x == v.front(); });
      } while (constant);
      Rat total(0);
      for (const Rat& value : v) total += value;

      for (int trial = 0; trial < 500; ++trial) {
        std::vector<Rat> t;
        for (int i = 0; i < n - 1; ++i) {
          t.push_back(Rat(static_cast<int>(rng() % 17) - 4,
                          1 + static_cast<int>(rng() % 5)));
        }
        if (trial % 2 == 0) {
          Rat partial(0);
          for (const Rat& value : t) partial += value;
          t.push_back(total - partial);
        } else {
          t.push_back(Rat(static_cast<int>(rng() % 17) - 4,
                          1 + static_cast<int>(rng() % 5)));
        }
        if (rado_membership_subsets(t, v) != rado_membership_prefix(t, v)) {
          return false;
        }
      }

      for (const auto& point : p_v_vertices(v)) {
        if (!rado_membership_subsets(point, v)) return false;
        if (!rado_membership_prefix(point, v)) return false;
        std::vector<Rat> scaled;
        for (const Rat& value : point) scaled.push_back(value * Rat(3, 2));
        if (rado_membership_subsets(scaled, v)) return false;
        if (rado_membership_prefix(scaled, v)) return false;
      }
    }
    return true;
  });

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all 12 acceptance criteria passed\n");
  return 0;
}
