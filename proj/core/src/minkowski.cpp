#include "genperm/minkowski.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace genperm {

namespace {

void require(bool cond, const char* message) {
  if (!cond) throw std::invalid_argument(message);
}

}  // namespace

std::vector<Rat> diff(std::span<const Rat> v) {
  require(v.size() >= 2, "diff: need length >= 2");
  std::vector<Rat> d;
  d.reserve(v.size() - 1);
  for (size_t i = 1; i < v.size(); ++i) d.push_back(v[i] - v[i - 1]);
  return d;
}

bool all_diffs_nonneg(std::span<const Rat> v, DiffWitness* witness) {
  std::vector<Rat> current(v.begin(), v.end());
  for (int order = 0; !current.empty(); ++order) {
    for (size_t i = 0; i < current.size(); ++i) {
      if (current[i] < 0) {
        if (witness != nullptr) {
          witness->order = order;
          witness->index = static_cast<int>(i);
        }
        return false;
      }
    }
    if (current.size() == 1) break;
    current = diff(current);
  }
  return true;
}

VertexVector basis_vector(int n, int k) {
  require(k >= 1 && k <= n, "basis_vector: need 1 <= k <= n");
  VertexVector v;
  v.reserve(n);
  for (int i = 0; i < k - 1; ++i) v.push_back(Int(0));
  for (int j = k - 1; j <= n - 1; ++j) v.push_back(binomial(j, k - 1));
  return v;
}

Decomposition decompose(std::span<const Rat> v) {
  require(!v.empty(), "decompose: empty vector");
  require(std::is_sorted(v.begin(), v.end()),
          "decompose: input must be sorted ascending");
  const int n = static_cast<int>(v.size());
  // The basis vectors form a lower-triangular matrix with unit diagonal
  // (row j of column k is C(j-1, k-1), zero for j < k), so forward
  // substitution determines y uniquely.
  std::vector<VertexVector> basis;
  basis.reserve(n);
  for (int k = 1; k <= n; ++k) basis.push_back(basis_vector(n, k));
  for (int col = 0; col < n; ++col) {
    // Unimodular-triangular shape guarantees a unique solution.
    if (basis[col][col] != 1) {
      throw std::logic_error("decompose: basis diagonal is not 1");
    }
    for (int row = 0; row < col; ++row) {
      if (basis[col][row] != 0) {
        throw std::logic_error("decompose: basis is not triangular");
      }
    }
  }
  Decomposition result;
  result.y.assign(n, Rat(0));
  for (int row = 0; row < n; ++row) {
    Rat acc = v[row];
    for (int col = 0; col < row; ++col) {
      acc -= result.y[col] * basis[col][row];
    }
    result.y[row] = acc;  // diagonal entries are all 1
  }
  result.feasible =
      std::all_of(result.y.begin(), result.y.end(),
                  [](const Rat& value) { return value >= 0; });
  if (!result.feasible) {
    result.y.clear();
    const bool nonneg = all_diffs_nonneg(v, &result.witness);
    if (nonneg) {
      // Cannot happen: nonnegative differences characterize feasibility.
      throw std::logic_error("decompose: witness search disagrees");
    }
  }
  return result;
}

SubsetCollection::SubsetCollection(int n) : n_(n) {
  require(n >= 1 && n <= 16, "SubsetCollection: need 1 <= n <= 16");
}

void SubsetCollection::set(uint32_t subset, const Rat& value) {
  require(subset != 0, "SubsetCollection: empty subset");
  require(subset < (1u << n_), "SubsetCollection: subset out of range");
  if (value == 0) {
    entries_.erase(subset);
  } else {
    entries_[subset] = value;
  }
}

Rat SubsetCollection::value(uint32_t subset) const {
  auto it = entries_.find(subset);
  return it == entries_.end() ? Rat(0) : it->second;
}

SubsetCollection zeta(const SubsetCollection& y) {
  SubsetCollection z(y.n());
  const uint32_t full = (1u << y.n()) - 1;
  for (uint32_t set = 1; set <= full; ++set) {
    Rat total(0);
    for (const auto& [subset, value] : y.entries()) {
      if ((subset & ~set) == 0) total += value;
    }
    z.set(set, total);
  }
  return z;
}

MobiusResult mobius(const SubsetCollection& z) {
  MobiusResult result{SubsetCollection(z.n()), true};
  const uint32_t full = (1u << z.n()) - 1;
  for (uint32_t set = 1; set <= full; ++set) {
    Rat total(0);
    const int size = std::popcount(set);
    // Alternating sum over nonempty subsets of `set`.
    for (uint32_t sub = set; sub != 0; sub = (sub - 1) & set) {
      const Rat value = z.value(sub);
      if (value == 0) continue;
      const int codim = size - std::popcount(sub);
      total += (codim % 2 == 0) ? value : -value;
    }
    if (total < 0) result.all_nonneg = false;
    result.y.set(set, total);
  }
  return result;
}

bool is_symmetric(const SubsetCollection& t) {
  std::vector<bool> fixed(t.n() + 1, false);
  std::vector<Rat> by_size(t.n() + 1, Rat(0));
  const uint32_t full = (1u << t.n()) - 1;
  for (uint32_t set = 1; set <= full; ++set) {
    const int size = std::popcount(set);
    const Rat value = t.value(set);
    if (!fixed[size]) {
      fixed[size] = true;
      by_size[size] = value;
    } else if (by_size[size] != value) {
      return false;
    }
  }
  return true;
}

namespace {

// Prefix sums of v sorted descending: bound[m] = sum of the m largest.
std::vector<Rat> descending_prefix_sums(std::span<const Rat> v) {
  std::vector<Rat> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<Rat> prefix{Rat(0)};
  for (const Rat& value : sorted) prefix.push_back(prefix.back() + value);
  return prefix;
}

}  // namespace

bool rado_membership_subsets(std::span<const Rat> t, std::span<const Rat> v) {
  require(t.size() == v.size(), "rado_membership: length mismatch");
  const int n = static_cast<int>(v.size());
  require(n >= 1 && n <= 20, "rado_membership: n out of supported range");
  const std::vector<Rat> bound = descending_prefix_sums(v);
  Rat total(0);
  for (const Rat& value : t) total += value;
  if (total != bound[n]) return false;
  const uint32_t full = (1u << n) - 1;
  for (uint32_t set = 1; set < full; ++set) {
    Rat sum(0);
    for (int i = 0; i < n; ++i) {
      if (set & (1u << i)) sum += t[i];
    }
    if (sum > bound[std::popcount(set)]) return false;
  }
  return true;
}

bool rado_membership_prefix(std::span<const Rat> t, std::span<const Rat> v) {
  require(t.size() == v.size(), "rado_membership: length mismatch");
  const int n = static_cast<int>(v.size());
  const std::vector<Rat> bound = descending_prefix_sums(v);
  // The subset maximizing a size-m sum of t is its m largest entries.
  std::vector<Rat> t_sorted(t.begin(), t.end());
  std::sort(t_sorted.begin(), t_sorted.end(), std::greater<>());
  Rat prefix(0);
  for (int m = 1; m < n; ++m) {
    prefix += t_sorted[m - 1];
    if (prefix > bound[m]) return false;
  }
  prefix += t_sorted[n - 1];
  return prefix == bound[n];
}

std::vector<std::vector<Rat>> p_v_vertices(std::span<const Rat> v,
                                           bool certify) {
  std::vector<Rat> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<Rat>> points;
  do {
    points.push_back(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  if (certify) {
    // A hull point t of the orbit is a vertex iff its own functional is
    // uniquely maximized there.
    for (const auto& t : points) {
      Rat self(0);
      for (size_t i = 0; i < t.size(); ++i) self += t[i] * t[i];
      for (const auto& u : points) {
        if (&u == &t) continue;
        Rat dot(0);
        for (size_t i = 0; i < t.size(); ++i) dot += t[i] * u[i];
        if (dot >= self) {
          throw std::logic_error(
              "p_v_vertices: orbit point failed the vertex certificate");
        }
      }
    }
  }
  return points;
}

int dim_p_v(std::span<const Rat> v) {
  require(!v.empty(), "dim_p_v: empty vector");
  const bool constant =
      std::all_of(v.begin(), v.end(),
                  [&](const Rat& value) { return value == v.front(); });
  return constant ? 0 : static_cast<int>(v.size()) - 1;
}

}  // namespace genperm
