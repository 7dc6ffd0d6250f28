#include "genperm/faces.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "genperm/counting.hpp"

namespace genperm {

namespace {

void require(bool cond, const char* message) {
  if (!cond) throw std::invalid_argument(message);
}

}  // namespace

OrderType order_type_of(const FunctionalVector& c) {
  const int n = static_cast<int>(c.size());
  std::map<Rat, std::vector<int>> by_value;
  for (int i = 0; i < n; ++i) by_value[c[i]].push_back(i);
  OrderType ot;
  ot.blocks.reserve(by_value.size());
  for (auto& [value, block] : by_value) ot.blocks.push_back(std::move(block));
  return ot;
}

void Opp::validate() const {
  require(n >= 1 && k >= 1 && k <= n, "opp: need 1 <= k <= n");
  require(!parts.empty(), "opp: at least one part X_0 required");
  std::vector<char> seen(n, 0);
  auto absorb = [&](const std::vector<int>& block) {
    for (int i : block) {
      require(i >= 0 && i < n, "opp: coordinate out of range");
      require(!seen[i], "opp: blocks not disjoint");
      seen[i] = 1;
    }
    require(std::is_sorted(block.begin(), block.end()),
            "opp: blocks must be sorted");
  };
  absorb(zero_set);
  for (const auto& part : parts) {
    require(!part.empty(), "opp: empty part");
    absorb(part);
  }
  require(std::all_of(seen.begin(), seen.end(), [](char s) { return s == 1; }),
          "opp: blocks must cover all coordinates");
  const int z = static_cast<int>(zero_set.size());
  const int x0 = static_cast<int>(parts.front().size());
  require(z <= k - 1, "opp: |Z| must be at most k-1");
  require(z + x0 >= k, "opp: |Z| + |X_0| must be at least k");
}

std::vector<int> Opp::levels() const {
  std::vector<int> level(n, 0);
  for (size_t i = 0; i < parts.size(); ++i) {
    for (int coord : parts[i]) level[coord] = static_cast<int>(i) + 1;
  }
  return level;
}

FunctionalVector Opp::canonical_functional() const {
  FunctionalVector c(n, Rat(0));
  const auto level = levels();
  for (int i = 0; i < n; ++i) c[i] = Rat(level[i]);
  return c;
}

bool face_order_less(const Opp& a, const Opp& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  if (a.zero_set != b.zero_set) return a.zero_set < b.zero_set;
  return a.parts < b.parts;
}

std::vector<VertexVector> vertices(int n, int k) {
  require(k >= 1 && k <= n, "vertices: need 1 <= k <= n");
  VertexVector support;
  support.reserve(n);
  for (int i = 0; i < k - 1; ++i) support.push_back(Int(0));
  for (int j = k - 1; j <= n - 1; ++j) support.push_back(binomial(j, k - 1));
  std::sort(support.begin(), support.end());
  std::vector<VertexVector> result;
  do {
    result.push_back(support);
  } while (std::next_permutation(support.begin(), support.end()));
  return result;
}

Opp opp_from_functional(const FunctionalVector& c, int n, int k) {
  require(static_cast<int>(c.size()) == n, "opp_from_functional: bad length");
  require(k >= 1 && k <= n, "opp_from_functional: need 1 <= k <= n");
  const OrderType ot = order_type_of(c);
  const int h = static_cast<int>(ot.blocks.size());
  // Least p such that the top p+1 blocks cover at least n-k+1 coordinates.
  int covered = 0;
  int p = -1;
  while (covered < n - k + 1) {
    ++p;
    covered += static_cast<int>(ot.blocks[h - 1 - p].size());
  }
  Opp f;
  f.n = n;
  f.k = k;
  for (int b = 0; b < h - 1 - p; ++b) {
    f.zero_set.insert(f.zero_set.end(), ot.blocks[b].begin(),
                      ot.blocks[b].end());
  }
  std::sort(f.zero_set.begin(), f.zero_set.end());
  for (int b = h - 1 - p; b < h; ++b) f.parts.push_back(ot.blocks[b]);
  f.validate();
  return f;
}

std::vector<VertexVector> face_vertices(const Opp& f) {
  f.validate();
  const auto level = f.levels();
  std::vector<VertexVector> result;
  for (auto& u : vertices(f.n, f.k)) {
    bool ok = true;
    for (int i = 0; i < f.n && ok; ++i) {
      for (int j = 0; j < f.n && ok; ++j) {
        if (level[i] < level[j] && u[i] > u[j]) ok = false;
      }
    }
    if (ok) result.push_back(std::move(u));
  }
  return result;
}

int face_dim(const Opp& f) { return f.dim(); }

bool face_contains(const Opp& inner, const Opp& outer) {
  require(inner.n == outer.n && inner.k == outer.k,
          "face_contains: mismatched (n, k) context");
  const auto la = inner.levels();
  const auto lc = outer.levels();
  const int n = inner.n;
  // Order preservation: a strict level increase in `inner` may not be
  // reversed in `outer`.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (la[i] < la[j] && lc[i] > lc[j]) return false;
    }
  }
  // Each part of `inner` with two or more coordinates carries distinct
  // vertex values, so it must sit inside a single block of `outer`.
  for (const auto& part : inner.parts) {
    if (part.size() < 2) continue;
    for (size_t t = 1; t < part.size(); ++t) {
      if (lc[part[t]] != lc[part.front()]) return false;
    }
  }
  return true;
}

namespace {

std::vector<int> mask_to_block(uint32_t mask) {
  std::vector<int> block;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) block.push_back(i);
  }
  return block;
}

// Emits every ordered partition of the coordinates in `rest` (possibly the
// empty sequence when rest == 0) appended to `prefix`.
void ordered_partitions(uint32_t rest, std::vector<std::vector<int>>& prefix,
                        const std::function<void(
                            const std::vector<std::vector<int>>&)>& emit) {
  if (rest == 0) {
    emit(prefix);
    return;
  }
  // Iterate over nonempty submasks of rest as the next block.
  for (uint32_t sub = rest; sub != 0; sub = (sub - 1) & rest) {
    prefix.push_back(mask_to_block(sub));
    ordered_partitions(rest & ~sub, prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Opp> enumerate_faces(int n, int k, std::optional<int> dim_filter) {
  require(k >= 1 && k <= n, "enumerate_faces: need 1 <= k <= n");
  require(n <= 16, "enumerate_faces: n too large");
  std::vector<Opp> faces;
  const uint32_t full = (1u << n) - 1;
  for (uint32_t zmask = 0; zmask <= full; ++zmask) {
    const int z = std::popcount(zmask);
    if (z > k - 1) continue;
    const uint32_t rest_after_z = full & ~zmask;
    // X_0 runs over nonempty submasks of the complement with |Z|+|X_0| >= k.
    for (uint32_t x0 = rest_after_z; x0 != 0; x0 = (x0 - 1) & rest_after_z) {
      if (z + std::popcount(x0) < k) continue;
      const uint32_t remaining = rest_after_z & ~x0;
      std::vector<std::vector<int>> prefix{mask_to_block(x0)};
      ordered_partitions(
          remaining, prefix,
          [&](const std::vector<std::vector<int>>& parts) {
            Opp f;
            f.n = n;
            f.k = k;
            f.zero_set = mask_to_block(zmask);
            f.parts = parts;
            if (!dim_filter || f.dim() == *dim_filter) {
              faces.push_back(std::move(f));
            }
          });
    }
  }
  std::sort(faces.begin(), faces.end(), face_order_less);
  return faces;
}

namespace {

void require_chain(const std::vector<int>& chain, int max_dim) {
  require(!chain.empty(), "flag chain must be nonempty");
  for (size_t i = 0; i < chain.size(); ++i) {
    require(chain[i] >= 0 && chain[i] <= max_dim,
            "flag chain entry out of range");
    require(i == 0 || chain[i - 1] <= chain[i],
            "flag chain must be nondecreasing");
  }
}

Int count_flags_formula(int n, int k, const std::vector<int>& chain) {
  const IntPolynomial f = f_polynomial(n, k);
  return flag_count_simple(f, n - 1, chain);
}

Int count_flags_enumerate(int n, int k, const std::vector<int>& chain) {
  // Chains are counted level by level: weight of a face at level t = number
  // of partial chains ending at it.
  std::vector<Opp> current = enumerate_faces(n, k, chain[0]);
  std::vector<Int> weight(current.size(), Int(1));
  for (size_t t = 1; t < chain.size(); ++t) {
    std::vector<Opp> next = enumerate_faces(n, k, chain[t]);
    std::vector<Int> next_weight(next.size(), Int(0));
    for (size_t j = 0; j < next.size(); ++j) {
      for (size_t i = 0; i < current.size(); ++i) {
        if (weight[i] != 0 && face_contains(current[i], next[j])) {
          next_weight[j] += weight[i];
        }
      }
    }
    current = std::move(next);
    weight = std::move(next_weight);
  }
  return std::accumulate(weight.begin(), weight.end(), Int(0));
}

}  // namespace

Int count_flags(int n, int k, const std::vector<int>& chain,
                FlagMethod method) {
  require(k >= 2 && k <= n, "count_flags: need 2 <= k <= n");
  require_chain(chain, n - 1);
  switch (method) {
    case FlagMethod::kFormula:
      return count_flags_formula(n, k, chain);
    case FlagMethod::kEnumerate:
      return count_flags_enumerate(n, k, chain);
    case FlagMethod::kBoth: {
      Int formula = count_flags_formula(n, k, chain);
      Int enumerated = count_flags_enumerate(n, k, chain);
      if (formula != enumerated) {
        throw std::logic_error("count_flags: formula and enumeration differ");
      }
      return formula;
    }
  }
  throw std::logic_error("count_flags: bad method");
}

FunctionalVector v_reduce(const FunctionalVector& c, const VertexVector& v) {
  require(c.size() == v.size(), "v_reduce: length mismatch");
  require(std::is_sorted(c.begin(), c.end()), "v_reduce: c must be sorted");
  require(std::is_sorted(v.begin(), v.end()), "v_reduce: v must be sorted");
  FunctionalVector result = c;
  bool merged = true;
  while (merged) {
    merged = false;
    const OrderType ot = order_type_of(result);
    for (size_t b = 0; b + 1 < ot.blocks.size(); ++b) {
      // Blocks are consecutive index intervals since `result` is sorted.
      bool constant = true;
      const Int& head = v[ot.blocks[b].front()];
      for (int i : ot.blocks[b]) constant = constant && v[i] == head;
      for (int i : ot.blocks[b + 1]) constant = constant && v[i] == head;
      if (!constant) continue;
      const Rat merged_value =
          (result[ot.blocks[b].front()] + result[ot.blocks[b + 1].front()]) /
          2;
      for (int i : ot.blocks[b]) result[i] = merged_value;
      for (int i : ot.blocks[b + 1]) result[i] = merged_value;
      merged = true;
      break;
    }
  }
  return result;
}

}  // namespace genperm
