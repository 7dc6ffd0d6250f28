#include "genperm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace genperm {

namespace {

void require(bool cond, const char* message) {
  if (!cond) throw std::invalid_argument(message);
}

}  // namespace

SimplexFamily SimplexFamily::uniform(int n, int k) {
  require(n >= 1 && k >= 1 && k <= n && n <= 20,
          "SimplexFamily::uniform: need 1 <= k <= n <= 20");
  SimplexFamily fam;
  fam.n = n;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) == k) fam.supports.push_back(mask);
  }
  return fam;
}

bool FaceDecomposition::componentwise_subset_of(
    const FaceDecomposition& other) const {
  if (argmax.size() != other.argmax.size()) return false;
  for (size_t i = 0; i < argmax.size(); ++i) {
    if ((argmax[i] & ~other.argmax[i]) != 0) return false;
  }
  return true;
}

uint32_t FaceDecomposition::union_support() const {
  uint32_t u = 0;
  for (uint32_t a : argmax) u |= a;
  return u;
}

namespace {

void order_types_rec(int e, int n, std::vector<std::vector<int>>& blocks,
                     const std::function<void(const OrderType&)>& emit) {
  if (e == n) {
    OrderType ot;
    ot.blocks = blocks;
    emit(ot);
    return;
  }
  for (size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(e);
    order_types_rec(e + 1, n, blocks, emit);
    blocks[b].pop_back();
  }
  for (size_t pos = 0; pos <= blocks.size(); ++pos) {
    blocks.insert(blocks.begin() + pos, {e});
    order_types_rec(e + 1, n, blocks, emit);
    blocks.erase(blocks.begin() + pos);
  }
}

}  // namespace

void order_types(int n, const std::function<void(const OrderType&)>& emit) {
  require(n >= 1 && n <= 8, "order_types: need 1 <= n <= 8");
  std::vector<std::vector<int>> blocks;
  order_types_rec(0, n, blocks, emit);
}

Int ordered_set_partition_total(int n) {
  Int total(0);
  for (int m = 0; m <= n; ++m) total += ordered_partition_count(n, m);
  return total;
}

FaceDecomposition face_from_ordertype(const OrderType& ot,
                                      const SimplexFamily& fam) {
  std::vector<uint32_t> block_masks(ot.blocks.size(), 0);
  for (size_t b = 0; b < ot.blocks.size(); ++b) {
    for (int i : ot.blocks[b]) block_masks[b] |= 1u << i;
  }
  FaceDecomposition d;
  d.argmax.reserve(fam.supports.size());
  for (uint32_t support : fam.supports) {
    uint32_t top = 0;
    for (size_t b = block_masks.size(); b-- > 0;) {
      if ((block_masks[b] & support) != 0) {
        top = block_masks[b] & support;
        break;
      }
    }
    d.argmax.push_back(top);
  }
  return d;
}

int integer_matrix_rank(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  const size_t rows = m.size();
  const size_t cols = m.front().size();
  size_t rank = 0;
  Int prev(1);
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t r = rank + 1; r < rows; ++r) {
      for (size_t c = col + 1; c < cols; ++c) {
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

int face_dim_oracle(const FaceDecomposition& d, int n) {
  // One spanning path of directions e_i - e_j per argmax set.
  std::vector<std::vector<Int>> directions;
  for (uint32_t a : d.argmax) {
    int last = -1;
    for (int i = 0; i < n; ++i) {
      if ((a & (1u << i)) == 0) continue;
      if (last >= 0) {
        std::vector<Int> row(n, Int(0));
        row[last] = 1;
        row[i] = -1;
        directions.push_back(std::move(row));
      }
      last = i;
    }
  }
  return integer_matrix_rank(std::move(directions));
}

std::vector<OracleFace> enumerate_faces_oracle(const SimplexFamily& fam) {
  require(fam.n <= 7, "enumerate_faces_oracle: n too large");
  std::map<FaceDecomposition, std::vector<int>> seen;
  order_types(fam.n, [&](const OrderType& ot) {
    FaceDecomposition d = face_from_ordertype(ot, fam);
    if (seen.contains(d)) return;
    std::vector<int> levels(fam.n, 0);
    for (size_t b = 0; b < ot.blocks.size(); ++b) {
      for (int i : ot.blocks[b]) levels[i] = static_cast<int>(b);
    }
    seen.emplace(std::move(d), std::move(levels));
  });
  std::vector<OracleFace> faces;
  faces.reserve(seen.size());
  for (auto& [d, levels] : seen) {
    OracleFace face;
    face.dim = face_dim_oracle(d, fam.n);
    face.decomposition = d;
    face.rep_levels = levels;
    faces.push_back(std::move(face));
  }
  std::sort(faces.begin(), faces.end(),
            [](const OracleFace& a, const OracleFace& b) {
              if (a.dim != b.dim) return a.dim < b.dim;
              return a.decomposition < b.decomposition;
            });
  return faces;
}

IntPolynomial f_vector_oracle(const SimplexFamily& fam) {
  IntPolynomial f;
  for (const OracleFace& face : enumerate_faces_oracle(fam)) {
    f.add_term(face.dim, Int(1));
  }
  return f;
}

Int flag_count_oracle(const SimplexFamily& fam,
                      const std::vector<int>& chain) {
  require(fam.n <= 6, "flag_count_oracle: n too large");
  require(!chain.empty() && chain.size() <= 3,
          "flag_count_oracle: chain length must be 1..3");
  for (size_t i = 0; i < chain.size(); ++i) {
    require(i == 0 || chain[i - 1] <= chain[i],
            "flag_count_oracle: chain must be nondecreasing");
  }
  const std::vector<OracleFace> faces = enumerate_faces_oracle(fam);
  std::vector<const OracleFace*> current;
  for (const OracleFace& f : faces) {
    if (f.dim == chain[0]) current.push_back(&f);
  }
  std::vector<Int> weight(current.size(), Int(1));
  for (size_t t = 1; t < chain.size(); ++t) {
    std::vector<const OracleFace*> next;
    for (const OracleFace& f : faces) {
      if (f.dim == chain[t]) next.push_back(&f);
    }
    std::vector<Int> next_weight(next.size(), Int(0));
    for (size_t j = 0; j < next.size(); ++j) {
      for (size_t i = 0; i < current.size(); ++i) {
        if (weight[i] != 0 &&
            current[i]->decomposition.componentwise_subset_of(
                next[j]->decomposition)) {
          next_weight[j] += weight[i];
        }
      }
    }
    current = std::move(next);
    weight = std::move(next_weight);
  }
  Int total(0);
  for (const Int& w : weight) total += w;
  return total;
}

std::vector<VertexVector> decomposition_points(const SimplexFamily& fam,
                                               const FaceDecomposition& d) {
  require(d.argmax.size() == fam.supports.size(),
          "decomposition_points: family mismatch");
  std::set<VertexVector> points;
  VertexVector current(fam.n, Int(0));
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == d.argmax.size()) {
      points.insert(current);
      return;
    }
    for (int i = 0; i < fam.n; ++i) {
      if ((d.argmax[idx] & (1u << i)) == 0) continue;
      current[i] += 1;
      self(self, idx + 1);
      current[i] -= 1;
    }
  };
  rec(rec, 0);
  return {points.begin(), points.end()};
}

}  // namespace genperm
