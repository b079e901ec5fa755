#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "shirshov/errors.hpp"

namespace shirshov {

// Finite strict partial order on elements 0..N-1.  The transitive closure is
// computed on construction; a cycle in the input relation is a usage error.
class Poset {
 public:
  Poset() = default;
  Poset(int n, const std::vector<std::pair<int, int>>& relations);

  int size() const { return n_; }
  bool less(int a, int b) const {
    return (rows_[static_cast<size_t>(a)][static_cast<size_t>(b >> 6)] >> (b & 63)) & 1;
  }
  bool related(int a, int b) const { return less(a, b) || less(b, a); }
  std::vector<std::pair<int, int>> relation_pairs() const;

 private:
  int n_ = 0;
  std::vector<std::vector<std::uint64_t>> rows_;  // closure bitrows
};

// element -> chain color; within each color class elements are pairwise
// comparable, and the number of chains equals the maximum antichain size.
struct ChainCover {
  int chains = 0;
  std::vector<int> color;
};

// A maximum antichain, via Koenig duality on the comparability bipartite
// graph.  Exact; budget-limited to 10^4 elements.
std::vector<int> max_antichain(const Poset& p);

// Minimum chain cover (Dilworth).  Chain colors are assigned by ascending
// smallest element id of each chain.
ChainCover chain_cover(const Poset& p);

bool validate(const Poset& p, const ChainCover& cover);

}  // namespace shirshov
