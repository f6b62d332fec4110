#pragma once

#include <numeric>
#include <vector>

namespace qf {

// Disjoint-set forest with path halving and union by rank.
class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : parent_(size), rank_(size, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t find(std::size_t x) {
    while (x != parent_[x]) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

  std::size_t size() const { return parent_.size(); }

  std::size_t block_count() {
    std::size_t n = 0;
    for (std::size_t x = 0; x < parent_.size(); ++x)
      if (find(x) == x) ++n;
    return n;
  }

  // Blocks listed by smallest member, members ascending.
  std::vector<std::vector<std::size_t>> blocks() {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::ptrdiff_t> slot(parent_.size(), -1);
    for (std::size_t x = 0; x < parent_.size(); ++x) {
      std::size_t r = find(x);
      if (slot[r] < 0) {
        slot[r] = static_cast<std::ptrdiff_t>(out.size());
        out.emplace_back();
      }
      out[static_cast<std::size_t>(slot[r])].push_back(x);
    }
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned> rank_;
};

}  // namespace qf
