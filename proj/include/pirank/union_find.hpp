#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace pirank {

class UnionFind {
 public:
  explicit UnionFind(int n = 0) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false when already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }
  int size() const noexcept { return static_cast<int>(parent_.size()); }

  // Dense class labels in order of first occurrence; returns the class count.
  int classes(std::vector<int>& label) {
    label.assign(parent_.size(), -1);
    std::vector<int> root_label(parent_.size(), -1);
    int next = 0;
    for (int i = 0; i < size(); ++i) {
      const int r = find(i);
      if (root_label[r] < 0) root_label[r] = next++;
      label[i] = root_label[r];
    }
    return next;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace pirank
