// Copyright 2026 The gamedec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <numeric>
#include <vector>

namespace gamedec {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int x, int y) {
    int px = find(x), py = find(y);
    if (px == py) return;
    if (rank_[px] < rank_[py]) std::swap(px, py);
    parent_[py] = px;
    if (rank_[px] == rank_[py]) ++rank_[px];
  }

  bool connected(int x, int y) { return find(x) == find(y); }

  /// Groups 0..n-1 by root; each group sorted, groups ordered by first member.
  std::vector<std::vector<int>> groups() {
    const int n = static_cast<int>(parent_.size());
    std::vector<std::vector<int>> by_root(n);
    for (int x = 0; x < n; ++x) by_root[find(x)].push_back(x);
    std::vector<std::vector<int>> out;
    for (auto& g : by_root)
      if (!g.empty()) out.push_back(std::move(g));
    return out;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

}  // namespace gamedec
