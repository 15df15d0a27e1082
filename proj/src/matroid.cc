// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swapround/matroid.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "swapround/errors.h"

namespace swapround {
namespace {

// Union-find with path halving; sized per query.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // False if a and b were already connected.
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::string_view MatroidKindName(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kUniform:
      return "uniform";
    case MatroidKind::kPartition:
      return "partition";
    case MatroidKind::kGraphic:
      return "graphic";
    case MatroidKind::kLinearGf2:
      return "linear_gf2";
    case MatroidKind::kCounted:
      return "counted";
    case MatroidKind::kMemoizing:
      return "memoizing";
    case MatroidKind::kIndependenceOnly:
      return "independence_only";
  }
  return "unknown";
}

UniformMatroid::UniformMatroid(int n, int rank) : n_(n), rank_(rank) {
  if (n < 1) throw InputError("uniform matroid needs n >= 1");
  if (rank < 0 || rank > n) {
    throw InputError("uniform matroid rank must lie in [0, n]");
  }
}

bool UniformMatroid::IsIndependent(std::span<const int> s) const {
  return static_cast<int>(s.size()) <= rank_;
}

int UniformMatroid::Rank(std::span<const int> s) const {
  return std::min(static_cast<int>(s.size()), rank_);
}

PartitionMatroid::PartitionMatroid(int n,
                                   const std::vector<std::vector<int>>& parts,
                                   std::vector<int> capacities)
    : n_(n), part_of_(n, -1), capacities_(std::move(capacities)) {
  if (n < 1) throw InputError("partition matroid needs n >= 1");
  if (parts.size() != capacities_.size()) {
    throw InputError("partition matroid needs one capacity per part");
  }
  for (size_t p = 0; p < parts.size(); ++p) {
    if (capacities_[p] < 0) throw InputError("negative part capacity");
    for (int v : parts[p]) {
      if (v < 0 || v >= n) throw InputError("part element out of range");
      if (part_of_[v] != -1) {
        throw InputError("element " + std::to_string(v) +
                         " appears in more than one part");
      }
      part_of_[v] = static_cast<int>(p);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (part_of_[v] == -1) {
      throw InputError("element " + std::to_string(v) + " is in no part");
    }
  }
}

bool PartitionMatroid::IsIndependent(std::span<const int> s) const {
  std::vector<int> used(capacities_.size(), 0);
  for (int v : s) {
    int p = part_of_[v];
    if (++used[p] > capacities_[p]) return false;
  }
  return true;
}

int PartitionMatroid::Rank(std::span<const int> s) const {
  std::vector<int> used(capacities_.size(), 0);
  int rank = 0;
  for (int v : s) {
    int p = part_of_[v];
    if (used[p] < capacities_[p]) {
      ++used[p];
      ++rank;
    }
  }
  return rank;
}

GraphicMatroid::GraphicMatroid(int num_vertices,
                               std::vector<std::pair<int, int>> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (edges_.empty()) throw InputError("graphic matroid needs an edge");
  for (const auto& [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices) {
      throw InputError("edge endpoint out of range");
    }
  }
}

GraphicMatroid GraphicMatroid::Complete(int num_vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < num_vertices; ++a) {
    for (int b = a + 1; b < num_vertices; ++b) edges.emplace_back(a, b);
  }
  return GraphicMatroid(num_vertices, std::move(edges));
}

bool GraphicMatroid::IsIndependent(std::span<const int> s) const {
  if (static_cast<int>(s.size()) >= num_vertices_) return false;
  DisjointSets forest(num_vertices_);
  for (int e : s) {
    if (!forest.Union(edges_[e].first, edges_[e].second)) return false;
  }
  return true;
}

int GraphicMatroid::Rank(std::span<const int> s) const {
  DisjointSets forest(num_vertices_);
  int rank = 0;
  for (int e : s) {
    if (forest.Union(edges_[e].first, edges_[e].second)) ++rank;
  }
  return rank;
}

LinearGf2Matroid::LinearGf2Matroid(const std::vector<std::vector<int>>& rows)
    : n_(rows.empty() ? 0 : static_cast<int>(rows.front().size())),
      words_((static_cast<int>(rows.size()) + 63) / 64) {
  if (rows.empty() || n_ < 1) {
    throw InputError("linear matroid needs a non-empty matrix");
  }
  columns_.assign(n_, std::vector<std::uint64_t>(words_, 0));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != n_) {
      throw InputError("matrix rows must have equal length");
    }
    for (int j = 0; j < n_; ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1) {
        throw InputError("matrix entries must be 0 or 1");
      }
      if (rows[i][j]) columns_[j][i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
}

int LinearGf2Matroid::Rank(std::span<const int> s) const {
  // Echelon basis keyed by the position of each vector's lowest set bit.
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<int> pivots;
  for (int j : s) {
    std::vector<std::uint64_t> vec = columns_[j];
    for (size_t b = 0; b < basis.size(); ++b) {
      int p = pivots[b];
      if (vec[p / 64] >> (p % 64) & 1) {
        for (int w = 0; w < words_; ++w) vec[w] ^= basis[b][w];
      }
    }
    int pivot = -1;
    for (int w = 0; w < words_ && pivot < 0; ++w) {
      if (vec[w]) pivot = w * 64 + std::countr_zero(vec[w]);
    }
    if (pivot >= 0) {
      basis.push_back(std::move(vec));
      pivots.push_back(pivot);
    }
  }
  return static_cast<int>(basis.size());
}

bool LinearGf2Matroid::IsIndependent(std::span<const int> s) const {
  return Rank(s) == static_cast<int>(s.size());
}

int IndependenceOnlyMatroid::Rank(std::span<const int>) const {
  throw CapabilityError("this oracle answers independence queries only");
}

bool MemoizingMatroid::IsIndependent(std::span<const int> s) const {
  std::vector<int> key(s.begin(), s.end());
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = independent_.find(key);
    if (it != independent_.end()) {
      ++hits_;
      return it->second;
    }
  }
  bool answer = base_.IsIndependent(s);
  std::lock_guard<std::mutex> lock(mu_);
  independent_.emplace(std::move(key), answer);
  return answer;
}

int MemoizingMatroid::Rank(std::span<const int> s) const {
  std::vector<int> key(s.begin(), s.end());
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = rank_.find(key);
    if (it != rank_.end()) {
      ++hits_;
      return it->second;
    }
  }
  int answer = base_.Rank(s);
  std::lock_guard<std::mutex> lock(mu_);
  rank_.emplace(std::move(key), answer);
  return answer;
}

std::int64_t MemoizingMatroid::cache_hits() const {
  std::lock_guard<std::mutex> lock(mu_);
  return hits_;
}

CountedMatroid::CountedMatroid(const Matroid& base,
                               std::shared_ptr<QueryLedger> ledger)
    : base_(base),
      ledger_(ledger ? std::move(ledger) : std::make_shared<QueryLedger>()) {}

void CountedMatroid::CheckElement(int v) const {
  if (v < 0 || v >= ground_size()) {
    throw InputError("element " + std::to_string(v) +
                     " outside ground set of size " +
                     std::to_string(ground_size()));
  }
}

void CountedMatroid::CheckElements(std::span<const int> s) const {
  for (int v : s) CheckElement(v);
}

bool CountedMatroid::IsIndependent(std::span<const int> s) const {
  CheckElements(s);
  ledger_->CountIndependence();
  return base_.IsIndependent(s);
}

int CountedMatroid::Rank(std::span<const int> s) const {
  CheckElements(s);
  if (!base_.supports_rank()) {
    throw CapabilityError("rank oracle unavailable for this matroid");
  }
  ledger_->CountRank();
  return base_.Rank(s);
}

ElementSet GreedyBasis(const CountedMatroid& m, std::span<const int> order) {
  const int n = m.ground_size();
  if (static_cast<int>(order.size()) != n) {
    throw InputError("greedy order must be a permutation of the ground set");
  }
  std::vector<char> seen(n, 0);
  for (int v : order) {
    m.CheckElement(v);
    if (seen[v]++) throw InputError("greedy order repeats an element");
  }
  ElementSet basis;
  for (int v : order) {
    ElementSet candidate = basis.With(v);
    if (m.IsIndependent(candidate)) basis = std::move(candidate);
  }
  return basis;
}

ElementSet RandomBasis(const CountedMatroid& m, Rng& rng) {
  std::vector<int> order(m.ground_size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return GreedyBasis(m, order);
}

ElementSet RandomBasis(const CountedMatroid& m, std::uint64_t seed) {
  Rng rng(seed);
  return RandomBasis(m, rng);
}

}  // namespace swapround
