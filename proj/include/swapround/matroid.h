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

#ifndef SWAPROUND_MATROID_H_
#define SWAPROUND_MATROID_H_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "swapround/element_set.h"
#include "swapround/query_ledger.h"
#include "swapround/random.h"

namespace swapround {

enum class MatroidKind {
  kUniform,
  kPartition,
  kGraphic,
  kLinearGf2,
  kCounted,
  kMemoizing,
  kIndependenceOnly,
};

std::string_view MatroidKindName(MatroidKind kind);

// A matroid over the ground set {0, ..., ground_size()-1}, accessed through
// independence and rank queries. Implementations are stateless per query and
// may be shared across threads. The span arguments hold sorted, distinct,
// in-range elements; range checking happens in CountedMatroid.
class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual int ground_size() const = 0;
  virtual MatroidKind kind() const = 0;
  virtual bool supports_rank() const { return true; }

  virtual bool IsIndependent(std::span<const int> s) const = 0;
  virtual int Rank(std::span<const int> s) const = 0;
};

// U(n, r): a set is independent iff it has at most r elements.
class UniformMatroid : public Matroid {
 public:
  UniformMatroid(int n, int rank);

  int ground_size() const override { return n_; }
  MatroidKind kind() const override { return MatroidKind::kUniform; }
  bool IsIndependent(std::span<const int> s) const override;
  int Rank(std::span<const int> s) const override;

 private:
  int n_;
  int rank_;
};

// Disjoint parts covering the ground set, each with a capacity.
class PartitionMatroid : public Matroid {
 public:
  PartitionMatroid(int n, const std::vector<std::vector<int>>& parts,
                   std::vector<int> capacities);

  int ground_size() const override { return n_; }
  MatroidKind kind() const override { return MatroidKind::kPartition; }
  bool IsIndependent(std::span<const int> s) const override;
  int Rank(std::span<const int> s) const override;

 private:
  int n_;
  std::vector<int> part_of_;
  std::vector<int> capacities_;
};

// Cycle matroid of a multigraph: element i is edge i, and a set is
// independent iff its edges form a forest. Each query rebuilds a union-find
// over the vertex set.
class GraphicMatroid : public Matroid {
 public:
  GraphicMatroid(int num_vertices, std::vector<std::pair<int, int>> edges);

  // Complete graph K_m; rank m-1, m(m-1)/2 elements.
  static GraphicMatroid Complete(int num_vertices);

  int ground_size() const override { return static_cast<int>(edges_.size()); }
  MatroidKind kind() const override { return MatroidKind::kGraphic; }
  bool IsIndependent(std::span<const int> s) const override;
  int Rank(std::span<const int> s) const override;

  int num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int num_vertices_;
  std::vector<std::pair<int, int>> edges_;
};

// Column matroid of a 0/1 matrix over GF(2): element j is column j.
class LinearGf2Matroid : public Matroid {
 public:
  // `rows` is the matrix in row-major form; every row has n entries.
  explicit LinearGf2Matroid(const std::vector<std::vector<int>>& rows);

  int ground_size() const override { return n_; }
  MatroidKind kind() const override { return MatroidKind::kLinearGf2; }
  bool IsIndependent(std::span<const int> s) const override;
  int Rank(std::span<const int> s) const override;

 private:
  int n_;
  int words_;
  // columns_[j] packs column j as a bit vector over the rows.
  std::vector<std::vector<std::uint64_t>> columns_;
};

// Hides the rank oracle of another matroid.
class IndependenceOnlyMatroid : public Matroid {
 public:
  explicit IndependenceOnlyMatroid(const Matroid& base) : base_(base) {}

  int ground_size() const override { return base_.ground_size(); }
  MatroidKind kind() const override { return MatroidKind::kIndependenceOnly; }
  bool supports_rank() const override { return false; }
  bool IsIndependent(std::span<const int> s) const override {
    return base_.IsIndependent(s);
  }
  int Rank(std::span<const int> s) const override;

 private:
  const Matroid& base_;
};

// Caches answers by set contents. Not for benchmarking: query counts taken
// above this wrapper no longer reflect oracle work.
class MemoizingMatroid : public Matroid {
 public:
  explicit MemoizingMatroid(const Matroid& base) : base_(base) {}

  int ground_size() const override { return base_.ground_size(); }
  MatroidKind kind() const override { return MatroidKind::kMemoizing; }
  bool supports_rank() const override { return base_.supports_rank(); }
  bool IsIndependent(std::span<const int> s) const override;
  int Rank(std::span<const int> s) const override;

  std::int64_t cache_hits() const;

 private:
  const Matroid& base_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<int>, bool> independent_;
  mutable std::map<std::vector<int>, int> rank_;
  mutable std::int64_t hits_ = 0;
};

// The single choke point through which algorithms query a matroid. Checks
// element ranges and records every call in its ledger exactly once.
class CountedMatroid : public Matroid {
 public:
  explicit CountedMatroid(const Matroid& base,
                          std::shared_ptr<QueryLedger> ledger = nullptr);

  int ground_size() const override { return base_.ground_size(); }
  MatroidKind kind() const override { return MatroidKind::kCounted; }
  bool supports_rank() const override { return base_.supports_rank(); }

  bool IsIndependent(std::span<const int> s) const override;
  int Rank(std::span<const int> s) const override;
  bool IsIndependent(const ElementSet& s) const {
    return IsIndependent(s.members());
  }
  int Rank(const ElementSet& s) const { return Rank(s.members()); }

  const Matroid& base() const { return base_; }
  QueryLedger& ledger() const { return *ledger_; }
  const std::shared_ptr<QueryLedger>& shared_ledger() const { return ledger_; }

  // Throws InputError if any element of s is outside the ground set.
  void CheckElements(std::span<const int> s) const;
  void CheckElement(int v) const;

 private:
  const Matroid& base_;
  std::shared_ptr<QueryLedger> ledger_;
};

// Scans `order` and keeps each element whose addition stays independent.
// Uses exactly |order| independence queries; `order` must be a permutation
// of the ground set.
ElementSet GreedyBasis(const CountedMatroid& m, std::span<const int> order);

// GreedyBasis over a uniformly random permutation.
ElementSet RandomBasis(const CountedMatroid& m, Rng& rng);
ElementSet RandomBasis(const CountedMatroid& m, std::uint64_t seed);

}  // namespace swapround

#endif  // SWAPROUND_MATROID_H_
