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

#ifndef SWAPROUND_ELEMENT_SET_H_
#define SWAPROUND_ELEMENT_SET_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace swapround {

// A finite set of ground-set elements, identified by dense indices 0..n-1.
// Members are kept sorted and unique, so iteration order is ascending and
// equality is structural.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<int> members);

  // Sorts and deduplicates.
  static ElementSet FromUnsorted(std::vector<int> members);
  // The set {0, ..., n-1}.
  static ElementSet Range(int n);
  // Elements whose bit is set in `mask` (n <= 63).
  static ElementSet FromMask(std::uint64_t mask, int n);

  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool Contains(int v) const;

  // Smallest member; the set must be non-empty.
  int front() const { return members_.front(); }

  // Returns S + v and S - v.
  ElementSet With(int v) const;
  ElementSet Without(int v) const;
  // Returns S - remove + add in one pass.
  ElementSet Swap(int remove, int add) const;

  void Insert(int v);
  void Erase(int v);

  ElementSet Union(const ElementSet& other) const;
  ElementSet Intersection(const ElementSet& other) const;
  ElementSet Minus(const ElementSet& other) const;
  ElementSet SymmetricDifference(const ElementSet& other) const;
  bool IsSubsetOf(const ElementSet& other) const;

  std::span<const int> members() const { return members_; }
  std::vector<int>::const_iterator begin() const { return members_.begin(); }
  std::vector<int>::const_iterator end() const { return members_.end(); }

  // Characteristic vector 1_S over a ground set of size n.
  std::vector<double> Indicator(int n) const;

  std::string ToString() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<int> members_;
};

}  // namespace swapround

#endif  // SWAPROUND_ELEMENT_SET_H_
