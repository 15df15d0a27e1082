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

#include "swapround/element_set.h"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <sstream>

#include "swapround/errors.h"

namespace swapround {

ElementSet::ElementSet(std::initializer_list<int> members)
    : members_(members) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

ElementSet ElementSet::FromUnsorted(std::vector<int> members) {
  ElementSet s;
  s.members_ = std::move(members);
  std::sort(s.members_.begin(), s.members_.end());
  s.members_.erase(std::unique(s.members_.begin(), s.members_.end()),
                   s.members_.end());
  return s;
}

ElementSet ElementSet::Range(int n) {
  ElementSet s;
  s.members_.resize(n);
  std::iota(s.members_.begin(), s.members_.end(), 0);
  return s;
}

ElementSet ElementSet::FromMask(std::uint64_t mask, int n) {
  ElementSet s;
  for (int v = 0; v < n; ++v) {
    if (mask >> v & 1) s.members_.push_back(v);
  }
  return s;
}

bool ElementSet::Contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

ElementSet ElementSet::With(int v) const {
  ElementSet s = *this;
  s.Insert(v);
  return s;
}

ElementSet ElementSet::Without(int v) const {
  ElementSet s = *this;
  s.Erase(v);
  return s;
}

ElementSet ElementSet::Swap(int remove, int add) const {
  ElementSet s;
  s.members_.reserve(members_.size() + 1);
  bool added = false;
  for (int m : members_) {
    if (!added && add <= m) {
      if (add != m) s.members_.push_back(add);
      added = true;
    }
    if (m != remove) s.members_.push_back(m);
  }
  if (!added) s.members_.push_back(add);
  if (add == remove) s.Insert(add);
  return s;
}

void ElementSet::Insert(int v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

void ElementSet::Erase(int v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it != members_.end() && *it == v) members_.erase(it);
}

ElementSet ElementSet::Union(const ElementSet& other) const {
  ElementSet s;
  s.members_.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(s.members_));
  return s;
}

ElementSet ElementSet::Intersection(const ElementSet& other) const {
  ElementSet s;
  std::set_intersection(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(s.members_));
  return s;
}

ElementSet ElementSet::Minus(const ElementSet& other) const {
  ElementSet s;
  s.members_.reserve(members_.size());
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(s.members_));
  return s;
}

ElementSet ElementSet::SymmetricDifference(const ElementSet& other) const {
  ElementSet s;
  std::set_symmetric_difference(members_.begin(), members_.end(),
                                other.members_.begin(), other.members_.end(),
                                std::back_inserter(s.members_));
  return s;
}

bool ElementSet::IsSubsetOf(const ElementSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

std::vector<double> ElementSet::Indicator(int n) const {
  if (!members_.empty() && (members_.front() < 0 || members_.back() >= n)) {
    throw InputError("set " + ToString() + " does not fit a ground set of size " +
                     std::to_string(n));
  }
  std::vector<double> x(n, 0.0);
  for (int v : members_) x[v] = 1.0;
  return x;
}

std::string ElementSet::ToString() const {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out << ',';
    out << members_[i];
  }
  out << '}';
  return out.str();
}

}  // namespace swapround
