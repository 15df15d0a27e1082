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

#include "swapround/submodular.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "swapround/errors.h"

namespace swapround {
namespace {

void CheckEnumerable(int n) {
  if (n > kMaxEnumerationSize) {
    throw CapabilityError("exact enumeration needs n <= " +
                          std::to_string(kMaxEnumerationSize) + ", got " +
                          std::to_string(n));
  }
}

std::vector<int> MaskMembers(std::uint32_t mask) {
  std::vector<int> members;
  while (mask) {
    members.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return members;
}

}  // namespace

CoverageFunction::CoverageFunction(int universe,
                                   const std::vector<std::vector<int>>& sets)
    : words_((universe + 63) / 64) {
  if (universe < 0) throw InputError("coverage universe must be >= 0");
  if (sets.empty()) throw InputError("coverage function needs a set");
  for (const auto& items : sets) {
    std::vector<std::uint64_t> bits(words_, 0);
    for (int item : items) {
      if (item < 0 || item >= universe) {
        throw InputError("coverage item outside the universe");
      }
      bits[item / 64] |= std::uint64_t{1} << (item % 64);
    }
    sets_.push_back(std::move(bits));
  }
}

double CoverageFunction::Evaluate(std::span<const int> s) const {
  std::vector<std::uint64_t> covered(words_, 0);
  for (int v : s) {
    for (int w = 0; w < words_; ++w) covered[w] |= sets_[v][w];
  }
  int count = 0;
  for (std::uint64_t word : covered) count += std::popcount(word);
  return count;
}

FacilityLocationFunction::FacilityLocationFunction(
    std::vector<std::vector<double>> weights)
    : n_(weights.empty() ? 0 : static_cast<int>(weights.front().size())),
      weights_(std::move(weights)) {
  if (n_ < 1) throw InputError("facility location needs a non-empty matrix");
  for (const auto& row : weights_) {
    if (static_cast<int>(row.size()) != n_) {
      throw InputError("facility location rows must have equal length");
    }
    for (double w : row) {
      if (!(w >= 0.0) || !std::isfinite(w)) {
        throw InputError("facility location weights must be finite, >= 0");
      }
    }
  }
}

double FacilityLocationFunction::Evaluate(std::span<const int> s) const {
  double total = 0.0;
  for (const auto& row : weights_) {
    double best = 0.0;
    for (int v : s) best = std::max(best, row[v]);
    total += best;
  }
  return total;
}

ConcaveCardinalityFunction::ConcaveCardinalityFunction(int n, int cap)
    : n_(n), cap_(cap) {
  if (n < 1) throw InputError("concave cardinality needs n >= 1");
  if (cap < 0) throw InputError("concave cardinality cap must be >= 0");
}

double ConcaveCardinalityFunction::Evaluate(std::span<const int> s) const {
  return std::min(static_cast<int>(s.size()), cap_);
}

ModularFunction::ModularFunction(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw InputError("modular function needs weights");
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw InputError("modular weights must be finite and >= 0");
    }
  }
}

double ModularFunction::Evaluate(std::span<const int> s) const {
  double total = 0.0;
  for (int v : s) total += weights_[v];
  return total;
}

TableFunction::TableFunction(std::vector<double> values)
    : values_(std::move(values)) {
  const size_t size = values_.size();
  if (size < 2 || !std::has_single_bit(size)) {
    throw InputError("table must hold 2^n values with n >= 1");
  }
  n_ = std::countr_zero(size);
  CheckEnumerable(n_);
  for (double v : values_) {
    if (!std::isfinite(v)) throw InputError("table values must be finite");
  }
}

double TableFunction::Evaluate(std::span<const int> s) const {
  std::uint32_t mask = 0;
  for (int v : s) mask |= std::uint32_t{1} << v;
  return values_[mask];
}

bool IsMonotoneSubmodular(const SubmodularFunction& f, double tolerance) {
  const int n = f.ground_size();
  CheckEnumerable(n);
  const std::uint32_t full = (std::uint32_t{1} << n);
  std::vector<double> value(full);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    value[mask] = f.Evaluate(MaskMembers(mask));
  }
  if (value[0] < -tolerance) return false;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    for (int a = 0; a < n; ++a) {
      const std::uint32_t with_a = mask | (std::uint32_t{1} << a);
      if (with_a == mask) continue;
      const double gain_a = value[with_a] - value[mask];
      if (gain_a < -tolerance) return false;
      for (int b = a + 1; b < n; ++b) {
        const std::uint32_t with_b = mask | (std::uint32_t{1} << b);
        if (with_b == mask) continue;
        if (value[with_a | with_b] - value[with_b] > gain_a + tolerance) {
          return false;
        }
      }
    }
  }
  return true;
}

ValueOracle::ValueOracle(const SubmodularFunction& f,
                         std::shared_ptr<QueryLedger> ledger)
    : f_(f),
      ledger_(ledger ? std::move(ledger) : std::make_shared<QueryLedger>()) {}

double ValueOracle::Value(const ElementSet& s) const {
  for (int v : s) {
    if (v < 0 || v >= ground_size()) {
      throw InputError("element " + std::to_string(v) +
                       " outside ground set of size " +
                       std::to_string(ground_size()));
    }
  }
  ledger_->CountValue();
  return f_.Evaluate(s.members());
}

double MultilinearExact(const ValueOracle& f, std::span<const double> x) {
  const int n = f.ground_size();
  CheckEnumerable(n);
  if (static_cast<int>(x.size()) != n) {
    throw InputError("point dimension differs from the ground set size");
  }
  for (double xv : x) {
    if (!(xv >= 0.0 && xv <= 1.0)) throw InputError("x must lie in [0,1]^V");
  }
  double total = 0.0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    double weight = 1.0;
    for (int v = 0; v < n; ++v) weight *= (mask >> v & 1) ? x[v] : 1.0 - x[v];
    const double fs = f.Value(ElementSet::FromMask(mask, n));
    total += weight * fs;
  }
  return total;
}

Estimate MultilinearEstimate(const ValueOracle& f, std::span<const double> x,
                             int samples, Rng& rng) {
  const int n = f.ground_size();
  if (samples < 1) throw InputError("need at least one sample");
  if (static_cast<int>(x.size()) != n) {
    throw InputError("point dimension differs from the ground set size");
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double sum = 0.0;
  double sum_sq = 0.0;
  std::vector<int> members;
  for (int k = 0; k < samples; ++k) {
    members.clear();
    for (int v = 0; v < n; ++v) {
      if (unit(rng) < x[v]) members.push_back(v);
    }
    const double value = f.Value(ElementSet::FromUnsorted(members));
    sum += value;
    sum_sq += value * value;
  }
  Estimate est;
  est.samples = samples;
  est.mean = sum / samples;
  if (samples > 1) {
    const double var =
        std::max(0.0, (sum_sq - samples * est.mean * est.mean) / (samples - 1));
    est.standard_error = std::sqrt(var / samples);
  }
  return est;
}

std::pair<ElementSet, double> BruteForceOpt(const ValueOracle& f,
                                            const CountedMatroid& m) {
  const int n = f.ground_size();
  CheckEnumerable(n);
  if (m.ground_size() != n) {
    throw InputError("objective and matroid ground sets differ");
  }
  ElementSet best;
  double best_value = f.Value(best);
  // Depth-first over independent sets, extending only with larger elements.
  auto extend = [&](auto&& self, const ElementSet& current, int next) -> void {
    for (int e = next; e < n; ++e) {
      ElementSet candidate = current.With(e);
      if (!m.IsIndependent(candidate)) continue;
      const double value = f.Value(candidate);
      if (value > best_value) {
        best_value = value;
        best = candidate;
      }
      self(self, candidate, e + 1);
    }
  };
  extend(extend, ElementSet(), 0);
  return {best, best_value};
}

}  // namespace swapround
