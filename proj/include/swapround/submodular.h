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

#ifndef SWAPROUND_SUBMODULAR_H_
#define SWAPROUND_SUBMODULAR_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "swapround/element_set.h"
#include "swapround/matroid.h"
#include "swapround/query_ledger.h"
#include "swapround/random.h"

namespace swapround {

// Largest ground set for which exact enumeration (multilinear extension,
// brute-force optimum) is attempted.
inline constexpr int kMaxEnumerationSize = 20;

// A set function f: 2^V -> R_+ given by value queries. Arguments are sorted,
// distinct, in-range elements; range checking happens in ValueOracle.
class SubmodularFunction {
 public:
  virtual ~SubmodularFunction() = default;
  virtual int ground_size() const = 0;
  virtual std::string_view kind() const = 0;
  virtual double Evaluate(std::span<const int> s) const = 0;
};

// f(S) = |union of the sets indexed by S|.
class CoverageFunction : public SubmodularFunction {
 public:
  CoverageFunction(int universe, const std::vector<std::vector<int>>& sets);

  int ground_size() const override { return static_cast<int>(sets_.size()); }
  std::string_view kind() const override { return "coverage"; }
  double Evaluate(std::span<const int> s) const override;

 private:
  int words_;
  std::vector<std::vector<std::uint64_t>> sets_;
};

// f(S) = sum_i max_{j in S} weights[i][j]; element j is column j.
class FacilityLocationFunction : public SubmodularFunction {
 public:
  explicit FacilityLocationFunction(std::vector<std::vector<double>> weights);

  int ground_size() const override { return n_; }
  std::string_view kind() const override { return "facility_location"; }
  double Evaluate(std::span<const int> s) const override;

 private:
  int n_;
  std::vector<std::vector<double>> weights_;
};

// f(S) = min(|S|, cap).
class ConcaveCardinalityFunction : public SubmodularFunction {
 public:
  ConcaveCardinalityFunction(int n, int cap);

  int ground_size() const override { return n_; }
  std::string_view kind() const override { return "concave_card"; }
  double Evaluate(std::span<const int> s) const override;

 private:
  int n_;
  int cap_;
};

// f(S) = sum_{v in S} weights[v], weights >= 0.
class ModularFunction : public SubmodularFunction {
 public:
  explicit ModularFunction(std::vector<double> weights);

  int ground_size() const override { return static_cast<int>(weights_.size()); }
  std::string_view kind() const override { return "modular"; }
  double Evaluate(std::span<const int> s) const override;

 private:
  std::vector<double> weights_;
};

// Explicit table: values[mask] = f({v : bit v of mask set}).
class TableFunction : public SubmodularFunction {
 public:
  explicit TableFunction(std::vector<double> values);

  int ground_size() const override { return n_; }
  std::string_view kind() const override { return "table"; }
  double Evaluate(std::span<const int> s) const override;

 private:
  int n_;
  std::vector<double> values_;
};

// Enumerates all sets and checks f(empty) >= 0, monotonicity and
// diminishing returns within `tolerance`. n <= kMaxEnumerationSize.
bool IsMonotoneSubmodular(const SubmodularFunction& f,
                          double tolerance = 1e-9);

// Counted value-oracle access to a SubmodularFunction.
class ValueOracle {
 public:
  explicit ValueOracle(const SubmodularFunction& f,
                       std::shared_ptr<QueryLedger> ledger = nullptr);

  int ground_size() const { return f_.ground_size(); }
  const SubmodularFunction& function() const { return f_; }
  QueryLedger& ledger() const { return *ledger_; }

  double Value(const ElementSet& s) const;

 private:
  const SubmodularFunction& f_;
  std::shared_ptr<QueryLedger> ledger_;
};

// F(x) = sum_S f(S) prod_{v in S} x_v prod_{v not in S} (1 - x_v), by full
// enumeration (2^n value queries). Throws CapabilityError for
// n > kMaxEnumerationSize.
double MultilinearExact(const ValueOracle& f, std::span<const double> x);

struct Estimate {
  double mean = 0.0;
  double standard_error = 0.0;
  int samples = 0;
};

// Monte Carlo estimate of F(x) = E[f(R(x))] from `samples` independent
// draws, where R(x) holds each v independently with probability x_v.
Estimate MultilinearEstimate(const ValueOracle& f, std::span<const double> x,
                             int samples, Rng& rng);

// Exact max{f(T) : T independent}, enumerating independent sets in
// increasing element order and pruning by downward closure. Ties keep the
// first set found. n <= kMaxEnumerationSize.
std::pair<ElementSet, double> BruteForceOpt(const ValueOracle& f,
                                            const CountedMatroid& m);

}  // namespace swapround

#endif  // SWAPROUND_SUBMODULAR_H_
