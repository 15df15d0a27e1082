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

#ifndef SWAPROUND_STATS_H_
#define SWAPROUND_STATS_H_

#include <span>
#include <vector>

namespace swapround {

struct SampleSummary {
  double mean = 0.0;
  double standard_error = 0.0;
  long count = 0;
};

// Running mean / variance (Welford).
class RunningStats {
 public:
  void Add(double x);
  SampleSummary Summary() const;
  long count() const { return count_; }
  double mean() const { return mean_; }

 private:
  long count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// (observed - expected) / standard_error. A zero standard error yields 0 when
// observed equals expected and +-infinity otherwise.
double ZScore(double observed, double expected, double standard_error);

// Least-squares slope of log(y) against log(x).
double LogLogSlope(std::span<const double> x, std::span<const double> y);

double Median(std::vector<double> values);

}  // namespace swapround

#endif  // SWAPROUND_STATS_H_
