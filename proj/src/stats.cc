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

#include "swapround/stats.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "swapround/errors.h"

namespace swapround {

void RunningStats::Add(double x) {
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / count_;
  m2_ += delta * (x - mean_);
}

SampleSummary RunningStats::Summary() const {
  SampleSummary s;
  s.mean = mean_;
  s.count = count_;
  if (count_ > 1) s.standard_error = std::sqrt(m2_ / (count_ - 1) / count_);
  return s;
}

double ZScore(double observed, double expected, double standard_error) {
  const double diff = observed - expected;
  if (standard_error > 0.0) return diff / standard_error;
  if (std::abs(diff) <= 1e-12) return 0.0;
  return diff > 0 ? std::numeric_limits<double>::infinity()
                  : -std::numeric_limits<double>::infinity();
}

double LogLogSlope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InputError("slope fit needs two or more paired points");
  }
  double mx = 0.0;
  double my = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      throw InputError("log-log fit needs positive values");
    }
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= x.size();
  my /= y.size();
  double sxy = 0.0;
  double sxx = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw InputError("slope fit needs distinct x values");
  return sxy / sxx;
}

double Median(std::vector<double> values) {
  if (values.empty()) throw InputError("median of no values");
  std::sort(values.begin(), values.end());
  const size_t mid = values.size() / 2;
  if (values.size() % 2) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace swapround
