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

#ifndef SWAPROUND_QUERY_LEDGER_H_
#define SWAPROUND_QUERY_LEDGER_H_

#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>

namespace swapround {

struct QueryCounts {
  std::int64_t independence = 0;
  std::int64_t rank = 0;
  std::int64_t value = 0;

  std::int64_t total() const { return independence + rank + value; }
  QueryCounts& operator+=(const QueryCounts& other);
  friend QueryCounts operator-(QueryCounts a, const QueryCounts& b);
  friend bool operator==(const QueryCounts&, const QueryCounts&) = default;
};

// Counts oracle invocations. Every counted oracle call lands in exactly one
// counter and in exactly one phase bucket (the phase active at call time), so
// the per-phase counts always sum to the totals.
class QueryLedger {
 public:
  static constexpr const char* kDefaultPhase = "default";

  QueryLedger() = default;
  QueryLedger(const QueryLedger&) = delete;
  QueryLedger& operator=(const QueryLedger&) = delete;

  void CountIndependence();
  void CountRank();
  void CountValue();

  std::int64_t independence_queries() const { return independence_.load(); }
  std::int64_t rank_queries() const { return rank_.load(); }
  std::int64_t value_queries() const { return value_.load(); }
  QueryCounts Totals() const;
  std::map<std::string, QueryCounts> Phases() const;

  std::string phase() const;
  void set_phase(std::string phase);

  // Switches the active phase for the lifetime of the guard.
  class ScopedPhase {
   public:
    ScopedPhase(QueryLedger& ledger, std::string phase);
    ~ScopedPhase();
    ScopedPhase(const ScopedPhase&) = delete;
    ScopedPhase& operator=(const ScopedPhase&) = delete;

   private:
    QueryLedger& ledger_;
    std::string previous_;
  };

 private:
  enum class Kind { kIndependence, kRank, kValue };
  void Record(Kind kind);

  std::atomic<std::int64_t> independence_{0};
  std::atomic<std::int64_t> rank_{0};
  std::atomic<std::int64_t> value_{0};

  mutable std::mutex mu_;
  std::string phase_ = kDefaultPhase;
  std::map<std::string, QueryCounts> phases_;
};

}  // namespace swapround

#endif  // SWAPROUND_QUERY_LEDGER_H_
