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

#include "swapround/query_ledger.h"

#include <utility>

namespace swapround {

QueryCounts& QueryCounts::operator+=(const QueryCounts& other) {
  independence += other.independence;
  rank += other.rank;
  value += other.value;
  return *this;
}

QueryCounts operator-(QueryCounts a, const QueryCounts& b) {
  a.independence -= b.independence;
  a.rank -= b.rank;
  a.value -= b.value;
  return a;
}

void QueryLedger::CountIndependence() { Record(Kind::kIndependence); }
void QueryLedger::CountRank() { Record(Kind::kRank); }
void QueryLedger::CountValue() { Record(Kind::kValue); }

void QueryLedger::Record(Kind kind) {
  std::lock_guard<std::mutex> lock(mu_);
  QueryCounts& bucket = phases_[phase_];
  switch (kind) {
    case Kind::kIndependence:
      independence_.fetch_add(1, std::memory_order_relaxed);
      ++bucket.independence;
      break;
    case Kind::kRank:
      rank_.fetch_add(1, std::memory_order_relaxed);
      ++bucket.rank;
      break;
    case Kind::kValue:
      value_.fetch_add(1, std::memory_order_relaxed);
      ++bucket.value;
      break;
  }
}

QueryCounts QueryLedger::Totals() const {
  return QueryCounts{independence_.load(), rank_.load(), value_.load()};
}

std::map<std::string, QueryCounts> QueryLedger::Phases() const {
  std::lock_guard<std::mutex> lock(mu_);
  return phases_;
}

std::string QueryLedger::phase() const {
  std::lock_guard<std::mutex> lock(mu_);
  return phase_;
}

void QueryLedger::set_phase(std::string phase) {
  std::lock_guard<std::mutex> lock(mu_);
  phase_ = std::move(phase);
}

QueryLedger::ScopedPhase::ScopedPhase(QueryLedger& ledger, std::string phase)
    : ledger_(ledger), previous_(ledger.phase()) {
  ledger_.set_phase(std::move(phase));
}

QueryLedger::ScopedPhase::~ScopedPhase() { ledger_.set_phase(previous_); }

}  // namespace swapround
