// Copyright 2026 The fifo-routes Authors
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

#ifndef FIFO_ROUTES_ORDER_H_
#define FIFO_ROUTES_ORDER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fifo_routes/timetable.h"

namespace fifo_routes {

// Canonical order of trips: first-stop departure, then the arrival tuple,
// then the departure tuple, then the trip id. For trips of one stop
// sequence this is a linear extension of the strict earlier-than relation.
bool canonical_less(const Trip& a, const Trip& b);

// Tie-broken strict precedence between two trips: a is strictly earlier, or
// the two are time-identical and a comes first canonically.
bool precedes(const Trip& a, const Trip& b);

// All trips of one exact stop sequence. `members` holds indices into the
// owning Timetable's trip list, in canonical order.
struct TripGroup {
  StopSequence sequence;
  std::vector<std::size_t> members;

  std::size_t size() const { return members.size(); }
};

// Groups of a timetable, ordered by stop sequence. Every trip appears in
// exactly one group.
struct GroupIndex {
  std::vector<TripGroup> groups;

  const TripGroup* find(const StopSequence& sequence) const;
};

GroupIndex group_by_stop_sequence(const Timetable& timetable);

inline constexpr std::size_t kDefaultMaterializeLimit = 4096;

// Strict partial order over the members of one group, indexed by position in
// TripGroup::members. dominates(i, j) implies i < j because the canonical
// order is a linear extension. Groups larger than the materialization limit
// answer queries by comparing trips on demand.
//
// Holds views into the Timetable's events; the Timetable must outlive it.
class PrecedenceRelation {
 public:
  PrecedenceRelation(const TripGroup& group, const Timetable& timetable,
                     std::size_t materialize_limit = kDefaultMaterializeLimit);

  std::size_t size() const { return events_.size(); }
  bool materialized() const { return !bits_.empty() || size() < 2; }

  bool dominates(std::size_t i, std::size_t j) const {
    if (i >= j) return false;
    if (!bits_.empty()) return (bits_[i * words_ + (j >> 6)] >> (j & 63)) & 1U;
    return compute(i, j);
  }

 private:
  bool compute(std::size_t i, std::size_t j) const;

  std::vector<std::span<const StopEvent>> events_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

PrecedenceRelation build_precedence(
    const TripGroup& group, const Timetable& timetable,
    std::size_t materialize_limit = kDefaultMaterializeLimit);

}  // namespace fifo_routes

#endif  // FIFO_ROUTES_ORDER_H_
