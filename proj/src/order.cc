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

#include "fifo_routes/order.h"

#include <algorithm>
#include <unordered_map>

namespace fifo_routes {

namespace {

template <typename Field>
int compare_tuple(const Trip& a, const Trip& b, Field field) {
  const std::size_t n = std::min(a.events.size(), b.events.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = field(a.events[i]);
    const auto y = field(b.events[i]);
    if (x != y) return x < y ? -1 : 1;
  }
  if (a.events.size() != b.events.size()) return a.events.size() < b.events.size() ? -1 : 1;
  return 0;
}

}  // namespace

bool canonical_less(const Trip& a, const Trip& b) {
  const auto first_dep = [](const Trip& t) {
    return t.events.empty() ? TimePoint{} : t.events.front().departure;
  };
  if (first_dep(a) != first_dep(b)) return first_dep(a) < first_dep(b);
  if (int c = compare_tuple(a, b, [](const StopEvent& e) { return e.arrival; }); c != 0) {
    return c < 0;
  }
  if (int c = compare_tuple(a, b, [](const StopEvent& e) { return e.departure; }); c != 0) {
    return c < 0;
  }
  return a.id < b.id;
}

bool precedes(const Trip& a, const Trip& b) {
  switch (compare_trips(a, b)) {
    case Comparison::kLess: return true;
    case Comparison::kEqual: return canonical_less(a, b);
    default: return false;
  }
}

const TripGroup* GroupIndex::find(const StopSequence& sequence) const {
  auto it = std::lower_bound(
      groups.begin(), groups.end(), sequence,
      [](const TripGroup& g, const StopSequence& s) { return g.sequence < s; });
  if (it == groups.end() || it->sequence != sequence) return nullptr;
  return &*it;
}

GroupIndex group_by_stop_sequence(const Timetable& timetable) {
  std::unordered_map<StopSequence, std::size_t, StopSequenceHash> slot;
  GroupIndex index;
  for (std::size_t t = 0; t < timetable.trips.size(); ++t) {
    StopSequence seq = stop_sequence_of(timetable.trips[t]);
    auto [it, inserted] = slot.try_emplace(seq, index.groups.size());
    if (inserted) index.groups.push_back(TripGroup{std::move(seq), {}});
    index.groups[it->second].members.push_back(t);
  }
  for (auto& g : index.groups) {
    std::sort(g.members.begin(), g.members.end(), [&](std::size_t x, std::size_t y) {
      return canonical_less(timetable.trips[x], timetable.trips[y]);
    });
  }
  std::sort(index.groups.begin(), index.groups.end(),
            [](const TripGroup& x, const TripGroup& y) { return x.sequence < y.sequence; });
  return index;
}

PrecedenceRelation::PrecedenceRelation(const TripGroup& group, const Timetable& timetable,
                                       std::size_t materialize_limit) {
  events_.reserve(group.size());
  for (std::size_t m : group.members) events_.emplace_back(timetable.trips.at(m).events);
  const std::size_t n = events_.size();
  if (n < 2 || n > materialize_limit) return;
  words_ = (n + 63) / 64;
  bits_.assign(n * words_, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (compute(i, j)) bits_[i * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    }
  }
}

bool PrecedenceRelation::compute(std::size_t i, std::size_t j) const {
  // Members are in canonical order, so for i < j the comparison is never
  // Greater and Equal resolves towards i.
  const Comparison c = compare_times(events_[i], events_[j]);
  return c == Comparison::kLess || c == Comparison::kEqual;
}

PrecedenceRelation build_precedence(const TripGroup& group, const Timetable& timetable,
                                    std::size_t materialize_limit) {
  return PrecedenceRelation(group, timetable, materialize_limit);
}

}  // namespace fifo_routes
