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

#include "fifo_routes/timetable.h"

#include <string>
#include <unordered_set>

namespace fifo_routes {

std::size_t StopSequenceHash::operator()(const StopSequence& seq) const noexcept {
  std::size_t h = seq.stops.size();
  for (const auto& stop : seq.stops) {
    h ^= std::hash<std::string>{}(stop.str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::kLess: return "Less";
    case Comparison::kGreater: return "Greater";
    case Comparison::kEqual: return "Equal";
    case Comparison::kIncomparable: return "Incomparable";
    case Comparison::kDifferentShape: return "DifferentShape";
  }
  return "?";
}

Comparison mirror(Comparison c) {
  switch (c) {
    case Comparison::kLess: return Comparison::kGreater;
    case Comparison::kGreater: return Comparison::kLess;
    default: return c;
  }
}

std::vector<TripViolation> validate_trip(const Trip& trip) {
  std::vector<TripViolation> out;
  const auto& ev = trip.events;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (i > 0 && ev[i - 1].departure > ev[i].arrival) {
      out.push_back({TripViolation::Kind::kDepartureAfterNextArrival, i,
                     "violation at i=" + std::to_string(i) + ": departure(" +
                         std::to_string(i - 1) + ")=" +
                         std::to_string(ev[i - 1].departure.seconds()) +
                         " > arrival(" + std::to_string(i) +
                         ")=" + std::to_string(ev[i].arrival.seconds())});
    }
    if (ev[i].arrival > ev[i].departure) {
      out.push_back({TripViolation::Kind::kArrivalAfterDeparture, i,
                     "violation at i=" + std::to_string(i) + ": arrival(" +
                         std::to_string(i) + ")=" +
                         std::to_string(ev[i].arrival.seconds()) +
                         " > departure(" + std::to_string(i) +
                         ")=" + std::to_string(ev[i].departure.seconds())});
    }
  }
  return out;
}

StopSequence stop_sequence_of(const Trip& trip) {
  StopSequence seq;
  seq.stops.reserve(trip.events.size());
  for (const auto& e : trip.events) seq.stops.push_back(e.stop);
  return seq;
}

Comparison compare_times(std::span<const StopEvent> a,
                         std::span<const StopEvent> b) {
  bool a_before = false;  // some time of a is strictly earlier
  bool b_before = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a[i];
    const auto& y = b[i];
    a_before |= x.arrival < y.arrival || x.departure < y.departure;
    b_before |= y.arrival < x.arrival || y.departure < x.departure;
    if (a_before && b_before) return Comparison::kIncomparable;
  }
  if (a_before) return Comparison::kLess;
  if (b_before) return Comparison::kGreater;
  return Comparison::kEqual;
}

Comparison compare_trips(const Trip& a, const Trip& b) {
  if (a.events.size() != b.events.size()) return Comparison::kDifferentShape;
  for (std::size_t i = 0; i < a.events.size(); ++i) {
    if (a.events[i].stop != b.events[i].stop) return Comparison::kDifferentShape;
  }
  return compare_times(a.events, b.events);
}

void check_timetable(const Timetable& timetable) {
  std::unordered_set<std::string> stations;
  for (const auto& s : timetable.stations) stations.insert(s.str());
  std::unordered_set<std::string> ids;
  for (const auto& trip : timetable.trips) {
    if (!ids.insert(trip.id).second) {
      throw std::invalid_argument("duplicate trip id '" + trip.id + "'");
    }
    for (const auto& e : trip.events) {
      if (!stations.contains(e.stop.str())) {
        throw std::invalid_argument("trip '" + trip.id + "' references unknown station '" +
                                    e.stop.str() + "'");
      }
    }
  }
}

}  // namespace fifo_routes
