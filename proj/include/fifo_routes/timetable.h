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

#ifndef FIFO_ROUTES_TIMETABLE_H_
#define FIFO_ROUTES_TIMETABLE_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fifo_routes {

// Seconds since the start of the service day. Values above 86400 are legal
// (after-midnight service).
class TimePoint {
 public:
  constexpr TimePoint() = default;
  constexpr explicit TimePoint(std::int64_t seconds) : seconds_(seconds) {
    if (seconds < 0) throw std::invalid_argument("TimePoint must be >= 0");
  }

  constexpr std::int64_t seconds() const { return seconds_; }

  friend constexpr auto operator<=>(TimePoint, TimePoint) = default;

 private:
  std::int64_t seconds_ = 0;
};

class StopId {
 public:
  StopId() = default;
  explicit StopId(std::string id) : id_(std::move(id)) {
    if (id_.empty()) throw std::invalid_argument("StopId must be non-empty");
  }

  const std::string& str() const { return id_; }

  friend auto operator<=>(const StopId&, const StopId&) = default;
  friend bool operator==(const StopId&, const StopId&) = default;

 private:
  std::string id_;
};

struct StopEvent {
  StopId stop;
  TimePoint arrival;
  TimePoint departure;

  friend bool operator==(const StopEvent&, const StopEvent&) = default;
};

// Positional sequence of stops. Loops are kept as-is.
struct StopSequence {
  std::vector<StopId> stops;

  friend auto operator<=>(const StopSequence&, const StopSequence&) = default;
  friend bool operator==(const StopSequence&, const StopSequence&) = default;
};

struct StopSequenceHash {
  std::size_t operator()(const StopSequence& seq) const noexcept;
};

struct Trip {
  std::string id;
  std::vector<StopEvent> events;

  friend bool operator==(const Trip&, const Trip&) = default;
};

enum class Comparison {
  kLess,            // a strictly earlier than b
  kGreater,         // b strictly earlier than a
  kEqual,           // identical times everywhere
  kIncomparable,    // the trips overtake each other
  kDifferentShape,  // stop sequences differ
};

std::string_view to_string(Comparison c);

// Mirror image of a comparison result: compare(b, a) == mirror(compare(a, b)).
Comparison mirror(Comparison c);

struct Route {
  std::string id;
  std::vector<std::string> trips;

  friend bool operator==(const Route&, const Route&) = default;
};

struct Timetable {
  std::vector<Trip> trips;
  std::vector<StopId> stations;

  friend bool operator==(const Timetable&, const Timetable&) = default;
};

// One broken inequality of the per-trip time chain.
struct TripViolation {
  enum class Kind {
    kArrivalAfterDeparture,       // events[index].arrival > departure
    kDepartureAfterNextArrival,   // events[index-1].departure > events[index].arrival
  };
  Kind kind;
  std::size_t index;
  std::string message;
};

// Empty iff every event has arrival <= departure and consecutive events are
// chronological.
std::vector<TripViolation> validate_trip(const Trip& trip);

StopSequence stop_sequence_of(const Trip& trip);

// Positional comparison of two trips under the earlier-than relation.
Comparison compare_trips(const Trip& a, const Trip& b);

// Same as compare_trips but assumes both trips share a stop sequence and
// only inspects the times.
Comparison compare_times(std::span<const StopEvent> a,
                         std::span<const StopEvent> b);

// Throws std::invalid_argument if trip ids repeat or an event references a
// station missing from `stations`.
void check_timetable(const Timetable& timetable);

}  // namespace fifo_routes

#endif  // FIFO_ROUTES_TIMETABLE_H_
