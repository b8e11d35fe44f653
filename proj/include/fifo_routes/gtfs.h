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

#ifndef FIFO_ROUTES_GTFS_H_
#define FIFO_ROUTES_GTFS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fifo_routes/timetable.h"

namespace fifo_routes {

class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Drop reason labels used in IngestReport::drop_reasons.
namespace drop_reason {
inline constexpr std::string_view kMissingTime = "missing_time";
inline constexpr std::string_view kMalformedTime = "malformed_time";
inline constexpr std::string_view kMalformedRow = "malformed_row";
inline constexpr std::string_view kDuplicateStopSequence = "duplicate_stop_sequence";
inline constexpr std::string_view kInvalidTimes = "invalid_times";
inline constexpr std::string_view kNoStopTimes = "no_stop_times";
}  // namespace drop_reason

struct IngestReport {
  std::size_t trips_loaded = 0;
  std::size_t trips_dropped = 0;
  std::map<std::string, std::size_t, std::less<>> drop_reasons;
  std::size_t stations_seen = 0;
  // stop_times rows without a usable trip_id; they belong to no trip.
  std::size_t rows_skipped = 0;
  // Rows of frequencies.txt; frequency-based service is not expanded.
  std::size_t frequencies_ignored = 0;
  bool frequencies_present = false;
};

struct IngestResult {
  Timetable timetable;
  IngestReport report;
};

// (H)H:MM:SS with unbounded hours. Surrounding blanks are ignored. Returns
// nullopt for anything else, including the empty string.
std::optional<TimePoint> parse_gtfs_time(std::string_view text);

// Loads stop_times.txt (required), stops.txt and trips.txt (optional) from a
// feed directory. Throws IngestError when the directory or stop_times.txt is
// missing or unreadable, or when a required column is absent.
IngestResult load_gtfs(const std::filesystem::path& feed_dir);

struct GeneratorSpec {
  std::size_t num_sequences = 1;
  std::size_t trips_per_sequence = 10;
  std::size_t stops_per_sequence = 5;
  std::int64_t headway_seconds = 600;
  std::int64_t jitter_seconds = 0;
  double overtake_probability = 0.0;
  std::uint64_t rng_seed = 1;

  // Throws std::invalid_argument describing the first bad field.
  void validate() const;
};

// Synthetic timetable: `num_sequences` disjoint stop sequences, each served by
// `trips_per_sequence` trips departing one headway apart with per-event
// jitter. Each trip after the first either runs no earlier than its
// predecessor at every event, or (with `overtake_probability`) is rebuilt
// from its predecessor so the two overtake. Deterministic per seed.
Timetable generate_synthetic(const GeneratorSpec& spec);

}  // namespace fifo_routes

#endif  // FIFO_ROUTES_GTFS_H_
