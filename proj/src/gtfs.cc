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

#include "fifo_routes/gtfs.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "fifo_routes/csv.h"

namespace fifo_routes {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::optional<std::int64_t> parse_uint(std::string_view s) {
  if (!all_digits(s)) return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

bool blank_record(const std::vector<std::string>& fields) {
  return fields.size() == 1 && trim(fields[0]).empty();
}

// Column positions by header name; the header is the first non-blank record.
struct Header {
  std::unordered_map<std::string, std::size_t> columns;

  std::optional<std::size_t> find(const std::string& name) const {
    auto it = columns.find(name);
    if (it == columns.end()) return std::nullopt;
    return it->second;
  }
};

std::optional<Header> read_header(CsvReader& reader) {
  std::vector<std::string> fields;
  while (reader.next(fields)) {
    if (blank_record(fields)) continue;
    Header h;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      h.columns.emplace(std::string(trim(fields[i])), i);
    }
    return h;
  }
  return std::nullopt;
}

// All values of one column of an optional GTFS file, in file order.
std::optional<std::vector<std::string>> read_column(const std::filesystem::path& path,
                                                    const std::string& column) {
  if (!std::filesystem::is_regular_file(path)) return std::nullopt;
  const std::string data = read_file(path);
  CsvReader reader(data);
  try {
    auto header = read_header(reader);
    if (!header) return std::vector<std::string>{};
    auto col = header->find(column);
    if (!col) throw IngestError(path.filename().string() + ": missing column " + column);
    std::vector<std::string> values;
    std::vector<std::string> fields;
    while (reader.next(fields)) {
      if (blank_record(fields) || *col >= fields.size()) continue;
      std::string_view v = trim(fields[*col]);
      if (!v.empty()) values.emplace_back(v);
    }
    return values;
  } catch (const CsvError& e) {
    throw IngestError(path.filename().string() + ": " + e.what());
  }
}

struct RawEvent {
  std::int64_t sequence;
  std::string stop;
  TimePoint arrival;
  TimePoint departure;
};

struct RawTrip {
  std::string id;
  std::vector<RawEvent> events;
  std::optional<std::string_view> drop;
};

}  // namespace

std::optional<TimePoint> parse_gtfs_time(std::string_view text) {
  text = trim(text);
  const auto c1 = text.find(':');
  if (c1 == std::string_view::npos) return std::nullopt;
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) return std::nullopt;
  const std::string_view hh = text.substr(0, c1);
  const std::string_view mm = text.substr(c1 + 1, c2 - c1 - 1);
  const std::string_view ss = text.substr(c2 + 1);
  if (hh.size() > 9 || mm.size() != 2 || ss.size() != 2) return std::nullopt;
  const auto h = parse_uint(hh);
  const auto m = parse_uint(mm);
  const auto s = parse_uint(ss);
  if (!h || !m || !s || *m > 59 || *s > 59) return std::nullopt;
  return TimePoint(*h * 3600 + *m * 60 + *s);
}

IngestResult load_gtfs(const std::filesystem::path& feed_dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(feed_dir, ec)) {
    throw IngestError("not a readable directory: " + feed_dir.string());
  }
  const auto stop_times_path = feed_dir / "stop_times.txt";
  if (!std::filesystem::is_regular_file(stop_times_path, ec)) {
    throw IngestError("missing stop_times.txt in " + feed_dir.string());
  }

  IngestResult result;
  IngestReport& report = result.report;
  std::vector<RawTrip> raw;
  std::unordered_map<std::string, std::size_t> slot;

  {
    const std::string data = read_file(stop_times_path);
    CsvReader reader(data);
    try {
      const auto header = read_header(reader);
      if (!header) throw IngestError("stop_times.txt: empty file, no header row");
      const auto col_trip = header->find("trip_id");
      const auto col_arr = header->find("arrival_time");
      const auto col_dep = header->find("departure_time");
      const auto col_stop = header->find("stop_id");
      const auto col_seq = header->find("stop_sequence");
      if (!col_trip || !col_arr || !col_dep || !col_stop || !col_seq) {
        throw IngestError(
            "stop_times.txt: malformed header, need trip_id, arrival_time, departure_time, "
            "stop_id, stop_sequence");
      }

      std::vector<std::string> f;
      while (reader.next(f)) {
        if (blank_record(f)) continue;
        if (*col_trip >= f.size() || trim(f[*col_trip]).empty()) {
          ++report.rows_skipped;
          continue;
        }
        std::string id(trim(f[*col_trip]));
        auto [it, inserted] = slot.try_emplace(id, raw.size());
        if (inserted) raw.push_back(RawTrip{id, {}, std::nullopt});
        RawTrip& trip = raw[it->second];
        if (trip.drop) continue;

        const std::size_t needed = std::max({*col_arr, *col_dep, *col_stop, *col_seq});
        if (needed >= f.size()) {
          trip.drop = drop_reason::kMalformedRow;
          continue;
        }
        const auto seq = parse_uint(trim(f[*col_seq]));
        const std::string_view stop = trim(f[*col_stop]);
        if (!seq || stop.empty()) {
          trip.drop = drop_reason::kMalformedRow;
          continue;
        }
        const std::string_view arr_text = trim(f[*col_arr]);
        const std::string_view dep_text = trim(f[*col_dep]);
        if (arr_text.empty() || dep_text.empty()) {
          trip.drop = drop_reason::kMissingTime;
          continue;
        }
        const auto arr = parse_gtfs_time(arr_text);
        const auto dep = parse_gtfs_time(dep_text);
        if (!arr || !dep) {
          trip.drop = drop_reason::kMalformedTime;
          continue;
        }
        trip.events.push_back(RawEvent{*seq, std::string(stop), *arr, *dep});
      }
    } catch (const CsvError& e) {
      throw IngestError(std::string("stop_times.txt: ") + e.what());
    }
  }

  std::set<std::string> stations;
  for (auto& trip : raw) {
    if (!trip.drop) {
      std::stable_sort(trip.events.begin(), trip.events.end(),
                       [](const RawEvent& a, const RawEvent& b) { return a.sequence < b.sequence; });
      for (std::size_t i = 1; i < trip.events.size(); ++i) {
        if (trip.events[i].sequence == trip.events[i - 1].sequence) {
          trip.drop = drop_reason::kDuplicateStopSequence;
          break;
        }
      }
    }
    Trip built;
    if (!trip.drop) {
      built.id = trip.id;
      for (const auto& e : trip.events) {
        built.events.push_back(StopEvent{StopId(e.stop), e.arrival, e.departure});
      }
      if (!validate_trip(built).empty()) trip.drop = drop_reason::kInvalidTimes;
    }
    if (trip.drop) {
      ++report.trips_dropped;
      ++report.drop_reasons[std::string(*trip.drop)];
      continue;
    }
    for (const auto& e : built.events) stations.insert(e.stop.str());
    result.timetable.trips.push_back(std::move(built));
    ++report.trips_loaded;
  }

  if (auto declared = read_column(feed_dir / "trips.txt", "trip_id")) {
    std::set<std::string> missing;
    for (auto& id : *declared) {
      if (!slot.contains(id)) missing.insert(std::move(id));
    }
    if (!missing.empty()) {
      report.trips_dropped += missing.size();
      report.drop_reasons[std::string(drop_reason::kNoStopTimes)] += missing.size();
    }
  }
  if (auto declared = read_column(feed_dir / "stops.txt", "stop_id")) {
    for (auto& id : *declared) stations.insert(std::move(id));
  }
  if (auto freq = read_column(feed_dir / "frequencies.txt", "trip_id")) {
    report.frequencies_present = true;
    report.frequencies_ignored = freq->size();
  }

  for (const auto& s : stations) result.timetable.stations.emplace_back(s);
  report.stations_seen = stations.size();
  return result;
}

void GeneratorSpec::validate() const {
  if (num_sequences < 1) throw std::invalid_argument("num_sequences must be >= 1");
  if (trips_per_sequence < 1) throw std::invalid_argument("trips_per_sequence must be >= 1");
  if (stops_per_sequence < 1) throw std::invalid_argument("stops_per_sequence must be >= 1");
  if (headway_seconds < 0) throw std::invalid_argument("headway_seconds must be >= 0");
  if (jitter_seconds < 0) throw std::invalid_argument("jitter_seconds must be >= 0");
  if (!(overtake_probability >= 0.0 && overtake_probability <= 1.0)) {
    throw std::invalid_argument("overtake_probability must be in [0, 1]");
  }
}

namespace {

std::string padded(char prefix, std::size_t value, std::size_t count) {
  const std::size_t width = std::to_string(count > 0 ? count - 1 : 0).size();
  std::string digits = std::to_string(value);
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return prefix + digits;
}

using Times = std::vector<std::pair<std::int64_t, std::int64_t>>;  // (arrival, departure)

// Rebuilds `prev` so the result starts later and ends earlier. Returns
// nullopt when the predecessor has no slack left to absorb the shift.
std::optional<Times> overtaking_variant(const Times& prev, std::int64_t delta) {
  const std::size_t m = prev.size();
  Times out = prev;
  if (m == 1) {
    if (prev[0].second - prev[0].first < 2) return std::nullopt;
    out[0] = {prev[0].first + 1, prev[0].second - 1};
    return out;
  }
  const std::int64_t first_gap = prev[1].first - prev[0].second;
  const std::int64_t last_gap = prev[m - 1].first - prev[m - 2].second;
  const std::int64_t slack = m == 2 ? first_gap / 2 : std::min(first_gap, last_gap);
  delta = std::min(delta, slack);
  if (delta < 1 || prev[m - 1].first < delta) return std::nullopt;
  out[0].first += delta;
  out[0].second += delta;
  out[m - 1].first -= delta;
  out[m - 1].second -= delta;
  return out;
}

}  // namespace

Timetable generate_synthetic(const GeneratorSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.rng_seed);
  const auto uniform = [&rng](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  std::bernoulli_distribution overtake(spec.overtake_probability);

  Timetable tt;
  const std::size_t m = spec.stops_per_sequence;
  for (std::size_t q = 0; q < spec.num_sequences; ++q) {
    const std::string seq_name = padded('Q', q, spec.num_sequences);
    std::vector<StopId> stops;
    for (std::size_t k = 0; k < m; ++k) {
      stops.emplace_back(seq_name + padded('S', k, m));
      tt.stations.push_back(stops.back());
    }
    std::vector<std::int64_t> run(m, 0);
    std::vector<std::int64_t> dwell(m, 0);
    for (std::size_t k = 0; k < m; ++k) {
      run[k] = k == 0 ? 0 : uniform(120, 600);
      dwell[k] = uniform(2, 60);
    }
    const std::int64_t start = 5 * 3600 + uniform(0, 3600);

    Times prev;
    for (std::size_t t = 0; t < spec.trips_per_sequence; ++t) {
      Times times(m);
      std::int64_t clock = start + static_cast<std::int64_t>(t) * spec.headway_seconds +
                           uniform(0, spec.jitter_seconds);
      for (std::size_t k = 0; k < m; ++k) {
        if (k == 0) {
          times[0] = {clock - dwell[0], clock};
          continue;
        }
        const std::int64_t arrival = clock + run[k] + uniform(0, spec.jitter_seconds);
        clock = arrival + dwell[k] + uniform(0, spec.jitter_seconds);
        times[k] = {arrival, clock};
      }
      const bool overtaking = overtake(rng);
      const std::int64_t delta = uniform(1, 30);
      if (t > 0) {
        std::optional<Times> variant;
        if (overtaking) variant = overtaking_variant(prev, delta);
        if (variant) {
          times = std::move(*variant);
        } else if (!overtaking) {
          for (std::size_t k = 0; k < m; ++k) {
            times[k].first = std::max(times[k].first, prev[k].first);
            times[k].second = std::max(times[k].second, prev[k].second);
          }
        }
      }

      Trip trip;
      trip.id = seq_name + padded('T', t, spec.trips_per_sequence);
      for (std::size_t k = 0; k < m; ++k) {
        trip.events.push_back(
            StopEvent{stops[k], TimePoint(times[k].first), TimePoint(times[k].second)});
      }
      tt.trips.push_back(std::move(trip));
      prev = std::move(times);
    }
  }
  return tt;
}

}  // namespace fifo_routes
