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

#ifndef FIFO_ROUTES_IO_H_
#define FIFO_ROUTES_IO_H_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fifo_routes/gtfs.h"
#include "fifo_routes/solvers.h"
#include "fifo_routes/timetable.h"
#include "fifo_routes/verify.h"

namespace fifo_routes {

inline constexpr std::string_view kFormatVersion = "fifo-routes/1";
inline constexpr std::string_view kCsvHeader = "trip_id,route_id";

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical timetable document:
//   {"version": "fifo-routes/1", "stations": [...],
//    "trips": [{"id": ..., "events": [{"stop", "arrival_seconds",
//               "departure_seconds"}, ...]}, ...]}
std::string timetable_to_json(const Timetable& timetable);
Timetable timetable_from_json(std::string_view text);

struct RouteAssignment {
  RoutePartition partition;
  std::optional<AntichainCertificate> certificate;
};

// Route records in chain order plus a summary block, and the antichain
// certificate when one is given.
std::string assignment_to_json(const RoutePartition& partition, const Timetable& timetable,
                               const AntichainCertificate* certificate = nullptr);
// Two columns, header "trip_id,route_id", rows in route then chain order.
std::string assignment_to_csv(const RoutePartition& partition);
RouteAssignment assignment_from_json(std::string_view text);
RouteAssignment assignment_from_csv(std::string_view text);

std::string ingest_report_to_json(const IngestReport& report);
std::string comparison_to_json(const ComparisonStats& stats);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

Timetable load_timetable(const std::filesystem::path& path);
// CSV when the first line is the CSV header, JSON otherwise.
RouteAssignment load_assignment(const std::filesystem::path& path);

}  // namespace fifo_routes

#endif  // FIFO_ROUTES_IO_H_
