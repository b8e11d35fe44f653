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

#include "fifo_routes/io.h"

#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

namespace fifo_routes {
namespace {

using testing::make_timetable;
using testing::two_stop;

TEST(TimetableJson, RoundTripProperty) {
  std::mt19937_64 rng(51);
  for (int iter = 0; iter < 50; ++iter) {
    GeneratorSpec spec;
    spec.num_sequences = 1 + iter % 5;
    spec.trips_per_sequence = 1 + iter % 7;
    spec.stops_per_sequence = 1 + iter % 4;
    spec.jitter_seconds = 200;
    spec.overtake_probability = 0.5;
    spec.rng_seed = rng();
    const Timetable tt = generate_synthetic(spec);
    const std::string text = timetable_to_json(tt);
    const Timetable back = timetable_from_json(text);
    EXPECT_EQ(back, tt);
    EXPECT_EQ(timetable_to_json(back), text);
  }
}

TEST(TimetableJson, DocumentShape) {
  const Timetable tt = make_timetable({two_stop("a", 0, 10)});
  EXPECT_EQ(timetable_to_json(tt),
            R"({
  "version": "fifo-routes/1",
  "stations": [
    "A",
    "B"
  ],
  "trips": [
    {
      "id": "a",
      "events": [
        {
          "stop": "A",
          "arrival_seconds": 0,
          "departure_seconds": 0
        },
        {
          "stop": "B",
          "arrival_seconds": 10,
          "departure_seconds": 10
        }
      ]
    }
  ]
}
)");
}

TEST(TimetableJson, RejectsBadDocuments) {
  EXPECT_THROW(timetable_from_json("{"), FormatError);
  EXPECT_THROW(timetable_from_json(R"({"version":"other/2","stations":[],"trips":[]})"),
               FormatError);
  EXPECT_THROW(timetable_from_json(R"({"version":"fifo-routes/1","stations":[]})"), FormatError);
  // Departure before arrival.
  EXPECT_THROW(timetable_from_json(R"({"version":"fifo-routes/1","stations":["A"],"trips":[
      {"id":"t","events":[{"stop":"A","arrival_seconds":5,"departure_seconds":1}]}]})"),
               FormatError);
  // Unknown station.
  EXPECT_THROW(timetable_from_json(R"({"version":"fifo-routes/1","stations":[],"trips":[
      {"id":"t","events":[{"stop":"A","arrival_seconds":1,"departure_seconds":1}]}]})"),
               FormatError);
  EXPECT_THROW(timetable_from_json(R"({"version":"fifo-routes/1","stations":["A"],"trips":[
      {"id":"t","events":[{"stop":"A","arrival_seconds":-1,"departure_seconds":1}]}]})"),
               FormatError);
  EXPECT_NO_THROW(timetable_from_json(R"({"version":"fifo-routes/1","stations":[],"trips":[]})"));
}

TEST(AssignmentJson, RoundTripWithCertificate) {
  GeneratorSpec spec;
  spec.num_sequences = 3;
  spec.trips_per_sequence = 8;
  spec.jitter_seconds = 200;
  spec.headway_seconds = 60;
  spec.overtake_probability = 0.6;
  spec.rng_seed = 5;
  const Timetable tt = generate_synthetic(spec);
  const OptimalSolution s = solve_optimal(tt);
  const RouteAssignment back =
      assignment_from_json(assignment_to_json(s.partition, tt, &s.certificate));
  EXPECT_EQ(back.partition.routes, s.partition.routes);
  EXPECT_EQ(back.partition.per_group_counts, s.partition.per_group_counts);
  EXPECT_EQ(back.partition.algorithm, Algorithm::kOptimal);
  ASSERT_TRUE(back.certificate.has_value());
  EXPECT_EQ(back.certificate->groups, s.certificate.groups);
}

TEST(AssignmentJson, SummaryBlock) {
  const Timetable tt = make_timetable({two_stop("a", 0, 10), two_stop("b", 5, 15)});
  const std::string text = assignment_to_json(solve_greedy(tt), tt);
  EXPECT_NE(text.find("\"algorithm\": \"greedy\""), std::string::npos);
  EXPECT_NE(text.find("\"total_routes\": 1"), std::string::npos);
  EXPECT_NE(text.find("\"total_trips\": 2"), std::string::npos);
  EXPECT_EQ(text.find("certificate"), std::string::npos);
}

TEST(AssignmentCsv, RoundTripAndQuoting) {
  Timetable tt = make_timetable({two_stop("a,1", 0, 10), two_stop("b\"2", 5, 15),
                                 two_stop("c", 2, 8)});
  const RoutePartition p = solve_optimal(tt).partition;
  const std::string csv = assignment_to_csv(p);
  EXPECT_TRUE(csv.starts_with("trip_id,route_id\n"));
  EXPECT_NE(csv.find("\"a,1\",R000001"), std::string::npos);
  EXPECT_NE(csv.find("\"b\"\"2\""), std::string::npos);
  EXPECT_EQ(assignment_from_csv(csv).partition.routes, p.routes);
}

TEST(AssignmentCsv, RejectsWrongHeader) {
  EXPECT_THROW(assignment_from_csv("trip,route\nx,R1\n"), FormatError);
  EXPECT_THROW(assignment_from_csv("trip_id,route_id\nx\n"), FormatError);
}

TEST(Reports, IngestReportJson) {
  IngestReport r;
  r.trips_loaded = 4;
  r.trips_dropped = 1;
  r.drop_reasons["missing_time"] = 1;
  const std::string text = ingest_report_to_json(r);
  EXPECT_NE(text.find("\"trips_dropped\": 1"), std::string::npos);
  EXPECT_NE(text.find("\"missing_time\": 1"), std::string::npos);
}

}  // namespace
}  // namespace fifo_routes
