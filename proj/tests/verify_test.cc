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

#include "fifo_routes/verify.h"

#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

namespace fifo_routes {
namespace {

using Condition = PartitionViolation::Condition;
using testing::make_timetable;
using testing::two_stop;

RoutePartition partition_of(std::vector<std::vector<std::string>> routes) {
  RoutePartition p;
  for (std::size_t i = 0; i < routes.size(); ++i) {
    p.routes.push_back(Route{route_id(i + 1, routes.size()), std::move(routes[i])});
  }
  return p;
}

TEST(VerifyPartition, TrivialIsValid) {
  const Timetable tt = make_timetable({two_stop("a", 0, 10), two_stop("b", 5, 8)});
  const auto report = verify_partition(solve_trivial(tt), tt);
  EXPECT_TRUE(report.valid);
  EXPECT_EQ(report.groups_checked, 1u);
}

TEST(VerifyPartition, WrongDirectionIsOrderViolation) {
  const Timetable tt = make_timetable({two_stop("a", 0, 10), two_stop("b", 5, 15)});
  const auto report = verify_partition(partition_of({{"b", "a"}}), tt);
  ASSERT_FALSE(report.valid);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].condition, Condition::kOrder);
  EXPECT_EQ(report.violations[0].route_id, "R000001");
}

TEST(VerifyPartition, TiesMustFollowCanonicalOrder) {
  const Timetable tt = make_timetable({two_stop("a", 0, 10), two_stop("b", 0, 10)});
  EXPECT_TRUE(verify_partition(partition_of({{"a", "b"}}), tt).valid);
  const auto report = verify_partition(partition_of({{"b", "a"}}), tt);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].condition, Condition::kOrder);
}

TEST(VerifyPartition, MixedShapesViolateStopSequence) {
  const Timetable tt =
      make_timetable({two_stop("ab", 0, 10), two_stop("ac", 5, 15, "A", "C")});
  const auto report = verify_partition(partition_of({{"ab", "ac"}}), tt);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].condition, Condition::kStopSequence);
}

TEST(VerifyPartition, OvertakingPair) {
  const Timetable tt = make_timetable({two_stop("a", 0, 10), two_stop("b", 5, 8)});
  const auto report = verify_partition(partition_of({{"a", "b"}}), tt);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].condition, Condition::kOvertaking);
  EXPECT_EQ(describe(report.violations[0]), "overtaking route=R000001 trip=a other=b");
}

TEST(VerifyPartition, CoverageViolations) {
  const Timetable tt =
      make_timetable({two_stop("a", 0, 10), two_stop("b", 5, 15), two_stop("c", 7, 20)});
  const auto report = verify_partition(partition_of({{"a", "b"}, {"b"}}), tt);
  ASSERT_EQ(report.violations.size(), 2u);
  EXPECT_EQ(report.violations[0].condition, Condition::kCoverage);
  EXPECT_EQ(report.violations[0].first_trip, "b");
  EXPECT_EQ(report.violations[1].first_trip, "c");
}

TEST(VerifyPartition, UnknownTripIsFatal) {
  const Timetable tt = make_timetable({two_stop("a", 0, 10)});
  EXPECT_THROW(verify_partition(partition_of({{"a", "zz"}}), tt), VerificationError);
}

TEST(VerifyPartition, LongValidRouteWithSampling) {
  std::vector<Trip> trips;
  std::vector<std::string> ids;
  for (int i = 0; i < 40; ++i) {
    trips.push_back(two_stop("t" + std::to_string(100 + i), i * 10, i * 10 + 50));
    ids.push_back(trips.back().id);
  }
  const Timetable tt = make_timetable(std::move(trips));
  EXPECT_TRUE(verify_partition(partition_of({ids}), tt).valid);
  std::swap(ids[0], ids[39]);
  EXPECT_FALSE(verify_partition(partition_of({ids}), tt).valid);
}

Timetable seeded(std::uint64_t seed) {
  GeneratorSpec spec;
  spec.num_sequences = 3;
  spec.trips_per_sequence = 12;
  spec.stops_per_sequence = 4;
  spec.headway_seconds = 60;
  spec.jitter_seconds = 300;
  spec.overtake_probability = 0.6;
  spec.rng_seed = seed;
  return generate_synthetic(spec);
}

TEST(VerifyCertificate, OptimalSolutionVerifies) {
  const Timetable tt = seeded(42);
  const OptimalSolution s = solve_optimal(tt);
  EXPECT_TRUE(verify_partition(s.partition, tt).valid);
  EXPECT_TRUE(verify_certificate(s.certificate, s.partition, tt));
}

TEST(VerifyCertificate, ComparablePairRejected) {
  const Timetable tt = make_timetable({two_stop("a", 0, 10), two_stop("b", 5, 15)});
  const OptimalSolution s = solve_optimal(tt);
  AntichainCertificate cert = s.certificate;
  cert.groups.begin()->second = {"a", "b"};
  RoutePartition two = solve_trivial(tt);
  EXPECT_FALSE(verify_certificate(cert, two, tt));
}

TEST(VerifyCertificate, SizeMismatchRejected) {
  const Timetable tt = seeded(43);
  const OptimalSolution s = solve_optimal(tt);
  AntichainCertificate cert = s.certificate;
  for (auto& [seq, ids] : cert.groups) {
    if (ids.size() > 1) {
      ids.pop_back();
      break;
    }
  }
  EXPECT_FALSE(verify_certificate(cert, s.partition, tt));
  AntichainCertificate missing = s.certificate;
  missing.groups.erase(missing.groups.begin());
  EXPECT_FALSE(verify_certificate(missing, s.partition, tt));
}

TEST(CompareSolvers, NoOvertakingGreedyMatchesOptimal) {
  GeneratorSpec spec;
  spec.num_sequences = 5;
  spec.trips_per_sequence = 20;
  spec.jitter_seconds = 300;
  spec.rng_seed = 3;
  const ComparisonStats stats = compare_solvers(generate_synthetic(spec));
  EXPECT_EQ(stats.total_greedy, stats.total_optimal);
  EXPECT_EQ(stats.groups_where_greedy_suboptimal, 0u);
  EXPECT_EQ(stats.total_trivial, 100u);
}

TEST(CompareSolvers, SingleTrip) {
  const ComparisonStats stats = compare_solvers(make_timetable({two_stop("a", 0, 10)}));
  EXPECT_EQ(stats.total_optimal, 1u);
  EXPECT_EQ(stats.total_greedy, 1u);
  EXPECT_EQ(stats.total_trivial, 1u);
}

TEST(CompareSolvers, PairwiseOvertakingGroup) {
  std::vector<Trip> trips;
  for (int i = 0; i < 5; ++i) trips.push_back(two_stop("t" + std::to_string(i), i, 100 - i));
  const ComparisonStats stats = compare_solvers(make_timetable(std::move(trips)));
  EXPECT_EQ(stats.total_optimal, 5u);
  EXPECT_EQ(stats.total_greedy, 5u);
  EXPECT_EQ(stats.total_trivial, 5u);
}

TEST(CompareSolvers, ReportsGreedyGap) {
  const Timetable tt =
      make_timetable({two_stop("a", 0, 130), two_stop("b", 10, 110), two_stop("c", 20, 140),
                      two_stop("d", 30, 120), two_stop("x", 0, 10, "X", "Y")});
  const ComparisonStats stats = compare_solvers(tt);
  ASSERT_EQ(stats.groups.size(), 2u);
  EXPECT_EQ(stats.groups_where_greedy_suboptimal, 1u);
  EXPECT_EQ(stats.total_optimal, 3u);
  EXPECT_EQ(stats.total_greedy, 4u);
  std::size_t trips = 0;
  for (const auto& g : stats.groups) trips += g.trips;
  EXPECT_EQ(trips, stats.total_trips);
}

TEST(CompareSolvers, EmptyTimetable) {
  const ComparisonStats stats = compare_solvers(Timetable{});
  EXPECT_TRUE(stats.groups.empty());
  EXPECT_EQ(stats.total_trips + stats.total_optimal + stats.total_greedy, 0u);
}

}  // namespace
}  // namespace fifo_routes
