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

#include "fifo_routes/solvers.h"

#include <algorithm>
#include <random>

#include "fifo_routes/verify.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fifo_routes {
namespace {

using testing::make_timetable;
using testing::two_stop;
using Ids = std::vector<std::string>;

std::vector<Ids> route_members(const RoutePartition& p) {
  std::vector<Ids> out;
  for (const auto& r : p.routes) out.push_back(r.trips);
  return out;
}

// a and c overtake each other; both precede b.
Timetable three_trip_instance() {
  return make_timetable({two_stop("a", 0, 10), two_stop("b", 5, 15), two_stop("c", 2, 8)});
}

Timetable antichain_of(std::size_t n) {
  std::vector<Trip> trips;
  for (std::size_t i = 0; i < n; ++i) {
    const auto t = static_cast<std::int64_t>(i);
    trips.push_back(two_stop("t" + std::to_string(i), t, 100 - t));
  }
  return make_timetable(std::move(trips));
}

Timetable chain_of(std::size_t n) {
  std::vector<Trip> trips;
  for (std::size_t i = 0; i < n; ++i) {
    const auto t = static_cast<std::int64_t>(i) * 10;
    trips.push_back(two_stop("t" + std::to_string(i), t, t + 50));
  }
  return make_timetable(std::move(trips));
}

// Greedy best-fit puts c behind b, leaving d without a route; {a,c},{b,d}
// needs only two.
Timetable greedy_gap_instance() {
  return make_timetable({two_stop("a", 0, 130), two_stop("b", 10, 110), two_stop("c", 20, 140),
                         two_stop("d", 30, 120)});
}

TEST(SolveOptimal, ThreeTripInstance) {
  const Timetable tt = three_trip_instance();
  const OptimalSolution s = solve_optimal(tt);
  ASSERT_EQ(s.partition.routes.size(), 2u);
  const auto routes = route_members(s.partition);
  EXPECT_TRUE(routes == (std::vector<Ids>{{"a", "b"}, {"c"}}) ||
              routes == (std::vector<Ids>{{"c", "b"}, {"a"}}));
  ASSERT_EQ(s.certificate.groups.size(), 1u);
  Ids cert = s.certificate.groups.begin()->second;
  std::sort(cert.begin(), cert.end());
  EXPECT_EQ(cert, (Ids{"a", "c"}));
  EXPECT_EQ(s.partition.routes[0].id, "R000001");
  EXPECT_EQ(s.partition.routes[1].id, "R000002");
}

TEST(SolveOptimal, IdenticalTripsFormOneRoute) {
  const Timetable tt =
      make_timetable({two_stop("t3", 0, 10), two_stop("t1", 0, 10), two_stop("t2", 0, 10)});
  const OptimalSolution s = solve_optimal(tt);
  ASSERT_EQ(s.partition.routes.size(), 1u);
  EXPECT_EQ(s.partition.routes[0].trips, (Ids{"t1", "t2", "t3"}));
  EXPECT_EQ(s.certificate.groups.begin()->second.size(), 1u);
}

TEST(SolveOptimal, AntichainGivesSingletons) {
  const Timetable tt = antichain_of(6);
  const OptimalSolution s = solve_optimal(tt);
  EXPECT_EQ(s.partition.routes.size(), 6u);
  EXPECT_EQ(s.certificate.groups.begin()->second.size(), 6u);
}

TEST(SolveOptimal, EmptyTimetable) {
  const OptimalSolution s = solve_optimal(Timetable{});
  EXPECT_TRUE(s.partition.routes.empty());
  EXPECT_TRUE(s.certificate.groups.empty());
}

TEST(SolveOptimal, SeedSevenAgreesWithBruteForce) {
  GeneratorSpec spec;
  spec.trips_per_sequence = 5;
  spec.stops_per_sequence = 3;
  spec.headway_seconds = 60;
  spec.jitter_seconds = 300;
  spec.overtake_probability = 0.5;
  spec.rng_seed = 7;
  const Timetable tt = generate_synthetic(spec);
  const GroupIndex index = group_by_stop_sequence(tt);
  const std::size_t optimal = solve_optimal(tt).partition.routes.size();
  EXPECT_EQ(optimal, brute_force_min(index.groups[0], tt).routes.size());
  EXPECT_EQ(optimal, testing::min_chain_cover_dp(index.groups[0], tt));
}

TEST(SolveOptimal, SingleEventTripsCounted) {
  const Timetable tt = make_timetable({testing::make_trip("x", {{"A", 0, 10}}),
                                       testing::make_trip("y", {{"A", 5, 5}})});
  const OptimalSolution s = solve_optimal(tt);
  EXPECT_EQ(s.partition.single_event_trips, 2u);
  EXPECT_EQ(s.partition.routes.size(), 2u);
}

TEST(SolveGroupOptimal, ChainCountIsSizeMinusMatching) {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 200; ++iter) {
    const Timetable tt = testing::random_group(rng, 1 + iter % 12, (iter % 4) / 3.0, 0.2);
    const GroupIndex index = group_by_stop_sequence(tt);
    const GroupChains c = solve_group_optimal(index.groups[0], tt);
    EXPECT_EQ(c.chains.size(), index.groups[0].size() - c.matching_size);
    EXPECT_EQ(c.antichain.size(), c.chains.size());
  }
}

TEST(SolveGroupOptimal, LazyRelationGivesSameCounts) {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 50; ++iter) {
    const Timetable tt = testing::random_group(rng, 30, 0.6, 0.1);
    const GroupIndex index = group_by_stop_sequence(tt);
    const GroupChains dense = solve_group_optimal(index.groups[0], tt);
    const GroupChains lazy = solve_group_optimal(index.groups[0], tt, 8);
    EXPECT_EQ(dense.chains.size(), lazy.chains.size());
    EXPECT_EQ(lazy.antichain.size(), lazy.chains.size());
  }
}

TEST(SolveGreedy, ChainIsOneRoute) {
  EXPECT_EQ(solve_greedy(chain_of(3)).routes.size(), 1u);
}

TEST(SolveGreedy, IncomparablePairIsTwoRoutes) {
  EXPECT_EQ(solve_greedy(antichain_of(2)).routes.size(), 2u);
}

TEST(SolveGreedy, BestFitCanBeSuboptimal) {
  const Timetable tt = greedy_gap_instance();
  const RoutePartition greedy = solve_greedy(tt);
  EXPECT_EQ(route_members(greedy), (std::vector<Ids>{{"a"}, {"b", "c"}, {"d"}}));
  EXPECT_EQ(solve_optimal(tt).partition.routes.size(), 2u);
  EXPECT_EQ(brute_force_min(group_by_stop_sequence(tt).groups[0], tt).routes.size(), 2u);
}

TEST(SolveGreedy, EqualsOptimalWithoutOvertaking) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GeneratorSpec spec;
    spec.num_sequences = 4;
    spec.trips_per_sequence = 15;
    spec.stops_per_sequence = 1 + seed % 5;
    spec.jitter_seconds = 500;
    spec.headway_seconds = 120;
    spec.rng_seed = seed;
    const Timetable tt = generate_synthetic(spec);
    EXPECT_EQ(solve_greedy(tt).per_group_counts, solve_optimal(tt).partition.per_group_counts);
  }
}

TEST(SolveTrivial, OneRoutePerTrip) {
  EXPECT_EQ(solve_trivial(three_trip_instance()).routes.size(), 3u);
  EXPECT_EQ(solve_trivial(Timetable{}).routes.size(), 0u);
  const Timetable tt = greedy_gap_instance();
  EXPECT_TRUE(verify_partition(solve_trivial(tt), tt).valid);
}

TEST(BruteForceMin, ChainAndAntichain) {
  const Timetable chain = chain_of(3);
  EXPECT_EQ(brute_force_min(group_by_stop_sequence(chain).groups[0], chain).routes.size(), 1u);
  const Timetable anti = antichain_of(3);
  EXPECT_EQ(brute_force_min(group_by_stop_sequence(anti).groups[0], anti).routes.size(), 3u);
}

TEST(BruteForceMin, PicksLexicographicallySmallestGrowthString) {
  // Canonical order a, c, b; "010" is the first two-block string.
  const Timetable tt = three_trip_instance();
  const RoutePartition p = brute_force_min(group_by_stop_sequence(tt).groups[0], tt);
  EXPECT_EQ(route_members(p), (std::vector<Ids>{{"a", "b"}, {"c"}}));
  EXPECT_EQ(p.algorithm, Algorithm::kBrute);
}

TEST(BruteForceMin, RefusesAboveLimit) {
  const Timetable tt = chain_of(11);
  const GroupIndex index = group_by_stop_sequence(tt);
  const TripGroup& g = index.groups[0];
  try {
    brute_force_min(g, tt);
    FAIL() << "expected refusal";
  } catch (const SolverRefusal& e) {
    EXPECT_EQ(e.limit(), 10u);
    EXPECT_NE(std::string(e.what()).find("limit of 10"), std::string::npos);
  }
  EXPECT_EQ(brute_force_min(g, tt, 11).routes.size(), 1u);
  SolveOptions options;
  EXPECT_THROW(solve_brute(tt, options), SolverRefusal);
}

TEST(MaxAntichainBruteforce, ChainAndAntichain) {
  const Timetable chain = chain_of(4);
  EXPECT_EQ(max_antichain_bruteforce(group_by_stop_sequence(chain).groups[0], chain).size(), 1u);
  const Timetable anti = antichain_of(4);
  EXPECT_EQ(max_antichain_bruteforce(group_by_stop_sequence(anti).groups[0], anti).size(), 4u);
}

TEST(MaxAntichainBruteforce, SeedThirteenMatchesOptimal) {
  GeneratorSpec spec;
  spec.trips_per_sequence = 8;
  spec.stops_per_sequence = 3;
  spec.headway_seconds = 30;
  spec.jitter_seconds = 400;
  spec.overtake_probability = 0.5;
  spec.rng_seed = 13;
  const Timetable tt = generate_synthetic(spec);
  const GroupIndex index = group_by_stop_sequence(tt);
  const TripGroup& g = index.groups[0];
  EXPECT_EQ(max_antichain_bruteforce(g, tt).size(), solve_optimal(tt).partition.routes.size());
}

TEST(MaxAntichainBruteforce, RefusesAboveLimit) {
  const Timetable tt = chain_of(21);
  EXPECT_THROW(max_antichain_bruteforce(group_by_stop_sequence(tt).groups[0], tt), SolverRefusal);
}

TEST(SolversProperty, OracleEquivalenceSmallGroups) {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 400; ++iter) {
    const Timetable tt = testing::random_group(rng, 1 + iter % 8, (iter % 4) / 3.0, 0.2);
    const GroupIndex index = group_by_stop_sequence(tt);
    const TripGroup& g = index.groups[0];
    const std::size_t optimal = solve_optimal(tt).partition.routes.size();
    EXPECT_EQ(optimal, brute_force_min(g, tt).routes.size());
    EXPECT_EQ(optimal, testing::min_chain_cover_dp(g, tt));
    EXPECT_EQ(optimal, max_antichain_bruteforce(g, tt).size());
  }
}

TEST(SolversProperty, SandwichAndValidity) {
  std::mt19937_64 rng(44);
  for (int iter = 0; iter < 100; ++iter) {
    GeneratorSpec spec;
    spec.num_sequences = 1 + iter % 4;
    spec.trips_per_sequence = 1 + iter % 9;
    spec.stops_per_sequence = 1 + iter % 5;
    spec.headway_seconds = 60;
    spec.jitter_seconds = 300;
    spec.overtake_probability = (iter % 5) / 4.0;
    spec.rng_seed = rng();
    const Timetable tt = generate_synthetic(spec);
    const OptimalSolution opt = solve_optimal(tt);
    const RoutePartition greedy = solve_greedy(tt);
    const RoutePartition trivial = solve_trivial(tt);
    const RoutePartition brute = solve_brute(tt);
    EXPECT_LE(opt.partition.routes.size(), greedy.routes.size());
    EXPECT_LE(greedy.routes.size(), trivial.routes.size());
    EXPECT_EQ(trivial.routes.size(), tt.trips.size());
    EXPECT_EQ(brute.routes.size(), opt.partition.routes.size());
    for (const auto* p : {&opt.partition, &greedy, &trivial, &brute}) {
      EXPECT_TRUE(verify_partition(*p, tt).valid) << to_string(p->algorithm);
    }
    EXPECT_TRUE(verify_certificate(opt.certificate, opt.partition, tt));
  }
}

TEST(SolversProperty, PermutationInvariantOutput) {
  std::mt19937_64 rng(45);
  for (int iter = 0; iter < 40; ++iter) {
    GeneratorSpec spec;
    spec.num_sequences = 3;
    spec.trips_per_sequence = 10;
    spec.stops_per_sequence = 3;
    spec.headway_seconds = 60;
    spec.jitter_seconds = 200;
    spec.overtake_probability = 0.6;
    spec.rng_seed = rng();
    const Timetable tt = generate_synthetic(spec);
    Timetable shuffled = tt;
    std::shuffle(shuffled.trips.begin(), shuffled.trips.end(), rng);
    const OptimalSolution a = solve_optimal(tt);
    const OptimalSolution b = solve_optimal(shuffled);
    EXPECT_EQ(a.partition.routes, b.partition.routes);
    EXPECT_EQ(a.certificate.groups, b.certificate.groups);
    EXPECT_EQ(solve_greedy(tt).routes, solve_greedy(shuffled).routes);
  }
}

TEST(SolversProperty, ThreadCountDoesNotChangeOutput) {
  GeneratorSpec spec;
  spec.num_sequences = 20;
  spec.trips_per_sequence = 30;
  spec.stops_per_sequence = 4;
  spec.headway_seconds = 90;
  spec.jitter_seconds = 200;
  spec.overtake_probability = 0.4;
  spec.rng_seed = 46;
  const Timetable tt = generate_synthetic(spec);
  SolveOptions one;
  one.threads = 1;
  SolveOptions four;
  four.threads = 4;
  EXPECT_EQ(solve_optimal(tt, one).partition.routes, solve_optimal(tt, four).partition.routes);
  EXPECT_EQ(solve_greedy(tt, one).routes, solve_greedy(tt, four).routes);
}

TEST(RouteId, ZeroPadded) {
  EXPECT_EQ(route_id(1, 5), "R000001");
  EXPECT_EQ(route_id(42, 1234567), "R0000042");
}

TEST(ParseAlgorithm, KnownNames) {
  EXPECT_EQ(parse_algorithm("optimal"), Algorithm::kOptimal);
  EXPECT_EQ(parse_algorithm("brute"), Algorithm::kBrute);
  EXPECT_EQ(parse_algorithm("fastest"), std::nullopt);
}

}  // namespace
}  // namespace fifo_routes
