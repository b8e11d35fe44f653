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

#ifndef FIFO_ROUTES_SOLVERS_H_
#define FIFO_ROUTES_SOLVERS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fifo_routes/order.h"
#include "fifo_routes/timetable.h"

namespace fifo_routes {

enum class Algorithm { kOptimal, kGreedy, kTrivial, kBrute };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct RoutePartition {
  std::vector<Route> routes;
  Algorithm algorithm = Algorithm::kTrivial;
  std::map<StopSequence, std::size_t> per_group_counts;
  // Trips with a single event. They are grouped like any other trip.
  std::size_t single_event_trips = 0;

  std::size_t total_trips() const;
};

// Per stop sequence, a set of pairwise overtaking trips.
struct AntichainCertificate {
  std::map<StopSequence, std::vector<std::string>> groups;
};

struct OptimalSolution {
  RoutePartition partition;
  AntichainCertificate certificate;
};

// Thrown when an exhaustive solver is asked for a group above its limit.
class SolverRefusal : public std::runtime_error {
 public:
  SolverRefusal(const std::string& what, std::size_t limit)
      : std::runtime_error(what), limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

inline constexpr std::size_t kDefaultBruteLimit = 10;
inline constexpr std::size_t kDefaultAntichainLimit = 20;

struct SolveOptions {
  // Worker threads for independent groups; 0 means hardware concurrency.
  unsigned threads = 0;
  std::size_t materialize_limit = kDefaultMaterializeLimit;
  std::size_t brute_limit = kDefaultBruteLimit;
};

// Minimum chain partition of one group. Positions index TripGroup::members.
struct GroupChains {
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::size_t> antichain;
  std::size_t matching_size = 0;
};

// Maximum matching between two copies of the group (edge i -> j when i
// precedes j), chains read off matched successors, and a maximum antichain
// from the Koenig cover of the same matching.
GroupChains solve_group_optimal(const TripGroup& group, const Timetable& timetable,
                                std::size_t materialize_limit = kDefaultMaterializeLimit);

// Best-fit greedy: members in canonical order, each appended to the feasible
// route whose last trip is latest, or to a new route.
std::vector<std::vector<std::size_t>> solve_group_greedy(
    const TripGroup& group, const Timetable& timetable,
    std::size_t materialize_limit = kDefaultMaterializeLimit);

OptimalSolution solve_optimal(const Timetable& timetable, const SolveOptions& options = {});
RoutePartition solve_greedy(const Timetable& timetable, const SolveOptions& options = {});
RoutePartition solve_trivial(const Timetable& timetable);

// Exhaustive search over set partitions of one group (restricted growth
// strings in lexicographic order). Returns the first partition with the
// fewest blocks in which every block is a chain. Throws SolverRefusal above
// `limit` members.
RoutePartition brute_force_min(const TripGroup& group, const Timetable& timetable,
                               std::size_t limit = kDefaultBruteLimit);

// brute_force_min applied to every group.
RoutePartition solve_brute(const Timetable& timetable, const SolveOptions& options = {});

// Largest set of pairwise incomparable members, by subset enumeration.
// Throws SolverRefusal above `limit` members.
std::vector<std::string> max_antichain_bruteforce(const TripGroup& group,
                                                  const Timetable& timetable,
                                                  std::size_t limit = kDefaultAntichainLimit);

// "R" followed by the zero-padded 1-based ordinal, at least six digits.
std::string route_id(std::size_t ordinal, std::size_t total);

}  // namespace fifo_routes

#endif  // FIFO_ROUTES_SOLVERS_H_
