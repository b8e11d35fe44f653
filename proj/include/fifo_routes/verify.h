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

#ifndef FIFO_ROUTES_VERIFY_H_
#define FIFO_ROUTES_VERIFY_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fifo_routes/solvers.h"
#include "fifo_routes/timetable.h"

namespace fifo_routes {

struct PartitionViolation {
  enum class Condition {
    kCoverage,      // a trip is missing or listed more than once
    kStopSequence,  // route members do not share one stop sequence
    kOvertaking,    // two route members overtake each other
    kOrder,         // comparable members listed in the wrong direction
  };

  std::string route_id;
  std::string first_trip;
  std::string second_trip;
  Condition condition;
};

std::string_view to_string(PartitionViolation::Condition c);
std::string describe(const PartitionViolation& v);

struct VerificationReport {
  bool valid = true;
  std::vector<PartitionViolation> violations;
  std::size_t groups_checked = 0;
};

// A partition names a trip the timetable does not contain.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Checks coverage, shared stop sequences, and the tie-broken precedence of
// every adjacent pair in route order. Additionally samples
// min(|route|^2, 100) non-adjacent pairs per route with a generator seeded
// from `sample_seed`.
VerificationReport verify_partition(const RoutePartition& partition, const Timetable& timetable,
                                    std::uint64_t sample_seed = 0x5eedULL);

// True iff every group of the partition has a certificate of pairwise
// overtaking trips whose size equals that group's route count. Uses only
// compare_trips.
bool verify_certificate(const AntichainCertificate& certificate, const RoutePartition& partition,
                        const Timetable& timetable);

struct GroupStats {
  StopSequence sequence;
  std::size_t trips = 0;
  std::size_t optimal = 0;
  std::size_t greedy = 0;
  std::size_t trivial = 0;
};

struct ComparisonStats {
  std::vector<GroupStats> groups;
  std::size_t total_trips = 0;
  std::size_t total_optimal = 0;
  std::size_t total_greedy = 0;
  std::size_t total_trivial = 0;
  std::size_t groups_where_greedy_suboptimal = 0;
};

ComparisonStats compare_solvers(const Timetable& timetable, const SolveOptions& options = {});

}  // namespace fifo_routes

#endif  // FIFO_ROUTES_VERIFY_H_
