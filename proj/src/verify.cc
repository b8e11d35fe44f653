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

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <unordered_map>

#include "fifo_routes/order.h"

namespace fifo_routes {

namespace {

std::unordered_map<std::string_view, std::size_t> index_by_id(const Timetable& timetable) {
  std::unordered_map<std::string_view, std::size_t> by_id;
  by_id.reserve(timetable.trips.size());
  for (std::size_t i = 0; i < timetable.trips.size(); ++i) by_id.emplace(timetable.trips[i].id, i);
  return by_id;
}

}  // namespace

std::string_view to_string(PartitionViolation::Condition c) {
  switch (c) {
    case PartitionViolation::Condition::kCoverage: return "coverage";
    case PartitionViolation::Condition::kStopSequence: return "stop_sequence";
    case PartitionViolation::Condition::kOvertaking: return "overtaking";
    case PartitionViolation::Condition::kOrder: return "order";
  }
  return "?";
}

std::string describe(const PartitionViolation& v) {
  std::string s = std::string(to_string(v.condition)) + " route=" +
                  (v.route_id.empty() ? "-" : v.route_id) + " trip=" + v.first_trip;
  if (!v.second_trip.empty()) s += " other=" + v.second_trip;
  return s;
}

VerificationReport verify_partition(const RoutePartition& partition, const Timetable& timetable,
                                    std::uint64_t sample_seed) {
  using Condition = PartitionViolation::Condition;
  const auto by_id = index_by_id(timetable);
  VerificationReport report;
  std::vector<int> seen(timetable.trips.size(), 0);
  std::set<StopSequence> sequences;

  const auto pair_violation = [](const Trip& a, const Trip& b) -> std::optional<Condition> {
    switch (compare_trips(a, b)) {
      case Comparison::kDifferentShape: return Condition::kStopSequence;
      case Comparison::kIncomparable: return Condition::kOvertaking;
      default: return precedes(a, b) ? std::nullopt : std::optional(Condition::kOrder);
    }
  };

  for (std::size_t r = 0; r < partition.routes.size(); ++r) {
    const Route& route = partition.routes[r];
    std::vector<const Trip*> trips;
    trips.reserve(route.trips.size());
    for (const auto& id : route.trips) {
      auto it = by_id.find(id);
      if (it == by_id.end()) {
        throw VerificationError("route " + route.id + " names unknown trip '" + id + "'");
      }
      if (++seen[it->second] == 2) {
        report.violations.push_back({route.id, id, "", Condition::kCoverage});
      }
      trips.push_back(&timetable.trips[it->second]);
    }
    if (trips.empty()) continue;
    sequences.insert(stop_sequence_of(*trips.front()));

    bool shape_ok = true;
    for (std::size_t i = 1; i < trips.size(); ++i) {
      if (trips[i]->events.size() != trips[0]->events.size() ||
          stop_sequence_of(*trips[i]) != stop_sequence_of(*trips[0])) {
        report.violations.push_back(
            {route.id, trips[0]->id, trips[i]->id, Condition::kStopSequence});
        shape_ok = false;
      }
    }
    if (!shape_ok) continue;

    for (std::size_t i = 1; i < trips.size(); ++i) {
      if (auto c = pair_violation(*trips[i - 1], *trips[i])) {
        report.violations.push_back({route.id, trips[i - 1]->id, trips[i]->id, *c});
      }
    }

    const std::size_t len = trips.size();
    if (len >= 3) {
      std::mt19937_64 rng(sample_seed + r);
      std::set<std::pair<std::size_t, std::size_t>> reported;
      const std::size_t samples = std::min<std::size_t>(len * len, 100);
      for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t i = std::uniform_int_distribution<std::size_t>(0, len - 3)(rng);
        const std::size_t j = std::uniform_int_distribution<std::size_t>(i + 2, len - 1)(rng);
        if (auto c = pair_violation(*trips[i], *trips[j]); c && reported.emplace(i, j).second) {
          report.violations.push_back({route.id, trips[i]->id, trips[j]->id, *c});
        }
      }
    }
  }

  for (std::size_t t = 0; t < seen.size(); ++t) {
    if (seen[t] == 0) {
      report.violations.push_back({"", timetable.trips[t].id, "", Condition::kCoverage});
    }
  }
  report.groups_checked = sequences.size();
  report.valid = report.violations.empty();
  return report;
}

bool verify_certificate(const AntichainCertificate& certificate, const RoutePartition& partition,
                        const Timetable& timetable) {
  const auto by_id = index_by_id(timetable);
  std::map<StopSequence, std::size_t> route_counts;
  for (const auto& route : partition.routes) {
    if (route.trips.empty()) continue;
    auto it = by_id.find(route.trips.front());
    if (it == by_id.end()) return false;
    ++route_counts[stop_sequence_of(timetable.trips[it->second])];
  }
  if (route_counts.size() != certificate.groups.size()) return false;

  for (const auto& [sequence, count] : route_counts) {
    auto cert = certificate.groups.find(sequence);
    if (cert == certificate.groups.end() || cert->second.size() != count) return false;
    std::vector<const Trip*> members;
    for (const auto& id : cert->second) {
      auto it = by_id.find(id);
      if (it == by_id.end()) return false;
      const Trip& trip = timetable.trips[it->second];
      if (stop_sequence_of(trip) != sequence) return false;
      members.push_back(&trip);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (compare_trips(*members[i], *members[j]) != Comparison::kIncomparable) return false;
      }
    }
  }
  return true;
}

ComparisonStats compare_solvers(const Timetable& timetable, const SolveOptions& options) {
  const RoutePartition optimal = solve_optimal(timetable, options).partition;
  const RoutePartition greedy = solve_greedy(timetable, options);
  const RoutePartition trivial = solve_trivial(timetable);

  ComparisonStats stats;
  for (const auto& [sequence, trips] : trivial.per_group_counts) {
    GroupStats g{sequence, trips, optimal.per_group_counts.at(sequence),
                 greedy.per_group_counts.at(sequence), trips};
    stats.total_trips += g.trips;
    stats.total_optimal += g.optimal;
    stats.total_greedy += g.greedy;
    stats.total_trivial += g.trivial;
    if (g.greedy > g.optimal) ++stats.groups_where_greedy_suboptimal;
    stats.groups.push_back(std::move(g));
  }
  return stats;
}

}  // namespace fifo_routes
