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
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

#include "fifo_routes/matching.h"

namespace fifo_routes {

namespace {

// Exposes one slot per later member and tests precedence lazily.
class LazyPrecedenceGraph {
 public:
  explicit LazyPrecedenceGraph(const PrecedenceRelation& rel) : rel_(rel) {}
  std::size_t left_size() const { return rel_.size(); }
  std::size_t right_size() const { return rel_.size(); }
  std::size_t slot_count(std::size_t u) const { return rel_.size() - u - 1; }
  std::int64_t slot(std::size_t u, std::size_t k) const {
    const std::size_t j = u + 1 + k;
    return rel_.dominates(u, j) ? static_cast<std::int64_t>(j) : -1;
  }

 private:
  const PrecedenceRelation& rel_;
};

AdjacencyGraph adjacency_of(const PrecedenceRelation& rel) {
  std::vector<std::vector<std::int32_t>> adj(rel.size());
  for (std::size_t i = 0; i < rel.size(); ++i) {
    for (std::size_t j = i + 1; j < rel.size(); ++j) {
      if (rel.dominates(i, j)) adj[i].push_back(static_cast<std::int32_t>(j));
    }
  }
  return AdjacencyGraph::from_lists(rel.size(), adj);
}

template <SlotGraph G>
GroupChains chains_from_matching(const G& graph) {
  const std::size_t n = graph.left_size();
  const Matching m = hopcroft_karp(graph);
  GroupChains out;
  out.matching_size = m.size;
  for (std::size_t start = 0; start < n; ++start) {
    if (m.mate_right[start] != Matching::kFree) continue;
    auto& chain = out.chains.emplace_back();
    for (std::int32_t v = static_cast<std::int32_t>(start); v != Matching::kFree;
         v = m.mate_left[v]) {
      chain.push_back(static_cast<std::size_t>(v));
    }
  }
  const AlternatingReach reach = alternating_reach(graph, m);
  for (std::size_t x = 0; x < n; ++x) {
    if (reach.left[x] && !reach.right[x]) out.antichain.push_back(x);
  }
  return out;
}

std::string describe(const StopSequence& seq) {
  std::string s = "<";
  for (std::size_t i = 0; i < seq.stops.size(); ++i) {
    if (i > 0) s += ",";
    s += seq.stops[i].str();
  }
  return s + ">";
}

// Runs fn(i) for i in [0, n) on up to `threads` workers. Each index writes
// only its own result slot, so the merged output is order-independent.
void for_each_group(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::mutex error_mu;
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < n && !failed; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(error_mu);
            if (!error) error = std::current_exception();
            failed = true;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

using Blocks = std::vector<std::vector<std::size_t>>;

// Assembles a partition from per-group blocks of member positions.
RoutePartition assemble(const Timetable& timetable, const GroupIndex& index,
                        const std::vector<Blocks>& blocks, Algorithm algorithm) {
  RoutePartition p;
  p.algorithm = algorithm;
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  p.routes.reserve(total);
  for (std::size_t g = 0; g < index.groups.size(); ++g) {
    const TripGroup& group = index.groups[g];
    p.per_group_counts[group.sequence] = blocks[g].size();
    for (const auto& block : blocks[g]) {
      Route r;
      r.id = route_id(p.routes.size() + 1, total);
      r.trips.reserve(block.size());
      for (std::size_t pos : block) r.trips.push_back(timetable.trips[group.members[pos]].id);
      p.routes.push_back(std::move(r));
    }
  }
  for (const auto& group : index.groups) {
    if (group.sequence.stops.size() == 1) p.single_event_trips += group.size();
  }
  return p;
}

std::vector<std::size_t> iota_positions(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kOptimal: return "optimal";
    case Algorithm::kGreedy: return "greedy";
    case Algorithm::kTrivial: return "trivial";
    case Algorithm::kBrute: return "brute";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kOptimal, Algorithm::kGreedy, Algorithm::kTrivial,
                      Algorithm::kBrute}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

std::size_t RoutePartition::total_trips() const {
  std::size_t n = 0;
  for (const auto& r : routes) n += r.trips.size();
  return n;
}

std::string route_id(std::size_t ordinal, std::size_t total) {
  std::string digits = std::to_string(ordinal);
  const std::size_t width = std::max<std::size_t>(6, std::to_string(total).size());
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return "R" + digits;
}

GroupChains solve_group_optimal(const TripGroup& group, const Timetable& timetable,
                                std::size_t materialize_limit) {
  if (group.size() == 1) return GroupChains{{{0}}, {0}, 0};
  const PrecedenceRelation rel = build_precedence(group, timetable, materialize_limit);
  if (rel.materialized()) return chains_from_matching(adjacency_of(rel));
  return chains_from_matching(LazyPrecedenceGraph(rel));
}

std::vector<std::vector<std::size_t>> solve_group_greedy(const TripGroup& group,
                                                         const Timetable& timetable,
                                                         std::size_t materialize_limit) {
  const PrecedenceRelation rel = build_precedence(group, timetable, materialize_limit);
  std::vector<std::vector<std::size_t>> routes;
  for (std::size_t cur = 0; cur < rel.size(); ++cur) {
    std::vector<std::size_t>* best = nullptr;
    for (auto& route : routes) {
      const std::size_t last = route.back();
      if (rel.dominates(last, cur) && (best == nullptr || last > best->back())) best = &route;
    }
    if (best != nullptr) {
      best->push_back(cur);
    } else {
      routes.push_back({cur});
    }
  }
  return routes;
}

OptimalSolution solve_optimal(const Timetable& timetable, const SolveOptions& options) {
  const GroupIndex index = group_by_stop_sequence(timetable);
  std::vector<GroupChains> solved(index.groups.size());
  for_each_group(index.groups.size(), options.threads, [&](std::size_t g) {
    solved[g] = solve_group_optimal(index.groups[g], timetable, options.materialize_limit);
  });

  std::vector<Blocks> blocks(solved.size());
  OptimalSolution out;
  for (std::size_t g = 0; g < solved.size(); ++g) {
    blocks[g] = std::move(solved[g].chains);
    auto& ids = out.certificate.groups[index.groups[g].sequence];
    for (std::size_t pos : solved[g].antichain) {
      ids.push_back(timetable.trips[index.groups[g].members[pos]].id);
    }
  }
  out.partition = assemble(timetable, index, blocks, Algorithm::kOptimal);
  return out;
}

RoutePartition solve_greedy(const Timetable& timetable, const SolveOptions& options) {
  const GroupIndex index = group_by_stop_sequence(timetable);
  std::vector<Blocks> blocks(index.groups.size());
  for_each_group(index.groups.size(), options.threads, [&](std::size_t g) {
    blocks[g] = solve_group_greedy(index.groups[g], timetable, options.materialize_limit);
  });
  return assemble(timetable, index, blocks, Algorithm::kGreedy);
}

RoutePartition solve_trivial(const Timetable& timetable) {
  const GroupIndex index = group_by_stop_sequence(timetable);
  std::vector<Blocks> blocks(index.groups.size());
  for (std::size_t g = 0; g < index.groups.size(); ++g) {
    for (std::size_t pos : iota_positions(index.groups[g].size())) blocks[g].push_back({pos});
  }
  return assemble(timetable, index, blocks, Algorithm::kTrivial);
}

namespace {

Blocks brute_force_blocks(const TripGroup& group, const Timetable& timetable, std::size_t limit) {
  const std::size_t n = group.size();
  if (n > limit) {
    throw SolverRefusal("group " + describe(group.sequence) + " has " + std::to_string(n) +
                            " trips, above the brute-force limit of " + std::to_string(limit),
                        limit);
  }
  std::vector<std::vector<bool>> comparable(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Trip& a = timetable.trips[group.members[i]];
      const Trip& b = timetable.trips[group.members[j]];
      comparable[i][j] = i != j && (precedes(a, b) || precedes(b, a));
    }
  }

  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::size_t> best_rgs;
  std::size_t best = n + 1;
  Blocks open;

  std::function<void(std::size_t)> extend = [&](std::size_t pos) {
    if (open.size() >= best) return;
    if (pos == n) {
      best = open.size();
      best_rgs = rgs;
      return;
    }
    for (std::size_t b = 0; b <= open.size(); ++b) {
      if (b < open.size()) {
        const bool fits = std::all_of(open[b].begin(), open[b].end(),
                                      [&](std::size_t m) { return comparable[m][pos]; });
        if (!fits) continue;
        rgs[pos] = b;
        open[b].push_back(pos);
        extend(pos + 1);
        open[b].pop_back();
      } else {
        rgs[pos] = b;
        open.push_back({pos});
        extend(pos + 1);
        open.pop_back();
      }
    }
  };
  extend(0);

  Blocks blocks(best);
  for (std::size_t pos = 0; pos < n; ++pos) blocks[best_rgs[pos]].push_back(pos);
  // Positions ascend within a block, which is canonical and therefore chain order.
  return blocks;
}

}  // namespace

RoutePartition brute_force_min(const TripGroup& group, const Timetable& timetable,
                               std::size_t limit) {
  GroupIndex single;
  single.groups.push_back(group);
  return assemble(timetable, single, {brute_force_blocks(group, timetable, limit)},
                  Algorithm::kBrute);
}

RoutePartition solve_brute(const Timetable& timetable, const SolveOptions& options) {
  const GroupIndex index = group_by_stop_sequence(timetable);
  for (const auto& group : index.groups) {
    if (group.size() > options.brute_limit) {
      throw SolverRefusal("group " + describe(group.sequence) + " has " +
                              std::to_string(group.size()) +
                              " trips, above the brute-force limit of " +
                              std::to_string(options.brute_limit),
                          options.brute_limit);
    }
  }
  std::vector<Blocks> blocks(index.groups.size());
  for_each_group(index.groups.size(), options.threads, [&](std::size_t g) {
    blocks[g] = brute_force_blocks(index.groups[g], timetable, options.brute_limit);
  });
  return assemble(timetable, index, blocks, Algorithm::kBrute);
}

std::vector<std::string> max_antichain_bruteforce(const TripGroup& group,
                                                  const Timetable& timetable,
                                                  std::size_t limit) {
  const std::size_t n = group.size();
  if (n > limit) {
    throw SolverRefusal("group " + describe(group.sequence) + " has " + std::to_string(n) +
                            " trips, above the antichain enumeration limit of " +
                            std::to_string(limit),
                        limit);
  }
  std::vector<std::vector<bool>> overtake(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      overtake[i][j] = i != j && compare_trips(timetable.trips[group.members[i]],
                                               timetable.trips[group.members[j]]) ==
                                     Comparison::kIncomparable;
    }
  }

  std::vector<std::size_t> chosen;
  std::vector<std::size_t> best;
  // Include/exclude enumeration restricted to pairwise-overtaking subsets.
  std::function<void(std::size_t)> visit = [&](std::size_t pos) {
    if (chosen.size() + (n - pos) <= best.size()) return;
    if (pos == n) {
      best = chosen;
      return;
    }
    const bool compatible = std::all_of(chosen.begin(), chosen.end(),
                                        [&](std::size_t c) { return overtake[c][pos]; });
    if (compatible) {
      chosen.push_back(pos);
      visit(pos + 1);
      chosen.pop_back();
    }
    visit(pos + 1);
  };
  visit(0);

  std::vector<std::string> ids;
  for (std::size_t pos : best) ids.push_back(timetable.trips[group.members[pos]].id);
  return ids;
}

}  // namespace fifo_routes
