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

#ifndef FIFO_ROUTES_MATCHING_H_
#define FIFO_ROUTES_MATCHING_H_

// Maximum bipartite matching (Hopcroft-Karp) and the Koenig vertex cover
// derived from it.
//
// Graphs are read through "slots": left vertex u exposes slot_count(u)
// positions, and slot(u, k) is either a right vertex or -1 for an empty
// slot. A plain adjacency list has no empty slots; an implicit graph can
// expose one slot per right vertex and test edges lazily.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace fifo_routes {

template <typename G>
concept SlotGraph = requires(const G& g, std::size_t u, std::size_t k) {
  { g.left_size() } -> std::convertible_to<std::size_t>;
  { g.right_size() } -> std::convertible_to<std::size_t>;
  { g.slot_count(u) } -> std::convertible_to<std::size_t>;
  { g.slot(u, k) } -> std::convertible_to<std::int64_t>;
};

// Compressed adjacency lists.
class AdjacencyGraph {
 public:
  static AdjacencyGraph from_lists(std::size_t right,
                                   const std::vector<std::vector<std::int32_t>>& adj) {
    AdjacencyGraph g(adj.size(), right);
    for (std::size_t u = 0; u < adj.size(); ++u) {
      g.offsets_[u + 1] = g.offsets_[u] + adj[u].size();
      g.targets_.insert(g.targets_.end(), adj[u].begin(), adj[u].end());
    }
    return g;
  }

  std::size_t left_size() const { return offsets_.size() - 1; }
  std::size_t right_size() const { return right_; }
  std::size_t slot_count(std::size_t u) const { return offsets_[u + 1] - offsets_[u]; }
  std::int64_t slot(std::size_t u, std::size_t k) const { return targets_[offsets_[u] + k]; }
  std::size_t edge_count() const { return targets_.size(); }

 private:
  AdjacencyGraph(std::size_t left, std::size_t right)
      : right_(right), offsets_(left + 1, 0) {}

  std::size_t right_;
  std::vector<std::size_t> offsets_;
  std::vector<std::int32_t> targets_;
};

struct Matching {
  static constexpr std::int32_t kFree = -1;

  std::vector<std::int32_t> mate_left;   // right partner of each left vertex
  std::vector<std::int32_t> mate_right;  // left partner of each right vertex
  std::size_t size = 0;
};

template <SlotGraph G>
Matching hopcroft_karp(const G& g) {
  constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max();
  const std::size_t nl = g.left_size();
  Matching m;
  m.mate_left.assign(nl, Matching::kFree);
  m.mate_right.assign(g.right_size(), Matching::kFree);

  std::vector<std::int32_t> dist(nl);
  std::vector<std::size_t> cursor(nl);
  std::vector<std::int32_t> queue;
  std::vector<std::int32_t> stack;
  queue.reserve(nl);

  const auto layer = [&] {
    queue.clear();
    for (std::size_t u = 0; u < nl; ++u) {
      if (m.mate_left[u] == Matching::kFree) {
        dist[u] = 0;
        queue.push_back(static_cast<std::int32_t>(u));
      } else {
        dist[u] = kInf;
      }
    }
    bool reached_free = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::int32_t u = queue[head];
      for (std::size_t k = 0, n = g.slot_count(u); k < n; ++k) {
        const std::int64_t v = g.slot(u, k);
        if (v < 0) continue;
        const std::int32_t w = m.mate_right[v];
        if (w == Matching::kFree) {
          reached_free = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return reached_free;
  };

  // Iterative layered DFS from a free left vertex.
  const auto augment = [&](std::int32_t root) {
    stack.clear();
    stack.push_back(root);
    while (!stack.empty()) {
      const std::int32_t u = stack.back();
      if (cursor[u] == g.slot_count(u)) {
        dist[u] = kInf;
        stack.pop_back();
        if (!stack.empty()) ++cursor[stack.back()];
        continue;
      }
      const std::int64_t v = g.slot(u, cursor[u]);
      if (v < 0) {
        ++cursor[u];
        continue;
      }
      const std::int32_t w = m.mate_right[v];
      if (w == Matching::kFree) {
        for (const std::int32_t x : stack) {
          const auto y = static_cast<std::int32_t>(g.slot(x, cursor[x]));
          m.mate_left[x] = y;
          m.mate_right[y] = x;
        }
        return true;
      }
      if (dist[w] != kInf && dist[w] == dist[u] + 1) {
        stack.push_back(w);
      } else {
        ++cursor[u];
      }
    }
    return false;
  };

  while (layer()) {
    std::fill(cursor.begin(), cursor.end(), 0);
    for (std::size_t u = 0; u < nl; ++u) {
      if (m.mate_left[u] == Matching::kFree && augment(static_cast<std::int32_t>(u))) {
        ++m.size;
      }
    }
  }
  return m;
}

// Vertices reachable from free left vertices along alternating paths
// (non-matching edges left to right, matching edges right to left). For a
// maximum matching, (left \ reach_left) + reach_right is a minimum vertex
// cover.
struct AlternatingReach {
  std::vector<bool> left;
  std::vector<bool> right;
};

template <SlotGraph G>
AlternatingReach alternating_reach(const G& g, const Matching& m) {
  AlternatingReach r{std::vector<bool>(g.left_size()), std::vector<bool>(g.right_size())};
  std::vector<std::int32_t> queue;
  for (std::size_t u = 0; u < g.left_size(); ++u) {
    if (m.mate_left[u] == Matching::kFree) {
      r.left[u] = true;
      queue.push_back(static_cast<std::int32_t>(u));
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::int32_t u = queue[head];
    for (std::size_t k = 0, n = g.slot_count(u); k < n; ++k) {
      const std::int64_t v = g.slot(u, k);
      if (v < 0 || v == m.mate_left[u] || r.right[v]) continue;
      r.right[v] = true;
      const std::int32_t w = m.mate_right[v];
      if (w != Matching::kFree && !r.left[w]) {
        r.left[w] = true;
        queue.push_back(w);
      }
    }
  }
  return r;
}

}  // namespace fifo_routes

#endif  // FIFO_ROUTES_MATCHING_H_
