// Copyright 2026 The fleetmatch Authors
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

#include "fleetmatch/link.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fleetmatch/blocking.hpp"
#include "fleetmatch/parallel.hpp"

namespace fleetmatch {

std::vector<DatasetLink> match_dataset_pair(std::span<const PlantRecord> a,
                                            std::span<const PlantRecord> b,
                                            const SimilarityConfig& cfg,
                                            unsigned workers) {
  if (a.empty() || b.empty()) return {};
  if (a.front().source_id == b.front().source_id) {
    throw std::invalid_argument("match_dataset_pair: both lists from one source");
  }

  const std::vector<CandidatePair> candidates = block_across(a, b);
  std::vector<double> posteriors(candidates.size());
  parallel_for(candidates.size(), workers, [&](std::size_t i) {
    posteriors[i] = record_similarity(a[candidates[i].first], b[candidates[i].second], cfg);
  });

  struct Scored {
    double posterior;
    std::uint32_t ia;
    std::uint32_t ib;
  };
  std::vector<Scored> above;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (posteriors[i] >= cfg.threshold) {
      above.push_back({posteriors[i], candidates[i].first, candidates[i].second});
    }
  }
  std::sort(above.begin(), above.end(), [&](const Scored& x, const Scored& y) {
    if (x.posterior != y.posterior) return x.posterior > y.posterior;
    Decimal cx = a[x.ia].capacity_mw + b[x.ib].capacity_mw;
    Decimal cy = a[y.ia].capacity_mw + b[y.ib].capacity_mw;
    if (cx != cy) return cx > cy;
    if (a[x.ia].name != a[y.ia].name) return a[x.ia].name < a[y.ia].name;
    if (b[x.ib].name != b[y.ib].name) return b[x.ib].name < b[y.ib].name;
    return std::pair(x.ia, x.ib) < std::pair(y.ia, y.ib);
  });

  std::vector<bool> used_a(a.size(), false);
  std::vector<bool> used_b(b.size(), false);
  std::vector<DatasetLink> links;
  for (const Scored& s : above) {
    if (used_a[s.ia] || used_b[s.ib]) continue;
    used_a[s.ia] = true;
    used_b[s.ib] = true;
    links.push_back(DatasetLink{a[s.ia].source_id, s.ia, b[s.ib].source_id, s.ib, s.posterior});
  }
  std::sort(links.begin(), links.end(), [](const DatasetLink& x, const DatasetLink& y) {
    return std::pair(x.plant_a, x.plant_b) < std::pair(y.plant_a, y.plant_b);
  });
  return links;
}

namespace {

using NodeId = std::pair<std::string, std::size_t>;  // (source_id, plant index)

struct Edge {
  std::size_t u;
  std::size_t v;
  double posterior;
};

// Nodes interned in sorted order so everything downstream is independent of
// link order.
struct Graph {
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;

  std::vector<std::size_t> components(const std::vector<bool>& kept) const {
    std::vector<std::size_t> parent(nodes.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!kept[e]) continue;
      std::size_t ru = find(edges[e].u);
      std::size_t rv = find(edges[e].v);
      if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
    }
    std::vector<std::size_t> label(nodes.size());
    for (std::size_t n = 0; n < nodes.size(); ++n) label[n] = find(n);
    return label;
  }

  bool conflict_free(const std::vector<std::size_t>& edge_ids,
                     const std::vector<bool>& kept) const {
    std::map<std::size_t, std::size_t> parent;
    auto find = [&](std::size_t x) {
      while (true) {
        auto it = parent.emplace(x, x).first;
        if (it->second == x) return x;
        x = it->second;
      }
    };
    std::set<std::size_t> members;
    for (std::size_t e : edge_ids) {
      if (!kept[e]) continue;
      std::size_t ru = find(edges[e].u);
      std::size_t rv = find(edges[e].v);
      if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
      members.insert(edges[e].u);
      members.insert(edges[e].v);
    }
    std::map<std::size_t, std::set<std::string>> sources;
    for (std::size_t n : members) {
      if (!sources[find(n)].insert(nodes[n].first).second) return false;
    }
    return true;
  }
};

// Upper limit for the exact per-component search; components this large do
// not occur in realistic corpora, but a pathological input must not hang.
constexpr std::size_t kExactSearchLimit = 20;

// Exact resolution: the conflict-free link subset with maximum posterior
// mass, enumerated deterministically (first-best wins ties).
void resolve_exact(const Graph& graph, const std::vector<std::size_t>& edge_ids,
                   std::vector<bool>& kept) {
  const std::size_t k = edge_ids.size();
  double best_mass = -1.0;
  std::uint32_t best_subset = 0;
  std::vector<bool> trial(graph.edges.size(), false);
  for (std::uint32_t subset = 0; subset < (1u << k); ++subset) {
    double mass = 0.0;
    for (std::size_t bit = 0; bit < k; ++bit) {
      trial[edge_ids[bit]] = (subset >> bit) & 1u;
      if ((subset >> bit) & 1u) mass += graph.edges[edge_ids[bit]].posterior;
    }
    if (mass <= best_mass) continue;
    if (graph.conflict_free(edge_ids, trial)) {
      best_mass = mass;
      best_subset = subset;
    }
  }
  for (std::size_t bit = 0; bit < k; ++bit) {
    kept[edge_ids[bit]] = (best_subset >> bit) & 1u;
  }
}

// Fallback for oversized components: repeatedly find a conflicting pair and
// drop the weakest link on a shortest path between the two plants.
void resolve_greedy(const Graph& graph, const std::vector<std::size_t>& edge_ids,
                    std::vector<bool>& kept) {
  std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> adjacency;
  auto rebuild = [&] {
    adjacency.clear();
    for (std::size_t e : edge_ids) {
      if (!kept[e]) continue;
      adjacency[graph.edges[e].u].emplace_back(graph.edges[e].v, e);
      adjacency[graph.edges[e].v].emplace_back(graph.edges[e].u, e);
    }
    for (auto& [node, nexts] : adjacency) std::sort(nexts.begin(), nexts.end());
  };

  while (true) {
    rebuild();

    // labels via BFS over the adjacency
    std::map<std::size_t, std::size_t> label;
    for (const auto& [start, unused] : adjacency) {
      if (label.count(start)) continue;
      std::deque<std::size_t> queue{start};
      label[start] = start;
      while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (const auto& [v, e] : adjacency[u]) {
          if (!label.count(v)) {
            label[v] = start;
            queue.push_back(v);
          }
        }
      }
    }

    // first conflicting pair in node order
    std::size_t conflict_a = SIZE_MAX, conflict_b = SIZE_MAX;
    std::map<std::pair<std::size_t, std::string>, std::size_t> first_of_source;
    for (const auto& [node, lbl] : label) {
      auto key = std::make_pair(lbl, graph.nodes[node].first);
      auto [it, inserted] = first_of_source.emplace(key, node);
      if (!inserted) {
        conflict_a = it->second;
        conflict_b = node;
        break;
      }
    }
    if (conflict_a == SIZE_MAX) return;

    // BFS shortest path conflict_a -> conflict_b
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> parent;  // node -> (prev, edge)
    std::deque<std::size_t> queue{conflict_a};
    std::set<std::size_t> seen{conflict_a};
    while (!queue.empty() && !seen.count(conflict_b)) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (const auto& [v, e] : adjacency[u]) {
        if (seen.insert(v).second) {
          parent[v] = {u, e};
          queue.push_back(v);
        }
      }
    }
    std::size_t weakest = SIZE_MAX;
    for (std::size_t cur = conflict_b; cur != conflict_a;) {
      auto [prev, e] = parent.at(cur);
      if (weakest == SIZE_MAX ||
          graph.edges[e].posterior < graph.edges[weakest].posterior ||
          (graph.edges[e].posterior == graph.edges[weakest].posterior && e < weakest)) {
        weakest = e;
      }
      cur = prev;
    }
    kept[weakest] = false;
  }
}

}  // namespace

std::vector<LinkChain> join_chains(std::span<const DatasetLink> links) {
  Graph graph;
  std::set<NodeId> all_nodes;
  for (const DatasetLink& link : links) {
    if (link.source_a == link.source_b) {
      throw std::invalid_argument("join_chains: link within one source");
    }
    all_nodes.insert({link.source_a, link.plant_a});
    all_nodes.insert({link.source_b, link.plant_b});
  }
  graph.nodes.assign(all_nodes.begin(), all_nodes.end());
  std::map<NodeId, std::size_t> node_index;
  for (std::size_t n = 0; n < graph.nodes.size(); ++n) node_index[graph.nodes[n]] = n;

  for (const DatasetLink& link : links) {
    graph.edges.push_back(Edge{node_index.at({link.source_a, link.plant_a}),
                               node_index.at({link.source_b, link.plant_b}),
                               link.posterior});
  }

  // Resolve conflicts independently per connected component.
  std::vector<bool> kept(graph.edges.size(), true);
  std::vector<std::size_t> label = graph.components(kept);
  std::map<std::size_t, std::vector<std::size_t>> edges_by_component;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    edges_by_component[label[graph.edges[e].u]].push_back(e);
  }
  for (const auto& [root, edge_ids] : edges_by_component) {
    if (edge_ids.size() <= kExactSearchLimit) {
      resolve_exact(graph, edge_ids, kept);
    } else {
      resolve_greedy(graph, edge_ids, kept);
    }
  }

  // Chains = surviving components with at least two members.
  label = graph.components(kept);
  std::map<std::size_t, LinkChain> by_label;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    if (!kept[e]) continue;
    const Edge& edge = graph.edges[e];
    LinkChain& chain = by_label[label[edge.u]];
    for (std::size_t n : {edge.u, edge.v}) {
      auto [it, inserted] = chain.members.emplace(graph.nodes[n].first, graph.nodes[n].second);
      if (!inserted && it->second != graph.nodes[n].second) {
        throw std::logic_error("join_chains: conflict survived resolution");
      }
    }
    chain.supporting_links.push_back(
        DatasetLink{graph.nodes[edge.u].first, graph.nodes[edge.u].second,
                    graph.nodes[edge.v].first, graph.nodes[edge.v].second, edge.posterior});
  }

  std::vector<LinkChain> result;
  for (auto& [lbl, chain] : by_label) {
    if (chain.members.size() >= 2) result.push_back(std::move(chain));
  }
  std::sort(result.begin(), result.end(), [](const LinkChain& x, const LinkChain& y) {
    return *x.members.begin() < *y.members.begin();
  });
  return result;
}

}  // namespace fleetmatch
