#include "vpotts/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "vpotts/error.hpp"

namespace vpotts {

namespace {

// Restricted growth strings scanned before giving up, independent of how
// many of them turn out to be connected.
constexpr std::size_t kPartitionScanLimit = 50'000'000;

// Depth-first walk over acyclic subsets in lexicographic order of the
// chosen edges' order indices. `visit` returns false to prune below a node.
class ForestWalker {
 public:
  explicit ForestWalker(const WeightedGraph& g) : g_(g), order_(g.edges_by_order()) {
    require_subset_capacity(g);
    for (auto p : order_)
      if (!g.edge(p).is_loop()) candidates_.push_back(p);
    comp_.resize(g.vertex_count());
    for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] = i;
  }

  std::size_t candidate_count() const { return candidates_.size(); }

  // visit(subset, size, next_candidate_index) -> descend?
  void run(const std::function<bool(EdgeSubset, std::size_t, std::size_t)>& visit) {
    EdgeSubset current;
    walk(current, 0, 0, visit);
  }

 private:
  void walk(EdgeSubset& current, std::size_t size, std::size_t next,
            const std::function<bool(EdgeSubset, std::size_t, std::size_t)>& visit) {
    if (!visit(current, size, next)) return;
    for (std::size_t j = next; j < candidates_.size(); ++j) {
      const Edge& e = g_.edge(candidates_[j]);
      const std::size_t cu = comp_[e.u];
      const std::size_t cv = comp_[e.v];
      if (cu == cv) continue;
      const std::vector<std::size_t> saved = comp_;
      for (auto& c : comp_)
        if (c == cv) c = cu;
      current.insert(candidates_[j]);
      walk(current, size + 1, j + 1, visit);
      current.erase(candidates_[j]);
      comp_ = saved;
    }
  }

  const WeightedGraph& g_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> candidates_;
  std::vector<std::size_t> comp_;
};

void check_limit(std::size_t produced, std::size_t limit, const char* what) {
  if (produced > limit) throw CapacityError(std::string("too many ") + what, limit);
}

bool block_connected(const WeightedGraph& g, const std::vector<std::size_t>& block,
                     const std::vector<std::size_t>& block_of, std::size_t id) {
  if (block.size() == 1) return true;
  std::vector<std::size_t> parent(g.vertex_count());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::size_t pieces = block.size();
  for (const auto& e : g.edges()) {
    if (block_of[e.u] != id || block_of[e.v] != id) continue;
    const std::size_t a = find(e.u);
    const std::size_t b = find(e.v);
    if (a != b) {
      parent[b] = a;
      if (--pieces == 1) return true;
    }
  }
  return pieces == 1;
}

}  // namespace

std::vector<SpanningTree> spanning_trees(const WeightedGraph& g, std::size_t limit) {
  ForestWalker walker(g);
  const std::size_t rank = g.vertex_count() - component_count(g);
  const std::size_t candidates = walker.candidate_count();
  std::vector<SpanningTree> out;
  walker.run([&](EdgeSubset s, std::size_t size, std::size_t next) {
    if (size == rank) {
      out.push_back({s});
      check_limit(out.size(), limit, "spanning trees");
      return false;
    }
    return size + (candidates - next) >= rank;
  });
  return out;
}

std::vector<SpanningForest> spanning_forests(const WeightedGraph& g, std::size_t limit) {
  ForestWalker walker(g);
  std::vector<SpanningForest> out;
  walker.run([&](EdgeSubset s, std::size_t, std::size_t) {
    out.push_back({s});
    check_limit(out.size(), limit, "spanning forests");
    return true;
  });
  return out;
}

std::vector<ConnectedPartition> connected_partitions(const WeightedGraph& g, std::size_t limit) {
  const std::size_t n = g.vertex_count();
  std::vector<ConnectedPartition> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);  // max of rgs[0..i]
  std::size_t scanned = 0;
  while (true) {
    if (++scanned > kPartitionScanLimit)
      throw CapacityError("too many set partitions to scan", kPartitionScanLimit);

    const std::size_t blocks = prefix_max[n - 1] + 1;
    ConnectedPartition p;
    p.blocks.resize(blocks);
    for (std::size_t i = 0; i < n; ++i) p.blocks[rgs[i]].push_back(i);
    bool connected = true;
    for (std::size_t b = 0; b < blocks && connected; ++b)
      connected = block_connected(g, p.blocks[b], rgs, b);
    if (connected) {
      out.push_back(std::move(p));
      check_limit(out.size(), limit, "connected partitions");
    }

    // Next restricted growth string.
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

ActivitySets classify_activities(const WeightedGraph& g, const SpanningForest& f) {
  require_subset_capacity(g);
  const std::size_t m = g.edge_count();
  if (m < 64 && (f.edges.mask() >> m) != 0)
    throw InputError("forest contains an edge position outside the graph");
  for (auto p : f.edges.positions())
    if (g.edge(p).is_loop()) throw InputError("forest contains loop '" + g.edge(p).id + "'");
  if (subgraph_stats(g, f.edges).nullity != 0) throw InputError("edge subset is not a forest");

  // Adjacency restricted to the forest.
  std::vector<std::vector<std::size_t>> adjacent(g.vertex_count());
  for (auto p : f.edges.positions()) {
    adjacent[g.edge(p).u].push_back(p);
    adjacent[g.edge(p).v].push_back(p);
  }

  ActivitySets out;
  for (std::size_t p = 0; p < m; ++p) {
    const Edge& e = g.edge(p);
    if (f.edges.contains(p)) {
      EdgeSubset rest = f.edges;
      rest.erase(p);
      const auto labels = component_labels(g, rest);
      const std::size_t a = labels.label[e.u];
      const std::size_t b = labels.label[e.v];
      bool least = true;
      for (const auto& other : g.edges()) {
        const std::size_t x = labels.label[other.u];
        const std::size_t y = labels.label[other.v];
        const bool in_cut = (x == a && y == b) || (x == b && y == a);
        if (in_cut && other.order < e.order) {
          least = false;
          break;
        }
      }
      (least ? out.internally_active : out.internally_inactive).insert(p);
      continue;
    }

    if (e.is_loop()) {
      out.externally_active.insert(p);
      continue;
    }
    // Path e.u -> e.v inside the forest, if any.
    std::vector<std::size_t> via(g.vertex_count(), SIZE_MAX);
    std::vector<bool> seen(g.vertex_count(), false);
    std::queue<std::size_t> frontier;
    frontier.push(e.u);
    seen[e.u] = true;
    while (!frontier.empty() && !seen[e.v]) {
      const std::size_t x = frontier.front();
      frontier.pop();
      for (auto q : adjacent[x]) {
        const std::size_t y = g.edge(q).other(x);
        if (seen[y]) continue;
        seen[y] = true;
        via[y] = q;
        frontier.push(y);
      }
    }
    if (!seen[e.v]) {
      out.externally_inactive.insert(p);
      continue;
    }
    bool least = true;
    for (std::size_t x = e.v; x != e.u; x = g.edge(via[x]).other(x)) {
      if (g.edge(via[x]).order < e.order) {
        least = false;
        break;
      }
    }
    (least ? out.externally_active : out.externally_inactive).insert(p);
  }
  return out;
}

ConnectedPartition forest_partition(const WeightedGraph& g, const SpanningForest& f) {
  const auto labels = component_labels(g, f.edges);
  ConnectedPartition p;
  p.blocks.resize(labels.count);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) p.blocks[labels.label[i]].push_back(i);
  return p;
}

}  // namespace vpotts
