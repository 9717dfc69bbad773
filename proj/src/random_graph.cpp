#include "vpotts/random_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace vpotts {

WeightedGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& options) {
  std::uniform_int_distribution<std::size_t> count(options.min_vertices, options.max_vertices);
  std::bernoulli_distribution edge(options.edge_probability);
  std::bernoulli_distribution loop(options.loop_probability);
  std::bernoulli_distribution parallel(options.parallel_probability);
  const std::size_t n = count(rng);

  std::vector<std::pair<std::size_t, std::size_t>> tree;
  std::vector<std::pair<std::size_t, std::size_t>> extra;
  if (options.connected)
    for (std::size_t i = 1; i < n; ++i)
      tree.emplace_back(std::uniform_int_distribution<std::size_t>(0, i - 1)(rng), i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) extra.emplace_back(i, j);
  std::vector<std::pair<std::size_t, std::size_t>> simple = tree;
  simple.insert(simple.end(), extra.begin(), extra.end());
  for (std::size_t i = 0; i < n; ++i)
    if (loop(rng)) extra.emplace_back(i, i);
  for (const auto& e : simple)
    if (parallel(rng)) extra.push_back(e);

  std::shuffle(extra.begin(), extra.end(), rng);
  const std::size_t room = options.max_edges > tree.size() ? options.max_edges - tree.size() : 0;
  if (extra.size() > room) extra.resize(room);
  std::vector<std::pair<std::size_t, std::size_t>> edges = tree;
  edges.insert(edges.end(), extra.begin(), extra.end());
  std::shuffle(edges.begin(), edges.end(), rng);

  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);

  WeightedGraph g;
  for (std::size_t i = 0; i < n; ++i)
    g.add_vertex("v" + std::to_string(i), WeightElement::formal("w" + std::to_string(i)));
  for (std::size_t k = 0; k < edges.size(); ++k)
    g.add_edge("e" + std::to_string(k), "v" + std::to_string(edges[k].first),
               "v" + std::to_string(edges[k].second), SymbolicGamma{}, order[k]);
  return g;
}

PottsParams random_potts_params(std::mt19937_64& rng, WeightedGraph& g) {
  PottsParams p;
  p.q = std::uniform_int_distribution<unsigned>(2, 4)(rng);
  p.beta = std::uniform_real_distribution<double>(0.1, 2.0)(rng);
  std::uniform_real_distribution<double> coupling(-2.0, 2.0);
  std::uniform_real_distribution<double> field(-1.0, 1.0);
  for (const auto& e : g.edges()) p.coupling[e.id] = coupling(rng);
  std::vector<WeightElement> weights;
  for (const auto& v : g.vertices()) {
    std::vector<Complex> m(p.q);
    for (auto& c : m) c = field(rng);
    p.field[v.id] = m;
    weights.push_back(WeightElement::field(m));
  }
  g = with_weights(g, weights);
  return p;
}

}  // namespace vpotts
