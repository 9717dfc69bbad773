#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "vpotts/graph.hpp"
#include "vpotts/polynomial.hpp"
#include "vpotts/potts.hpp"

namespace fixtures {

using namespace vpotts;

/// n/d in lowest terms; GMP leaves a two-argument mpq_class unreduced.
inline Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline WeightElement w(const std::string& label) { return WeightElement::formal(label); }

/// Vertices v1..vn with formal weights taken from `labels`.
inline WeightedGraph vertices(const std::vector<std::string>& labels) {
  WeightedGraph g;
  for (std::size_t i = 0; i < labels.size(); ++i) g.add_vertex("v" + std::to_string(i + 1), w(labels[i]));
  return g;
}

/// e1 = v1v2, e2 = v1v3, e3 = v2v3.
inline WeightedGraph k3(Gamma gamma = SymbolicGamma{}) {
  WeightedGraph g = vertices({"a", "b", "c"});
  g.add_edge("e1", "v1", "v2", gamma);
  g.add_edge("e2", "v1", "v3", gamma);
  g.add_edge("e3", "v2", "v3", gamma);
  return g;
}

/// K3 with every edge sharing the single symbol g{g}.
inline Polynomial equal_gamma(const Polynomial& p) {
  return substitute(p, [](const Variable& v) { return v.kind() == VarKind::Gamma; },
                    Polynomial(Variable::gamma("g")));
}

inline WeightedGraph single_edge() {
  WeightedGraph g = vertices({"a", "b"});
  g.add_edge("e1", "v1", "v2");
  return g;
}

inline WeightedGraph single_loop() {
  WeightedGraph g = vertices({"a"});
  g.add_edge("e1", "v1", "v1");
  return g;
}

/// v1 - v2 - v3.
inline WeightedGraph path3() {
  WeightedGraph g = vertices({"a", "b", "c"});
  g.add_edge("e1", "v1", "v2");
  g.add_edge("e2", "v2", "v3");
  return g;
}

inline WeightedGraph complete(std::size_t n) {
  WeightedGraph g;
  for (std::size_t i = 1; i <= n; ++i) g.add_vertex("v" + std::to_string(i), w("w" + std::to_string(i)));
  std::size_t k = 0;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      g.add_edge("e" + std::to_string(++k), "v" + std::to_string(i), "v" + std::to_string(j));
  return g;
}

inline Polynomial x(const std::string& labels_plus) {
  std::vector<std::string> gens;
  std::string cur;
  for (char c : labels_plus) {
    if (c == '+') {
      gens.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  gens.push_back(cur);
  return Polynomial(Variable::x(WeightElement::formal(gens)));
}

inline Polynomial g(const std::string& id) { return Polynomial(Variable::gamma(id)); }
inline Polynomial theta() { return Polynomial(Variable::theta()); }

/// Shuffles the order indices of `gr`.
inline WeightedGraph permuted_order(const WeightedGraph& gr, std::mt19937_64& rng) {
  std::vector<std::string> ids;
  for (const auto& e : gr.edges()) ids.push_back(e.id);
  std::shuffle(ids.begin(), ids.end(), rng);
  return with_edge_order(gr, ids);
}

inline std::map<std::string, Complex> uniform(const WeightedGraph& g, Complex value, bool edges) {
  std::map<std::string, Complex> out;
  if (edges)
    for (const auto& e : g.edges()) out[e.id] = value;
  else
    for (const auto& v : g.vertices()) out[v.id] = value;
  return out;
}

}  // namespace fixtures
