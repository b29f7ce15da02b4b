#pragma once

// Small graphs and independent brute-force references shared by the tests.
// Nothing in here calls the shortest-path, systole or rank code under test.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgt/generators.hpp"
#include "sgt/graph.hpp"
#include "sgt/homology.hpp"
#include "sgt/walk.hpp"

namespace sgt::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline MetricGraph make_graph(std::size_t vertices, const std::vector<std::tuple<VertexId, VertexId, Rational>>& list) {
  std::vector<Edge> edges;
  for (const auto& [u, v, len] : list) edges.push_back(Edge{static_cast<EdgeId>(edges.size()), u, v, len});
  return MetricGraph(vertices, std::move(edges));
}

inline MetricGraph figure_eight(Rational a = 1, Rational b = 1) {
  return make_graph(1, {{0, 0, a}, {0, 0, b}});
}

inline MetricGraph k4(Rational len = 1) {
  return make_graph(4, {{0, 1, len}, {0, 2, len}, {0, 3, len}, {1, 2, len}, {1, 3, len}, {2, 3, len}});
}

/// Two vertices joined by parallel edges of the given lengths.
inline MetricGraph theta(std::vector<Rational> lengths) {
  std::vector<std::tuple<VertexId, VertexId, Rational>> list;
  for (auto& l : lengths) list.emplace_back(0, 1, l);
  return make_graph(2, list);
}

/// Unit triangles {0,1,2} and {4,5,6} joined by the path 0 -2- 3 -3- 4.
inline MetricGraph two_triangles() {
  return make_graph(7, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {0, 3, 2}, {3, 4, 3}, {4, 5, 1}, {5, 6, 1}, {6, 4, 1}});
}

/// All-pairs distances by enumerating every simple path (exponential).
inline std::vector<std::vector<std::optional<Rational>>> all_pairs_by_enumeration(const MetricGraph& g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<std::optional<Rational>>> d(n, std::vector<std::optional<Rational>>(n));
  std::vector<char> on_path(n, 0);
  for (VertexId s = 0; s < n; ++s) {
    std::function<void(VertexId, const Rational&)> go = [&](VertexId x, const Rational& len) {
      if (!d[s][x] || len < *d[s][x]) d[s][x] = len;
      on_path[x] = 1;
      for (const auto& e : g.edges()) {
        VertexId y;
        if (e.u == x) {
          y = e.v;
        } else if (e.v == x) {
          y = e.u;
        } else {
          continue;
        }
        if (!on_path[y]) go(y, len + e.length);
      }
      on_path[x] = 0;
    };
    go(s, Rational(0));
  }
  return d;
}

/// Rank over Q by plain rational elimination, pivoting on the columns in
/// the given order.
inline std::size_t rank_with_column_order(const std::vector<CycleVector>& vectors, const std::vector<std::size_t>& order) {
  std::vector<std::vector<Rational>> m;
  for (const auto& v : vectors) {
    std::vector<Rational> row;
    for (auto c : v.coefficients()) row.emplace_back(static_cast<long>(c));
    m.push_back(std::move(row));
  }
  std::size_t r = 0;
  for (auto col : order) {
    std::size_t p = r;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][col] == 0) continue;
      const Rational f = m[i][col] / m[r][col];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank_reversed_columns(const std::vector<CycleVector>& vectors) {
  if (vectors.empty()) return 0;
  std::vector<std::size_t> order(vectors.front().size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
  return rank_with_column_order(vectors, order);
}

/// Reduced words over generators 1..k and inverses -1..-k of length <= r.
inline std::size_t count_reduced_words(int k, int r) {
  std::set<std::vector<int>> words{{}};
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 1; len <= r; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier) {
      for (int g = -k; g <= k; ++g) {
        if (g == 0 || (!w.empty() && w.back() == -g)) continue;
        auto x = w;
        x.push_back(g);
        next.push_back(x);
        words.insert(std::move(x));
      }
    }
    frontier = std::move(next);
  }
  return words.size();
}

/// Random walk of `steps` moves from `base`, closed up along a BFS tree.
inline BasedLoop random_closed_walk(const MetricGraph& g, VertexId base, Rng& rng, std::size_t steps) {
  std::vector<Step> out;
  VertexId at = base;
  for (std::size_t i = 0; i < steps; ++i) {
    auto inc = g.incidences(at);
    if (inc.empty()) break;
    const auto& pick = inc[rng.uniform(0, inc.size() - 1)];
    out.push_back(Step{pick.edge, pick.forward});
    at = pick.other;
  }
  std::vector<std::optional<Step>> parent(g.vertex_count());
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> queue{base};
  seen[base] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (const auto& inc : g.incidences(queue[h])) {
      if (!seen[inc.other]) {
        seen[inc.other] = 1;
        parent[inc.other] = Step{inc.edge, inc.forward};
        queue.push_back(inc.other);
      }
    }
  }
  while (at != base) {
    const Step s = *parent[at];
    out.push_back(reversed(s));
    at = tail(g, s);
  }
  return make_loop(g, base, std::move(out));
}

}  // namespace sgt::testing
