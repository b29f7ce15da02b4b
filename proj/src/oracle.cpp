#include "sgt/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <string>

namespace sgt {
namespace {

using Chain = std::vector<Rational>;

/// Row-reduced echelon basis over Q. Reduction is linear, so images of unit
/// vectors can be added instead of reducing every chain from scratch.
class RationalSpan {
 public:
  explicit RationalSpan(std::size_t dim) : dim_(dim) {}

  Chain reduce(Chain v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational f = v[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (rows_[i][j] != 0) v[j] -= f * rows_[i][j];
      }
    }
    return v;
  }

  bool add(Chain v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;
    const Rational lead = v[p];
    for (auto& x : v) x /= lead;
    for (auto& row : rows_) {
      const Rational f = row[p];
      if (f == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) row[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<Chain> rows_;
  std::vector<std::size_t> pivots_;
};

bool is_zero(const Chain& c) {
  for (const auto& x : c) {
    if (x != 0) return false;
  }
  return true;
}

/// Bellman-Ford distances to `target`; kept separate from the library's
/// label-setting searches so the oracle does not share their code.
std::vector<std::optional<Rational>> distances_to_vertex(const MetricGraph& g, VertexId target) {
  std::vector<std::optional<Rational>> d(g.vertex_count());
  d[target] = Rational(0);
  for (std::size_t round = 0; round < g.vertex_count(); ++round) {
    bool changed = false;
    for (const auto& e : g.edges()) {
      auto relax = [&](VertexId from, VertexId to) {
        if (!d[from]) return;
        Rational c = *d[from] + e.length;
        if (!d[to] || c < *d[to]) {
          d[to] = std::move(c);
          changed = true;
        }
      };
      relax(e.u, e.v);
      relax(e.v, e.u);
    }
    if (!changed) break;
  }
  return d;
}

struct Record {
  VertexId vertex;
  Rational length;
  std::size_t parent;
  Step step;
  Chain chain;
  bool stale = false;
};

constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

BasedLoop unwind(const MetricGraph& g, VertexId base, const std::vector<Record>& records, std::size_t at) {
  std::vector<Step> steps;
  for (std::size_t i = at; records[i].parent != kNoParent; i = records[i].parent) steps.push_back(records[i].step);
  std::reverse(steps.begin(), steps.end());
  return make_loop(g, base, std::move(steps));
}

}  // namespace

std::uint64_t default_expansion_cap() {
  if (const char* env = std::getenv("SGT_ORACLE_CAP"); env && *env) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && value > 0) return value;
  }
  return kDefaultExpansionCap;
}

Rational brute_systole(const MetricGraph& g, std::size_t max_edges) {
  if (g.edge_count() > max_edges) {
    throw OracleLimitError("brute-force systole refuses graphs with more than " + std::to_string(max_edges) +
                           " edges (got " + std::to_string(g.edge_count()) + ")");
  }
  std::optional<Rational> best;
  auto offer = [&](const Rational& len) {
    if (!best || len < *best) best = len;
  };
  for (const auto& e : g.edges()) {
    if (e.is_loop()) offer(e.length);
  }

  std::vector<char> used(g.edge_count(), 0);
  std::vector<char> visited(g.vertex_count(), 0);
  VertexId start = 0;
  std::function<void(VertexId, const Rational&, std::size_t)> extend = [&](VertexId x, const Rational& length,
                                                                           std::size_t depth) {
    for (const auto& inc : g.incidences(x)) {
      const auto& e = g.edge(inc.edge);
      if (e.is_loop() || used[e.id]) continue;
      Rational next = length + e.length;
      if (inc.other == start) {
        if (depth >= 1) offer(next);
        continue;
      }
      if (inc.other < start || visited[inc.other]) continue;
      used[e.id] = 1;
      visited[inc.other] = 1;
      extend(inc.other, next, depth + 1);
      visited[inc.other] = 0;
      used[e.id] = 0;
    }
  };
  for (start = 0; start < g.vertex_count(); ++start) {
    visited[start] = 1;
    extend(start, Rational(0), 0);
    visited[start] = 0;
  }
  if (!best) throw GraphError("graph has no cycle (first Betti number 0)");
  return *best;
}

BudgetRank max_rank_under_budget(const MetricGraph& g, VertexId base, const Rational& budget, std::uint64_t cap) {
  if (base >= g.vertex_count()) throw GraphError("unknown base vertex " + std::to_string(base));
  if (sgn(budget) <= 0) throw std::invalid_argument("budget must be positive");

  const std::size_t dim = g.edge_count();
  const auto home = distances_to_vertex(g, base);
  const std::size_t ceiling = betti(g);
  RationalSpan span(dim);
  BudgetRank out;

  while (span.rank() < ceiling) {
    std::vector<Chain> unit_image(dim);
    for (std::size_t e = 0; e < dim; ++e) {
      Chain u(dim, Rational(0));
      u[e] = 1;
      unit_image[e] = span.reduce(std::move(u));
    }

    std::vector<Record> records;
    std::map<std::pair<VertexId, Chain>, std::size_t> best;
    using Entry = std::pair<Rational, std::size_t>;
    auto later = [](const Entry& a, const Entry& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second > b.second;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(later)> queue(later);

    records.push_back({base, Rational(0), kNoParent, {}, Chain(dim, Rational(0))});
    best.emplace(std::make_pair(base, records.back().chain), 0);
    queue.emplace(Rational(0), 0);

    std::optional<std::size_t> found;
    while (!queue.empty()) {
      const std::size_t at = queue.top().second;
      queue.pop();
      if (records[at].stale) continue;
      if (records[at].vertex == base && records[at].parent != kNoParent && !is_zero(records[at].chain)) {
        found = at;
        break;
      }
      if (++out.expansions > cap) {
        throw OracleLimitError("budgeted rank search exceeded the expansion cap of " + std::to_string(cap));
      }
      const VertexId x = records[at].vertex;
      for (const auto& inc : g.incidences(x)) {
        const auto& e = g.edge(inc.edge);
        Rational length = records[at].length + e.length;
        const VertexId y = inc.other;
        if (!home[y] || length + *home[y] > budget) continue;
        Chain chain = records[at].chain;
        const auto& image = unit_image[e.id];
        for (std::size_t j = 0; j < dim; ++j) {
          if (image[j] == 0) continue;
          if (inc.forward) {
            chain[j] += image[j];
          } else {
            chain[j] -= image[j];
          }
        }
        auto key = std::make_pair(y, chain);
        auto it = best.find(key);
        if (it != best.end() && records[it->second].length <= length) continue;
        if (it != best.end()) records[it->second].stale = true;
        records.push_back({y, length, at, Step{e.id, inc.forward}, std::move(chain)});
        const std::size_t idx = records.size() - 1;
        best[std::move(key)] = idx;
        queue.emplace(std::move(length), idx);
      }
    }
    if (!found) break;

    auto loop = unwind(g, base, records, *found);
    Chain vec(dim, Rational(0));
    for (auto s : loop.steps) vec[s.edge] += s.forward ? 1 : -1;
    if (!span.add(std::move(vec))) throw std::logic_error("oracle: closed walk did not enlarge the span");
    out.witness.push_back(std::move(loop));
  }
  out.rank = span.rank();
  return out;
}

BestBase best_base_rank(const MetricGraph& g, const Rational& budget, std::uint64_t cap) {
  BestBase out;
  bool first = true;
  const std::size_t ceiling = betti(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto r = max_rank_under_budget(g, v, budget, cap);
    if (first || r.rank > out.rank) {
      out = BestBase{r.rank, v, std::move(r.witness)};
      first = false;
    }
    if (out.rank == ceiling) break;
  }
  return out;
}

}  // namespace sgt
