#include "henson/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "henson/canonical.hpp"
#include "henson/error.hpp"

namespace henson {
namespace {

constexpr std::size_t kMaxEnumerationSize = 9;

Digraph with_new_vertex(const Digraph& d, std::uint64_t out_mask) {
  Digraph e = d;
  const Vertex v = e.add_vertex();
  for (Vertex u = 0; u < d.size(); ++u) {
    if ((out_mask >> u) & 1U) {
      e.add_edge(v, u);
    } else {
      e.add_edge(u, v);
    }
  }
  return e;
}

}  // namespace

std::vector<Tournament> tournaments_up_to_iso(std::size_t n) {
  if (n > kMaxEnumerationSize) {
    throw BudgetExceeded("tournament enumeration capped at " +
                         std::to_string(kMaxEnumerationSize) + " vertices");
  }
  std::map<CanonicalCode, Tournament> level;
  level.emplace(canonical_code(Digraph(0)), Tournament(Digraph(0)));
  for (std::size_t m = 0; m < n; ++m) {
    std::map<CanonicalCode, Tournament> next;
    for (const auto& [code, t] : level) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Digraph e = with_new_vertex(t.digraph(), mask);
        CanonicalCode c = canonical_code(e);
        if (!next.contains(c)) next.emplace(std::move(c), Tournament(std::move(e)));
      }
    }
    level = std::move(next);
  }
  std::vector<Tournament> result;
  result.reserve(level.size());
  for (auto& [code, t] : level) result.push_back(std::move(t));
  return result;
}

std::vector<Graph> graphs_up_to_iso(std::size_t n) {
  if (n > kMaxEnumerationSize) {
    throw BudgetExceeded("graph enumeration capped at " +
                         std::to_string(kMaxEnumerationSize) + " vertices");
  }
  std::map<CanonicalCode, Graph> level;
  level.emplace(canonical_code(Graph(0)), Graph(0));
  for (std::size_t m = 0; m < n; ++m) {
    std::map<CanonicalCode, Graph> next;
    for (const auto& [code, g] : level) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Graph e(m + 1);
        for (const auto& [u, v] : g.edges()) e.add_edge(u, v);
        for (Vertex u = 0; u < m; ++u) {
          if ((mask >> u) & 1U) e.add_edge(u, m);
        }
        CanonicalCode c = canonical_code(e);
        if (!next.contains(c)) next.emplace(std::move(c), std::move(e));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> result;
  result.reserve(level.size());
  for (auto& [code, g] : level) result.push_back(std::move(g));
  return result;
}

std::vector<Tournament> one_point_extensions(const Tournament& t) {
  const std::size_t m = t.size();
  if (m >= 63) throw BudgetExceeded("tournament too large to extend");
  std::map<CanonicalCode, Tournament> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Digraph e = with_new_vertex(t.digraph(), mask);
    CanonicalCode c = canonical_code(e);
    if (!found.contains(c)) found.emplace(std::move(c), Tournament(std::move(e)));
  }
  std::vector<Tournament> result;
  result.reserve(found.size());
  for (auto& [code, e] : found) result.push_back(std::move(e));
  return result;
}

}  // namespace henson
