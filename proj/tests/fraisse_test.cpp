#include <gtest/gtest.h>

#include <random>

#include "henson/error.hpp"
#include "henson/family.hpp"
#include "henson/fraisse.hpp"
#include "oracles.hpp"

using namespace henson;

namespace {

ForbiddenSet c3_set() { return ForbiddenSet({Tournament::cycle3()}); }

TwoType link_type(Link l) {
  // Relation of the pair (s, w).
  switch (l) {
    case Link::none:
      return TwoType::N;
    case Link::in:
      return TwoType::E;
    case Link::out:
      return TwoType::EStar;
  }
  return TwoType::N;
}

struct Tally {
  std::size_t satisfied = 0;
  std::size_t missing = 0;
  std::size_t forbidden = 0;
};

// Every subset of size <= level, every wiring, checked directly.
Tally audit(const Digraph& d, const ForbiddenSet& t, std::size_t level) {
  Tally tally;
  const std::size_t n = d.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) s.push_back(v);
    }
    if (s.size() > level) continue;
    for (std::uint64_t w = 0; w < oracle::pow3(s.size()); ++w) {
      std::vector<Link> links;
      std::uint64_t c = w;
      for (std::size_t i = 0; i < s.size(); ++i, c /= 3) links.push_back(static_cast<Link>(c % 3));
      Digraph local = d.induced(s);
      const Vertex x = local.add_vertex();
      for (std::size_t i = 0; i < s.size(); ++i) local.set_relation(i, x, link_type(links[i]));
      if (!in_forb(local, t)) {
        ++tally.forbidden;
        continue;
      }
      bool found = false;
      for (Vertex v = 0; v < n && !found; ++v) {
        if ((mask >> v) & 1U) continue;
        bool ok = true;
        for (std::size_t i = 0; i < s.size() && ok; ++i) {
          ok = d.relation(s[i], v) == link_type(links[i]);
        }
        found = ok;
      }
      ++(found ? tally.satisfied : tally.missing);
    }
  }
  return tally;
}

}  // namespace

TEST(ExtendOnePoint, ClosingACycleIsRefused) {
  Digraph l2(2);
  l2.add_edge(0, 1);
  const ExtensionSpec spec{{0, 1}, {Link::out, Link::in}, std::nullopt};
  const auto result = extend_one_point(l2, spec, c3_set());
  ASSERT_TRUE(std::holds_alternative<Refusal>(result));
  const auto& refusal = std::get<Refusal>(result);
  EXPECT_EQ(refusal.witness.embedding.size(), 3U);
  EXPECT_TRUE(refusal.attempted.has_edge(0, 1));
  EXPECT_TRUE(refusal.attempted.has_edge(1, 2));
  EXPECT_TRUE(refusal.attempted.has_edge(2, 0));
}

TEST(ExtendOnePoint, IsolatedVertexAlwaysFits) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    Digraph d = oracle::random_digraph(6, 0.5, rng);
    const auto t = ForbiddenSet({make_In(6)});
    const ExtensionSpec spec{{0, 1, 2}, {Link::none, Link::none, Link::none}, std::nullopt};
    const auto result = extend_one_point(d, spec, t);
    ASSERT_TRUE(std::holds_alternative<Digraph>(result));
    EXPECT_EQ(std::get<Digraph>(result).size(), 7U);
  }
}

TEST(ExtendOnePoint, IncrementalCheckMatchesFullRecheck) {
  std::mt19937_64 rng(2);
  const auto t = c3_set();
  for (int i = 0; i < 200; ++i) {
    // A random C3-free digraph: an acyclic orientation of a random graph.
    Digraph d = oracle::random_digraph(10, 0.4, rng);
    for (const auto& [u, v] : d.edges()) {
      if (u > v) d.set_relation(v, u, TwoType::E);
    }
    ASSERT_TRUE(in_forb(d, t));
    ExtensionSpec spec;
    for (Vertex v = 0; v < d.size(); ++v) {
      if (rng() % 2) continue;
      spec.targets.push_back(v);
      spec.links.push_back(static_cast<Link>(rng() % 3));
    }
    const auto result = extend_one_point(d, spec, t);
    if (std::holds_alternative<Digraph>(result)) {
      EXPECT_TRUE(in_forb(std::get<Digraph>(result), t));
    } else {
      EXPECT_FALSE(in_forb(std::get<Refusal>(result).attempted, t));
    }
  }
}

TEST(ExtendOnePoint, OrderSlotShiftsLaterVertices) {
  Digraph d(2);
  d.add_edge(0, 1);
  const ExtensionSpec spec{{0}, {Link::in}, 1};
  const auto result = extend_one_point(d, spec, c3_set());
  ASSERT_TRUE(std::holds_alternative<Digraph>(result));
  const Digraph& e = std::get<Digraph>(result);
  EXPECT_TRUE(e.has_edge(0, 1));  // old 0 -> new vertex at slot 1
  EXPECT_TRUE(e.has_edge(0, 2));  // old edge 0 -> 1, shifted
}

TEST(ExtendOnePoint, MalformedSpecThrows) {
  const Digraph d(3);
  EXPECT_THROW(extend_one_point(d, {{0, 1}, {Link::in}, std::nullopt}, c3_set()), InvalidInput);
  EXPECT_THROW(extend_one_point(d, {{0, 0}, {Link::in, Link::in}, std::nullopt}, c3_set()),
               InvalidInput);
  EXPECT_THROW(extend_one_point(d, {{5}, {Link::in}, std::nullopt}, c3_set()), InvalidInput);
}

TEST(FreeAmalgam, TwoEdgesOverTheirTail) {
  Digraph a(2);
  a.add_edge(0, 1);
  Digraph b(2);
  b.add_edge(0, 1);
  const Edge glue[] = {{0, 0}};
  const Amalgam m = free_amalgam(a, b, glue);
  EXPECT_EQ(m.digraph.size(), 3U);
  EXPECT_EQ(m.digraph.edge_count(), 2U);
  EXPECT_TRUE(m.digraph.has_edge(0, 1));
  EXPECT_TRUE(m.digraph.has_edge(0, m.from_b[1]));
  EXPECT_FALSE(m.digraph.adjacent(1, m.from_b[1]));
}

TEST(FreeAmalgam, RejectsInconsistentGlue) {
  Digraph a(2);
  a.add_edge(0, 1);
  Digraph b(2);
  b.add_edge(1, 0);
  const Edge glue[] = {{0, 0}, {1, 1}};
  EXPECT_THROW(free_amalgam(a, b, glue), InvalidInput);
  const Edge twice[] = {{0, 0}, {0, 1}};
  EXPECT_THROW(free_amalgam(a, Digraph(2), twice), InvalidInput);
}

TEST(FreeAmalgam, CycleWithOneConstant) {
  const Digraph c3 = Tournament::cycle3().digraph();
  Digraph c(2);
  c.add_edge(0, 1);  // a0 -> constant
  const Edge glue[] = {{0, 0}};
  const Amalgam m = free_amalgam(c3, c, glue);
  EXPECT_EQ(m.digraph.size(), 4U);
  EXPECT_TRUE(m.digraph.has_edge(0, m.from_b[1]));
  EXPECT_FALSE(m.digraph.adjacent(1, m.from_b[1]));
  EXPECT_FALSE(m.digraph.adjacent(2, m.from_b[1]));
  EXPECT_TRUE(in_forb(m.digraph, ForbiddenSet({make_In(6)})));
}

TEST(VerifyExtension, SmallCases) {
  const auto t = c3_set();
  const OrderedDigraph one(Digraph(1));
  const auto r0 = verify_extension_property(one, t, 0);
  EXPECT_EQ(r0.satisfied, 1U);
  EXPECT_EQ(r0.missing(), 0U);
  const auto r1 = verify_extension_property(one, t, 1);
  EXPECT_EQ(r1.missing(), 3U);
}

TEST(VerifyExtension, AgreesWithDirectAudit) {
  std::mt19937_64 rng(4);
  const std::vector<ForbiddenSet> sets = {c3_set(),
                                          ForbiddenSet({Tournament::cycle3(), Tournament::transitive(3)})};
  for (int i = 0; i < 30; ++i) {
    const ForbiddenSet& t = sets[i % 2];
    Digraph d = oracle::random_digraph(3 + i % 5, 0.4, rng);
    if (!in_forb(d, t)) continue;
    for (std::size_t level = 0; level <= 2; ++level) {
      const auto report = verify_extension_property(OrderedDigraph(d), t, level);
      const Tally tally = audit(d, t, level);
      EXPECT_EQ(report.satisfied, tally.satisfied);
      EXPECT_EQ(report.missing(), tally.missing);
      EXPECT_EQ(report.forbidden(), tally.forbidden);
      for (const auto& u : report.unmet) {
        if (u.status != DemandStatus::forbidden) continue;
        ASSERT_TRUE(u.local && u.witness);
        EXPECT_FALSE(in_forb(*u.local, t));
      }
    }
  }
}

TEST(Build, SingleVertex) {
  const auto d = build_approximation(c3_set(), 1, 0, 5);
  EXPECT_EQ(d.size(), 1U);
}

TEST(Build, LevelTwoForCycleFreeClass) {
  const auto t = c3_set();
  for (std::uint64_t seed : {7U, 1U, 2U}) {
    const auto d = build_approximation(t, 20, 2, seed);
    EXPECT_GE(d.size(), 20U);
    EXPECT_TRUE(in_forb(d.digraph(), t));
    EXPECT_EQ(verify_extension_property(d, t, 2).missing(), 0U);
    EXPECT_TRUE(in_forb(reverse(d.digraph()), t));
  }
}

TEST(Build, OtherClasses) {
  const ForbiddenSet i6({make_In(6)});
  const auto d = build_approximation(i6, 10, 2, 3);
  EXPECT_TRUE(in_forb(d.digraph(), i6));
  EXPECT_EQ(verify_extension_property(d, i6, 2).missing(), 0U);

  // With every triangle constrained the level-2 search does not close up
  // within a small budget; level 1 does.
  for (const ForbiddenSet& t : {ForbiddenSet({Tournament::cycle3(), Tournament::transitive(3)}),
                                ForbiddenSet({Tournament::transitive(3)})}) {
    const auto level1 = build_approximation(t, 10, 1, 3);
    EXPECT_TRUE(in_forb(level1.digraph(), t));
    EXPECT_EQ(verify_extension_property(level1, t, 1).missing(), 0U);
    BuildOptions options;
    options.target_size = 10;
    options.level = 2;
    options.seed = 3;
    options.vertex_budget = 40;
    EXPECT_THROW(build_approximation(t, options), BudgetExceeded);
  }
}

TEST(Build, Deterministic) {
  const auto t = c3_set();
  EXPECT_EQ(build_approximation(t, 20, 2, 9).digraph(), build_approximation(t, 20, 2, 9).digraph());
  EXPECT_EQ(build_approximation(t, 15, 1, 4).digraph(), build_approximation(t, 15, 1, 4).digraph());
}

TEST(Build, BudgetIsEnforced) {
  BuildOptions options;
  options.target_size = 5;
  options.level = 2;
  options.vertex_budget = 6;
  EXPECT_THROW(build_approximation(c3_set(), options), BudgetExceeded);
}

TEST(Connectivity, Examples) {
  const auto l3 = connectivity_report(Tournament::transitive(3).digraph());
  EXPECT_EQ(l3.distance(0, 2), 1U);
  EXPECT_EQ(l3.distance(2, 0), ConnectivityReport::kUnreachable);
  const auto two = connectivity_report(Digraph(2));
  EXPECT_EQ(two.distance(0, 1), ConnectivityReport::kUnreachable);
  EXPECT_EQ(two.diameter(), ConnectivityReport::kUnreachable);
}

TEST(Connectivity, LevelTwoApproximation) {
  // Non-adjacent pairs meet in a midpoint; an edge b -> a cannot be
  // closed by a -> x -> b without a 3-cycle, so the bound for those pairs
  // is 3.
  const auto d = build_approximation(c3_set(), 20, 2, 7).digraph();
  const auto report = connectivity_report(d);
  for (Vertex a = 0; a < d.size(); ++a) {
    for (Vertex b = 0; b < d.size(); ++b) {
      if (a == b) continue;
      if (!d.adjacent(a, b)) EXPECT_LE(report.distance(a, b), 2U);
      EXPECT_LE(report.distance(a, b), 3U);
    }
  }
}
