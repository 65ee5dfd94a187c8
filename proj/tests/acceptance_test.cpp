// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exit status is non-zero if any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "henson/canonical.hpp"
#include "henson/family.hpp"
#include "henson/forbidden.hpp"
#include "henson/fraisse.hpp"
#include "henson/lemmas.hpp"
#include "henson/reducts.hpp"
#include "oracles.hpp"

using namespace henson;

namespace {

// Wall-clock limits, seconds.
constexpr double kCensusLimit = 1.0;
constexpr double kAntichainLimit = 10.0;
constexpr double kHighCycleLimit = 5.0;
constexpr double kLemmaLimitPerSet = 5.0;
constexpr double kAmalgamLimit = 30.0;
constexpr double kBuilderLimit = 60.0;
constexpr double kFlagsLimit = 1.0;  // per flag check
constexpr double kTrichotomyLimit = 60.0;
constexpr double kPipelineLimit = 600.0;
constexpr double kOracleLimit = 300.0;

constexpr std::size_t kAmalgamPairs = 1000;
constexpr std::size_t kTrichotomyScale = kMaxGraphScale;
const std::uint64_t kBuilderSeeds[] = {7, 1, 2};

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs `body`; passes when it reports ok and finishes within `limit`.
bool criterion(int number, const char* title, double limit, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = seconds_since(start);
  if (elapsed > limit) {
    o.ok = false;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("over the time limit");
  }
  std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", number,
              title, elapsed, limit, o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
  return o.ok;
}

void require(Outcome& o, bool condition, const std::string& what) {
  if (condition) return;
  if (o.ok) o.detail = what;
  o.ok = false;
}

const Blocker& blocker() {
  static const Blocker b = find_blocker(8);
  return b;
}

const ForbiddenSet& family_set() {
  static const ForbiddenSet t = build_family_set(FamilyIndex{{10}}, blocker().tournament);
  return t;
}

// The listed cycles of I_n as vertex sets, 1-based.
std::set<std::array<std::size_t, 3>> listed_cycles(std::size_t n) {
  std::set<std::array<std::size_t, 3>> out;
  for (std::size_t k = 3; k <= n - 2; ++k) out.insert({1, k, n});
  for (std::size_t i = 1; i <= n - 2; ++i) out.insert({i, i + 1, i + 2});
  return out;
}

Outcome census() {
  Outcome o;
  for (std::size_t n = 6; n <= 10; ++n) {
    const Digraph d = make_In(n).digraph();
    std::set<std::array<std::size_t, 3>> found;
    for (const ThreeCycle& c : three_cycles(d)) {
      std::array<std::size_t, 3> s = {c.a + 1, c.b + 1, c.c + 1};
      std::sort(s.begin(), s.end());
      found.insert(s);
    }
    require(o, found == listed_cycles(n), "cycle list differs at n=" + std::to_string(n));
    require(o, oracle::three_cycles(d).size() == 2 * n - 6,
            "brute-force count differs at n=" + std::to_string(n));
    require(o, three_cycles(d).size() == 2 * n - 6, "count differs at n=" + std::to_string(n));
  }
  return o;
}

Outcome antichain() {
  Outcome o;
  std::vector<Tournament> members;
  for (std::size_t n = 6; n <= 12; ++n) members.push_back(make_In(n));
  require(o, is_antichain(ForbiddenSet(members)), "is_antichain is false");
  std::size_t pairs = 0;
  for (std::size_t m = 6; m <= 12; ++m) {
    for (std::size_t n = m + 1; n <= 12; ++n) {
      ++pairs;
      require(o, !embeds(make_In(m), make_In(n).digraph()),
              "I_" + std::to_string(m) + " embeds in I_" + std::to_string(n));
    }
  }
  require(o, pairs == 21, "pair count");
  if (o.ok) o.detail = "21 pairs checked";
  return o;
}

Outcome high_cycle() {
  Outcome o;
  for (std::size_t n = 6; n <= 16; ++n) {
    for (Vertex v : high_cycle_vertices(make_In(n), 5)) {
      require(o, v == 0 || v == n - 1,
              "vertex " + std::to_string(v + 1) + " of I_" + std::to_string(n));
    }
  }
  return o;
}

Outcome lemma_table(const ForbiddenSet& t) {
  constexpr TwoType N = TwoType::N;
  constexpr TwoType E = TwoType::E;
  constexpr TwoType S = TwoType::EStar;
  Outcome o;
  const auto reports = verify_lemma_table(Lemma::NoConstants, t);
  require(o, reports.size() == 27, "report count");
  std::size_t identity = 0;
  bool minus = false;
  for (const CaseReport& r : reports) {
    identity += r.verdict == Verdict::Identity ? 1 : 0;
    minus = minus || r.verdict == Verdict::GeneratesMinus;
    require(o, reverify(r, t), "report does not reverify: " + r.context.to_string());
  }
  require(o, identity == 1, "Identity count " + std::to_string(identity));
  require(o, minus == closed_under_minus(t), "GeneratesMinus presence disagrees with closure");
  const Behavior shapes[] = {Behavior::make(E, E, S), Behavior::make(E, S, E),
                             Behavior::make(E, S, N), Behavior::make(E, N, S)};
  for (const Behavior& shape : shapes) {
    for (const Behavior& b : {shape, dual(shape)}) {
      const CaseReport& r = reports[b.index()];
      const bool certified = r.verdict == Verdict::Impossible && r.certificate &&
                             in_forb(r.certificate->witness.digraph(), t) &&
                             !in_forb(apply_context(r.context, r.certificate->witness,
                                                    r.certificate->center, r.certificate->target),
                                      t);
      require(o, certified, "no verified impossibility for " + b.to_string());
    }
  }
  return o;
}

// A random member of Forb(T) on n vertices, by rejection.
Digraph random_member(std::size_t n, const ForbiddenSet& t, std::mt19937_64& rng) {
  for (;;) {
    Digraph d = oracle::random_digraph(n, 0.9, rng);
    if (in_forb(d, t)) return d;
  }
}

Outcome amalgamation() {
  Outcome o;
  const ForbiddenSet t({make_In(6)});
  std::mt19937_64 rng(2024);
  for (std::size_t i = 0; i < kAmalgamPairs; ++i) {
    const Digraph a = random_member(4 + rng() % 6, t, rng);
    // Common part: a random subset of a, copied into b at random positions
    // among fresh vertices.
    std::vector<Vertex> common;
    for (Vertex v = 0; v < a.size(); ++v) {
      if (rng() % 2) common.push_back(v);
    }
    const std::size_t extra = 1 + rng() % 5;
    const std::size_t bn = common.size() + extra;
    Digraph b;
    std::vector<Vertex> place;
    do {
      b = random_member(bn, t, rng);
      place = oracle::random_perm(bn, rng);
      for (std::size_t x = 0; x < common.size(); ++x) {
        for (std::size_t y = x + 1; y < common.size(); ++y) {
          b.set_relation(place[x], place[y], a.relation(common[x], common[y]));
        }
      }
    } while (!in_forb(b, t));
    std::vector<Edge> glue;
    for (std::size_t x = 0; x < common.size(); ++x) glue.emplace_back(common[x], place[x]);
    const Amalgam m = free_amalgam(a, b, glue);
    require(o, m.digraph.size() == a.size() + extra, "amalgam size");
    require(o, in_forb(m.digraph, t), "amalgam " + std::to_string(i) + " leaves Forb");
  }
  if (o.ok) o.detail = std::to_string(kAmalgamPairs) + " amalgams";
  return o;
}

Outcome builder() {
  Outcome o;
  const ForbiddenSet t({Tournament::cycle3()});
  std::ostringstream summary;
  for (std::uint64_t seed : kBuilderSeeds) {
    const OrderedDigraph d = build_approximation(t, 20, 2, seed);
    const auto report = verify_extension_property(d, t, 2);
    require(o, report.missing() == 0, "unmet demands for seed " + std::to_string(seed));
    require(o, in_forb(d.digraph(), t), "builder output leaves Forb");
    const auto paths = connectivity_report(d.digraph());
    std::size_t far = 0;
    std::size_t far_not_back_edge = 0;
    for (Vertex u = 0; u < d.size(); ++u) {
      for (Vertex v = 0; v < d.size(); ++v) {
        if (u == v || paths.distance(u, v) <= 2) continue;
        ++far;
        if (!d.digraph().has_edge(v, u)) ++far_not_back_edge;
      }
    }
    summary << "seed " << seed << ": " << d.size() << " vertices, " << far
            << " ordered pairs at distance > 2 (" << far_not_back_edge
            << " of them not an edge b -> a); ";
    require(o, far == 0, "");
  }
  o.detail = summary.str();
  if (!o.ok) o.detail += "an edge b -> a admits no path a -> x -> b in a C3-free digraph";
  return o;
}

Outcome flags() {
  Outcome o;
  const ForbiddenSet c3({Tournament::cycle3()});
  const ForbiddenSet both({Tournament::cycle3(), Tournament::transitive(3)});
  require(o, closed_under_minus(c3), "{C3} not closed under minus");
  require(o, !closed_under_sw(c3), "{C3} closed under sw");
  require(o, closed_under_minus(both) && closed_under_sw(both), "{C3, L3} flags");
  for (const auto& a : {FamilyIndex{{10}}, FamilyIndex{{10, 12}}, FamilyIndex{{11, 14}}}) {
    const ForbiddenSet t = build_family_set(a, blocker().tournament);
    require(o, !closed_under_minus(t) && !closed_under_sw(t), "family set flags");
  }
  return o;
}

Outcome trichotomy() {
  Outcome o;
  const ForbiddenSet both({Tournament::cycle3(), Tournament::transitive(3)});
  const GraphStatus h = classify_underlying_graph(both, 4);
  require(o, h.kind == GraphStatusKind::HensonGraphEvidence && h.clique_bound == 3U,
          "{C3, L3} is not triangle-free evidence");
  const GraphStatus s = classify_underlying_graph(family_set(), kTrichotomyScale);
  require(o, s.kind == GraphStatusKind::NotHomogeneous, "family set not refuted");
  require(o, s.certificate && verify_homogeneity_certificate(*s.certificate, family_set()),
          "certificate does not reverify");
  if (o.ok) {
    o.detail = "refuted at scale " + std::to_string(kTrichotomyScale) + " by " +
               to_string(s.certificate->kind);
  }
  return o;
}

Outcome pipeline() {
  Outcome o;
  const Blocker& b = blocker();
  const Tournament& t = b.tournament;
  const auto ends = sources_and_sinks(t.digraph());
  require(o, !ends.sources.empty(), "no source");
  require(o, ends.sinks.empty(), "has a sink");
  require(o, high_cycle_vertices(t, 5).size() >= 3, "fewer than 3 high-cycle vertices");
  const std::size_t k = t.size();
  const ForbiddenSet family = build_family_set(FamilyIndex{{k + 2}}, t);
  require(o, is_antichain(family), "family set is not an anti-chain");
  const MaximalityReport r = verify_maximality(family, t);
  require(o, r.minus_blocked && r.sw_blocked && r.linear_orders_embed && r.extension_blocking,
          "a maximality flag is false");
  require(o, recheck_maximality(r, family), "maximality witnesses do not recheck");
  const FamilyIndex first{{k + 2}};
  const FamilyIndex second{{k + 3}};
  const DistinctionCertificate c = distinguish_family(first, second, t);
  require(o, verify_distinction(c, first, second, t), "distinction certificate invalid");
  if (o.ok) {
    o.detail = "blocker on " + std::to_string(k) + " vertices after " +
               std::to_string(b.examined) + " candidates; " +
               std::to_string(family.members().size()) + " members";
  }
  return o;
}

Outcome canonical_oracle() {
  Outcome o;
  std::size_t classes_total = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::map<CanonicalCode, std::vector<Digraph>> classes;
    for (const Digraph& d : oracle::all_digraphs(n)) {
      auto& bucket = classes[canonical_code(d)];
      if (bucket.empty()) {
        bucket.push_back(d);
      } else {
        require(o, oracle::isomorphic(bucket.front(), d), "equal codes, non-isomorphic digraphs");
      }
    }
    std::vector<const Digraph*> reps;
    for (const auto& [code, bucket] : classes) reps.push_back(&bucket.front());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        require(o, !oracle::isomorphic(*reps[i], *reps[j]), "different codes, isomorphic digraphs");
      }
    }
    classes_total += reps.size();
  }
  // Oriented graphs on 1..5 vertices: 1 + 2 + 7 + 42 + 582.
  require(o, classes_total == 634, "class count " + std::to_string(classes_total));
  if (o.ok) o.detail = std::to_string(classes_total) + " isomorphism classes";
  return o;
}

}  // namespace

int main() {
  int failed = 0;
  const auto count = [&](bool ok) { failed += ok ? 0 : 1; };

  count(criterion(1, "I_n 3-cycle census, n = 6..10", kCensusLimit, census));
  count(criterion(2, "I_6..I_12 form an anti-chain", kAntichainLimit, antichain));
  count(criterion(3, "high-cycle vertices of I_n lie in {1, n}, n = 6..16", kHighCycleLimit,
                  high_cycle));
  {
    const std::vector<std::pair<const char*, ForbiddenSet>> sets = {
        {"{C3}", ForbiddenSet({Tournament::cycle3()})},
        {"{L3}", ForbiddenSet({Tournament::transitive(3)})},
        {"{C3, L3}", ForbiddenSet({Tournament::cycle3(), Tournament::transitive(3)})},
        {"{I6}", ForbiddenSet({make_In(6)})},
    };
    bool all = true;
    for (const auto& [name, t] : sets) {
      const std::string title = std::string("lemma table without constants, T = ") + name;
      all = criterion(4, title.c_str(), kLemmaLimitPerSet, [&] { return lemma_table(t); }) && all;
    }
    count(all);
  }
  count(criterion(5, "free amalgams stay in Forb({I6})", kAmalgamLimit, amalgamation));
  count(criterion(6, "level-2 approximation of the C3-free Henson digraph", kBuilderLimit,
                  builder));
  count(criterion(7, "closure flags", kFlagsLimit * 5, flags));
  count(criterion(8, "trichotomy evidence and refutation", kTrichotomyLimit, trichotomy));
  count(criterion(9, "blocker, family set, maximality and distinction", kPipelineLimit,
                  pipeline));
  count(criterion(10, "canonical codes match brute-force isomorphism up to 5 vertices",
                  kOracleLimit, canonical_oracle));

  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
