#include "henson/fraisse.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <random>
#include <string>

#include "henson/error.hpp"

namespace henson {

const char* to_string(Link l) {
  switch (l) {
    case Link::none:
      return "none";
    case Link::in:
      return "in";
    case Link::out:
      return "out";
  }
  return "?";
}

namespace {

void wire(Digraph& d, Vertex target, Vertex fresh, Link link) {
  switch (link) {
    case Link::none:
      d.set_relation(target, fresh, TwoType::N);
      break;
    case Link::in:
      d.set_relation(target, fresh, TwoType::E);
      break;
    case Link::out:
      d.set_relation(target, fresh, TwoType::EStar);
      break;
  }
}

void validate(const Digraph& d, const ExtensionSpec& spec) {
  if (spec.targets.size() != spec.links.size()) {
    throw InvalidInput("extension spec: targets and links differ in length");
  }
  std::vector<bool> seen(d.size(), false);
  for (Vertex v : spec.targets) {
    if (v >= d.size()) {
      throw InvalidInput("extension target " + std::to_string(v) +
                         " out of range");
    }
    if (seen[v]) throw InvalidInput("extension target repeated");
    seen[v] = true;
  }
  if (spec.order_slot && *spec.order_slot > d.size()) {
    throw InvalidInput("order slot beyond the end of the order");
  }
}

// Visits every subset of {0..n-1} of size `k` in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<Vertex> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    fn(std::as_const(s));
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

// All link vectors of length k, lexicographic in (none, in, out).
std::vector<std::vector<Link>> all_links(std::size_t k) {
  std::vector<std::vector<Link>> result{{}};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::vector<Link>> next;
    for (const auto& prefix : result) {
      for (Link l : {Link::none, Link::in, Link::out}) {
        auto v = prefix;
        v.push_back(l);
        next.push_back(std::move(v));
      }
    }
    result = std::move(next);
  }
  return result;
}

struct LocalCheck {
  Digraph local;
  std::optional<ForbiddenWitness> witness;
};

LocalCheck check_locally(const Digraph& d, const std::vector<Vertex>& targets,
                         const std::vector<Link>& links,
                         const ForbiddenSet& t) {
  Digraph local = d.induced(targets);
  const Vertex fresh = local.add_vertex();
  for (std::size_t i = 0; i < targets.size(); ++i) wire(local, i, fresh, links[i]);
  auto witness = find_forbidden_through(local, t, fresh);
  return {std::move(local), std::move(witness)};
}

// Realizability of a demand depends only on the sub-digraph induced on its
// targets and on the links, so results are memoised on that pattern.
class RealizabilityCache {
 public:
  explicit RealizabilityCache(const ForbiddenSet& t) : t_(t) {}

  bool realizable(const Digraph& d, const std::vector<Vertex>& targets,
                  const std::vector<Link>& links) {
    std::string key;
    key.reserve(targets.size() * targets.size() + links.size());
    for (Vertex a : targets) {
      for (Vertex b : targets) {
        key.push_back(static_cast<char>(a == b ? 3 : static_cast<int>(d.relation(a, b))));
      }
    }
    for (Link l : links) key.push_back(static_cast<char>(10 + static_cast<int>(l)));
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const bool ok = !check_locally(d, targets, links, t_).witness.has_value();
    memo_.emplace(std::move(key), ok);
    return ok;
  }

 private:
  const ForbiddenSet& t_;
  std::map<std::string, bool> memo_;
};

std::vector<Demand> missing_demands(const Digraph& d, std::size_t level,
                                    RealizabilityCache& cache) {
  std::vector<Demand> result;
  for (std::size_t k = 0; k <= level; ++k) {
    const auto links = all_links(k);
    for_each_subset(d.size(), k, [&](const std::vector<Vertex>& s) {
      for (const auto& l : links) {
        Demand demand{s, l};
        if (demand_realized(d, demand)) continue;
        if (!cache.realizable(d, s, l)) continue;
        result.push_back(std::move(demand));
      }
    });
  }
  return result;
}

}  // namespace

ExtensionResult extend_one_point(const Digraph& d, const ExtensionSpec& spec,
                                 const ForbiddenSet& t) {
  validate(d, spec);
  Digraph e = d;
  const Vertex fresh = e.add_vertex();
  for (std::size_t i = 0; i < spec.targets.size(); ++i) {
    wire(e, spec.targets[i], fresh, spec.links[i]);
  }
  if (auto witness = find_forbidden_through(e, t, fresh)) {
    return Refusal{std::move(e), std::move(*witness)};
  }
  if (spec.order_slot && *spec.order_slot != fresh) {
    const std::size_t slot = *spec.order_slot;
    std::vector<Vertex> perm(e.size());
    for (Vertex v = 0; v < fresh; ++v) perm[v] = v < slot ? v : v + 1;
    perm[fresh] = slot;
    return e.relabeled(perm);
  }
  return e;
}

Amalgam free_amalgam(const Digraph& a, const Digraph& b,
                     std::span<const Edge> glue) {
  std::vector<std::optional<Vertex>> b_to_a(b.size());
  std::vector<bool> a_used(a.size(), false);
  for (const auto& [va, vb] : glue) {
    if (va >= a.size() || vb >= b.size()) {
      throw InvalidInput("glue vertex out of range");
    }
    if (a_used[va] || b_to_a[vb]) throw InvalidInput("glue is not injective");
    a_used[va] = true;
    b_to_a[vb] = va;
  }
  for (const auto& [xa, xb] : glue) {
    for (const auto& [ya, yb] : glue) {
      if (xa != ya && a.relation(xa, ya) != b.relation(xb, yb)) {
        throw InvalidInput("glue is not an isomorphism of the common part");
      }
    }
  }
  Amalgam result{a, std::vector<Vertex>(b.size())};
  for (Vertex v = 0; v < b.size(); ++v) {
    result.from_b[v] = b_to_a[v] ? *b_to_a[v] : result.digraph.add_vertex();
  }
  for (const auto& [u, v] : b.edges()) {
    const Vertex x = result.from_b[u];
    const Vertex y = result.from_b[v];
    if (!result.digraph.has_edge(x, y)) result.digraph.add_edge(x, y);
  }
  return result;
}

bool demand_realized(const Digraph& d, const Demand& demand) {
  const std::size_t words = d.word_count();
  std::vector<std::uint64_t> cand(words, 0);
  for (Vertex v = 0; v < d.size(); ++v) cand[v / 64] |= std::uint64_t{1} << (v % 64);
  for (std::size_t i = 0; i < demand.targets.size(); ++i) {
    const Vertex s = demand.targets[i];
    auto out = d.out_row(s);
    auto in = d.in_row(s);
    for (std::size_t w = 0; w < words; ++w) {
      switch (demand.links[i]) {
        case Link::none:
          cand[w] &= ~(out[w] | in[w]);
          break;
        case Link::in:
          cand[w] &= out[w];
          break;
        case Link::out:
          cand[w] &= in[w];
          break;
      }
    }
  }
  for (Vertex s : demand.targets) cand[s / 64] &= ~(std::uint64_t{1} << (s % 64));
  return std::any_of(cand.begin(), cand.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t ExtensionReport::missing() const {
  return static_cast<std::size_t>(std::count_if(
      unmet.begin(), unmet.end(),
      [](const UnmetDemand& u) { return u.status == DemandStatus::missing; }));
}

std::size_t ExtensionReport::forbidden() const {
  return unmet.size() - missing();
}

ExtensionReport verify_extension_property(const OrderedDigraph& od,
                                          const ForbiddenSet& t,
                                          std::size_t level) {
  const Digraph& d = od.digraph();
  ExtensionReport report;
  report.level = level;
  for (std::size_t k = 0; k <= level; ++k) {
    const auto links = all_links(k);
    for_each_subset(d.size(), k, [&](const std::vector<Vertex>& s) {
      for (const auto& l : links) {
        Demand demand{s, l};
        LocalCheck local = check_locally(d, s, l, t);
        if (local.witness) {
          report.unmet.push_back({std::move(demand), DemandStatus::forbidden,
                                  std::move(local.local),
                                  std::move(local.witness)});
        } else if (demand_realized(d, demand)) {
          ++report.satisfied;
        } else {
          report.unmet.push_back(
              {std::move(demand), DemandStatus::missing, std::nullopt, std::nullopt});
        }
      }
    });
  }
  return report;
}

namespace {

class Builder {
 public:
  Builder(const ForbiddenSet& t, const BuildOptions& options)
      : t_(t), options_(options), rng_(options.seed), cache_(t) {}

  OrderedDigraph run() {
    if (options_.target_size == 0) {
      throw PreconditionViolation("approximation size must be at least 1");
    }
    while (d_.size() < options_.target_size) add_vertex({}, {});
    std::vector<Demand> missing = missing_demands(d_, options_.level, cache_);
    if (missing.empty()) return OrderedDigraph(d_);
    if (options_.level >= 1 && options_.level <= 2) {
      if (auto found = search_circulants()) return OrderedDigraph(std::move(*found));
    }
    while (!missing.empty()) {
      if (d_.size() >= options_.vertex_budget) {
        throw BudgetExceeded("approximation still has " +
                             std::to_string(missing.size()) +
                             " unmet demands at the vertex budget of " +
                             std::to_string(options_.vertex_budget));
      }
      add_vertex(missing.front(), missing);
      missing = missing_demands(d_, options_.level, cache_);
    }
    return OrderedDigraph(d_);
  }

 private:
  // Vertex-transitive candidates: i -> i + x (mod m) for x in a random
  // maximal connection set kept inside Forb(T). Translations make every
  // demand equivalent to one over a subset containing 0, and every new
  // forbidden tournament equivalent to one through 0.
  std::optional<Digraph> search_circulants() {
    const std::size_t first = std::max<std::size_t>(options_.target_size, 3);
    const std::size_t last =
        std::min(options_.vertex_budget, first + kCirculantModuli);
    for (std::size_t m = first; m <= last; ++m) {
      for (std::size_t trial = 0; trial < kCirculantTrials; ++trial) {
        std::vector<TwoType> shift = random_connection_set(m);
        if (!circulant_complete(shift)) continue;
        Digraph d = circulant(shift);
        if (missing_demands(d, options_.level, cache_).empty() && in_forb(d, t_)) {
          return d;
        }
      }
    }
    return std::nullopt;
  }

  static Digraph circulant(const std::vector<TwoType>& shift) {
    const std::size_t m = shift.size();
    Digraph d(m);
    for (Vertex i = 0; i < m; ++i) {
      for (std::size_t x = 1; x < m; ++x) {
        if (shift[x] == TwoType::E) d.add_edge(i, (i + x) % m);
      }
    }
    return d;
  }

  // shift[x] is the relation of the pair (0, x).
  std::vector<TwoType> random_connection_set(std::size_t m) {
    std::vector<TwoType> shift(m, TwoType::N);
    std::vector<std::size_t> order;
    for (std::size_t x = 1; x < m; ++x) {
      if (2 * x != m) order.push_back(x);
    }
    std::shuffle(order.begin(), order.end(), rng_);
    Digraph d(m);
    for (std::size_t x : order) {
      if (shift[x] != TwoType::N) continue;
      for (Vertex i = 0; i < m; ++i) d.add_edge(i, (i + x) % m);
      if (find_forbidden_through(d, t_, 0)) {
        for (Vertex i = 0; i < m; ++i) d.remove_edge(i, (i + x) % m);
        continue;
      }
      shift[x] = TwoType::E;
      shift[m - x] = TwoType::EStar;
    }
    return shift;
  }

  // Level <= 2 audit of a circulant over the subsets containing 0.
  bool circulant_complete(const std::vector<TwoType>& shift) {
    const std::size_t m = shift.size();
    auto at = [&](std::size_t x) { return static_cast<int>(shift[x % m]); };
    bool seen_single[3] = {};
    for (std::size_t w = 1; w < m; ++w) seen_single[at(w)] = true;
    Digraph one(1);
    for (int l = 0; l < 3; ++l) {
      if (!seen_single[l] && cache_.realizable(one, {0}, {static_cast<Link>(l)})) {
        return false;
      }
    }
    if (options_.level < 2) return true;
    for (std::size_t x = 1; x < m; ++x) {
      bool seen[9] = {};
      for (std::size_t w = 1; w < m; ++w) {
        if (w != x) seen[at(w) * 3 + at(w + m - x)] = true;
      }
      Digraph two(2);
      two.set_relation(0, 1, shift[x]);
      for (int code = 0; code < 9; ++code) {
        if (seen[code]) continue;
        if (cache_.realizable(two, {0, 1},
                              {static_cast<Link>(code / 3), static_cast<Link>(code % 3)})) {
          return false;
        }
      }
    }
    return true;
  }

  // New vertex on top of the order: the forced demand first, then every
  // other missing demand that stays compatible and forbidden-free (FIFO),
  // then random links for the vertices still unassigned.
  void add_vertex(const Demand& forced, const std::vector<Demand>& missing) {
    Digraph e = d_;
    const Vertex fresh = e.add_vertex();
    std::vector<std::optional<Link>> assigned(d_.size());
    for (std::size_t i = 0; i < forced.targets.size(); ++i) {
      wire(e, forced.targets[i], fresh, forced.links[i]);
      assigned[forced.targets[i]] = forced.links[i];
    }

    for (std::size_t m = 1; m < missing.size(); ++m) {
      const Demand& demand = missing[m];
      bool compatible = true;
      bool adds = false;
      for (std::size_t i = 0; i < demand.targets.size() && compatible; ++i) {
        const auto& current = assigned[demand.targets[i]];
        compatible = !current || *current == demand.links[i];
        adds = adds || !current;
      }
      if (!compatible || !adds) continue;
      for (std::size_t i = 0; i < demand.targets.size(); ++i) {
        wire(e, demand.targets[i], fresh, demand.links[i]);
      }
      if (find_forbidden_through(e, t_, fresh)) {
        for (std::size_t i = 0; i < demand.targets.size(); ++i) {
          if (!assigned[demand.targets[i]]) wire(e, demand.targets[i], fresh, Link::none);
        }
        continue;
      }
      for (std::size_t i = 0; i < demand.targets.size(); ++i) {
        assigned[demand.targets[i]] = demand.links[i];
      }
    }

    std::vector<Vertex> rest;
    for (Vertex v = 0; v < d_.size(); ++v) {
      if (!assigned[v]) rest.push_back(v);
    }
    std::shuffle(rest.begin(), rest.end(), rng_);
    std::uniform_int_distribution<int> pick(0, 2);
    for (Vertex v : rest) {
      const Link first = static_cast<Link>(pick(rng_));
      if (first == Link::none) continue;
      const Link second = first == Link::in ? Link::out : Link::in;
      for (Link l : {first, second}) {
        wire(e, v, fresh, l);
        if (!find_forbidden_through(e, t_, fresh)) break;
        wire(e, v, fresh, Link::none);
      }
    }
    d_ = std::move(e);
  }

  static constexpr std::size_t kCirculantTrials = 64;
  static constexpr std::size_t kCirculantModuli = 160;

  const ForbiddenSet& t_;
  BuildOptions options_;
  std::mt19937_64 rng_;
  RealizabilityCache cache_;
  Digraph d_;
};

}  // namespace

OrderedDigraph build_approximation(const ForbiddenSet& t,
                                   const BuildOptions& options) {
  return Builder(t, options).run();
}

OrderedDigraph build_approximation(const ForbiddenSet& t, std::size_t n,
                                   std::size_t level, std::uint64_t seed) {
  BuildOptions options;
  options.target_size = n;
  options.level = level;
  options.seed = seed;
  return build_approximation(t, options);
}

ConnectivityReport::ConnectivityReport(const Digraph& d)
    : n_(d.size()), dist_(d.size() * d.size(), kUnreachable) {
  for (Vertex s = 0; s < n_; ++s) {
    dist_[s * n_ + s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      auto row = d.out_row(u);
      for (std::size_t w = 0; w < row.size(); ++w) {
        std::uint64_t bits = row[w];
        while (bits != 0) {
          const Vertex v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          if (dist_[s * n_ + v] == kUnreachable) {
            dist_[s * n_ + v] = dist_[s * n_ + u] + 1;
            queue.push_back(v);
          }
        }
      }
    }
  }
}

std::size_t ConnectivityReport::diameter() const {
  std::size_t worst = 0;
  for (Vertex a = 0; a < n_; ++a) {
    for (Vertex b = 0; b < n_; ++b) {
      if (a != b) worst = std::max(worst, distance(a, b));
    }
  }
  return worst;
}

ConnectivityReport connectivity_report(const Digraph& d) {
  return ConnectivityReport(d);
}

}  // namespace henson
