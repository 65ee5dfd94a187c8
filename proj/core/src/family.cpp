#include "henson/family.hpp"

#include <algorithm>
#include <string>

#include "henson/canonical.hpp"
#include "henson/enumerate.hpp"
#include "henson/error.hpp"

namespace henson {

namespace {

constexpr std::size_t kMaxBlockerSize = 10;

// Vertex 0 dominates a copy of `rest` on 1..n.
Tournament with_source(const Tournament& rest) {
  Digraph d(rest.size() + 1);
  for (Vertex v = 1; v <= rest.size(); ++v) d.add_edge(0, v);
  for (const auto& [u, v] : rest.digraph().edges()) d.add_edge(u + 1, v + 1);
  return Tournament(std::move(d));
}

}  // namespace

Tournament make_In(std::size_t n) {
  if (n < 3) throw PreconditionViolation("I_n needs n >= 3, got " + std::to_string(n));
  Digraph d(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const bool flipped = j == i + 1 || (i == 0 && j == n - 1);
      if (flipped) {
        d.add_edge(j, i);
      } else {
        d.add_edge(i, j);
      }
    }
  }
  return Tournament(std::move(d));
}

std::vector<Vertex> high_cycle_vertices(const Tournament& t, std::size_t threshold) {
  const auto counts = three_cycle_counts(t.digraph());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < counts.size(); ++v) {
    if (counts[v] > threshold) out.push_back(v);
  }
  return out;
}

bool is_blocker(const Tournament& t) {
  const auto ends = sources_and_sinks(t.digraph());
  return !ends.sources.empty() && ends.sinks.empty() && high_cycle_vertices(t).size() >= 3;
}

Blocker find_blocker(std::size_t max_size, std::size_t budget) {
  if (max_size < 4) throw PreconditionViolation("blocker search needs max_size >= 4");
  if (max_size > kMaxBlockerSize) {
    throw PreconditionViolation("blocker search enumerates at most " +
                                std::to_string(kMaxBlockerSize) + " vertices");
  }
  std::size_t examined = 0;
  for (std::size_t size = 4; size <= max_size; ++size) {
    std::optional<std::pair<CanonicalCode, Tournament>> best;
    for (const Tournament& rest : tournaments_up_to_iso(size - 1)) {
      if (++examined > budget) {
        throw BudgetExceeded("blocker search examined " + std::to_string(budget) +
                             " candidates without finishing size " + std::to_string(size));
      }
      Tournament t = with_source(rest);
      if (!is_blocker(t)) continue;
      CanonicalCode code = canonical_code(t);
      if (!best || code < best->first) best.emplace(std::move(code), std::move(t));
    }
    if (best) {
      Blocker b;
      b.tournament = std::move(best->second);
      b.source = sources_and_sinks(b.tournament.digraph()).sources.front();
      b.high_cycle = high_cycle_vertices(b.tournament);
      b.examined = examined;
      return b;
    }
  }
  throw BudgetExceeded("no blocker with at most " + std::to_string(max_size) + " vertices");
}

void validate_family_index(const FamilyIndex& a, std::size_t blocker_size) {
  if (a.indices.empty()) throw PreconditionViolation("family index set is empty");
  const std::size_t floor = std::max<std::size_t>(6, blocker_size + 2);
  for (std::size_t n : a.indices) {
    if (n < floor) {
      throw PreconditionViolation("family index " + std::to_string(n) + " is below " +
                                  std::to_string(floor));
    }
  }
}

ForbiddenSet build_family_set(const FamilyIndex& a, const Tournament& blocker) {
  validate_family_index(a, blocker.size());
  std::vector<Tournament> members;
  for (std::size_t n : a.indices) members.push_back(make_In(n));
  for (Tournament& t : one_point_extensions(blocker)) members.push_back(std::move(t));
  return ForbiddenSet(std::move(members));
}

MaximalityReport verify_maximality(const ForbiddenSet& family, const Tournament& blocker,
                                   std::size_t linear_order_audit) {
  MaximalityReport r;
  // Prefer a member with a sink whose reversal embeds no member.
  const auto& members = family.members();
  for (std::size_t i = 0; i < members.size() && !r.minus_member; ++i) {
    const auto ends = sources_and_sinks(members[i].digraph());
    if (ends.sinks.empty()) continue;
    if (!in_forb(reverse(members[i].digraph()), family)) continue;
    r.minus_member = i;
    r.minus_sink = ends.sinks.front();
  }
  if (!r.minus_member) r.minus_member = minus_closure_violation(family);
  r.minus_blocked = r.minus_member.has_value();
  r.sw_witness = sw_closure_violation(family);
  r.sw_blocked = r.sw_witness.has_value();

  r.linear_order_bound = linear_order_audit;
  r.linear_orders_embed = true;
  for (std::size_t m = 1; m <= linear_order_audit; ++m) {
    if (!in_forb(Tournament::transitive(m).digraph(), family)) {
      r.linear_orders_embed = false;
      r.linear_order_bound = m - 1;
      break;
    }
  }

  r.blocker = blocker;
  r.extension_blocking = true;
  for (const Tournament& ext : one_point_extensions(blocker)) {
    const auto member = family.find_member(canonical_code(ext));
    if (!member) {
      r.extension_blocking = false;
      r.extension_members.clear();
      break;
    }
    r.extension_members.push_back(*member);
  }
  return r;
}

bool recheck_maximality(const MaximalityReport& r, const ForbiddenSet& family) {
  const auto& members = family.members();
  if (r.minus_blocked) {
    if (!r.minus_member || *r.minus_member >= members.size()) return false;
    const Tournament& m = members[*r.minus_member];
    if (!in_forb(reverse(m.digraph()), family)) return false;
    if (r.minus_sink) {
      const auto ends = sources_and_sinks(m.digraph());
      if (std::find(ends.sinks.begin(), ends.sinks.end(), *r.minus_sink) == ends.sinks.end()) {
        return false;
      }
    }
  }
  if (r.sw_blocked) {
    if (!r.sw_witness || r.sw_witness->member >= members.size()) return false;
    const Vertex side[] = {r.sw_witness->vertex};
    if (!in_forb(switch_across(members[r.sw_witness->member].digraph(), side), family)) {
      return false;
    }
  }
  if (r.linear_orders_embed) {
    for (std::size_t m = 1; m <= r.linear_order_bound; ++m) {
      if (!in_forb(Tournament::transitive(m).digraph(), family)) return false;
    }
  }
  if (r.extension_blocking) {
    const auto exts = one_point_extensions(r.blocker);
    if (exts.size() != r.extension_members.size()) return false;
    for (std::size_t i = 0; i < exts.size(); ++i) {
      const std::size_t m = r.extension_members[i];
      if (m >= members.size() || family.code(m) != canonical_code(exts[i])) return false;
    }
  }
  return true;
}

DistinctionCertificate distinguish_family(const FamilyIndex& first, const FamilyIndex& second,
                                          const Tournament& blocker) {
  if (first.indices == second.indices) {
    throw PreconditionViolation("index sets are equal; the families coincide");
  }
  std::vector<std::size_t> diff;
  std::set_symmetric_difference(first.indices.begin(), first.indices.end(),
                                second.indices.begin(), second.indices.end(),
                                std::back_inserter(diff));
  DistinctionCertificate cert;
  cert.n = diff.front();
  cert.in_first = first.indices.contains(cert.n);
  const ForbiddenSet owner = build_family_set(cert.in_first ? first : second, blocker);
  const auto member = owner.find_member(canonical_code(make_In(cert.n)));
  if (!member) throw WitnessConstructionFailure("I_n missing from its own family set");
  cert.member = *member;
  if (!verify_distinction(cert, first, second, blocker)) {
    throw WitnessConstructionFailure("I_" + std::to_string(cert.n) +
                                     " does not separate the two family sets");
  }
  return cert;
}

bool verify_distinction(const DistinctionCertificate& cert, const FamilyIndex& first,
                        const FamilyIndex& second, const Tournament& blocker) {
  const ForbiddenSet owner = build_family_set(cert.in_first ? first : second, blocker);
  const ForbiddenSet other = build_family_set(cert.in_first ? second : first, blocker);
  const Tournament in = make_In(cert.n);
  if (cert.member >= owner.members().size()) return false;
  if (owner.code(cert.member) != canonical_code(in)) return false;
  return in_forb(in.digraph(), other);
}

}  // namespace henson
