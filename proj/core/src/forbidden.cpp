#include "henson/forbidden.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "henson/error.hpp"

namespace henson {

ForbiddenSet::ForbiddenSet(std::vector<Tournament> members) {
  if (members.empty()) throw InvalidInput("forbidden set must be non-empty");
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].size() < 3) {
      throw InvalidInput("forbidden tournament #" + std::to_string(i) +
                         " has " + std::to_string(members[i].size()) +
                         " vertices; 1- and 2-element tournaments are "
                         "degenerate");
    }
    CanonicalCode c = canonical_code(members[i]);
    if (by_code_.contains(c)) continue;
    by_code_.emplace(c, members_.size());
    codes_.push_back(std::move(c));
    members_.push_back(std::move(members[i]));
  }

  std::vector<std::size_t> order(members_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return codes_[a] < codes_[b];  // codes sort by size first
  });
  for (std::size_t i : order) {
    const bool subsumed = std::any_of(
        basis_.begin(), basis_.end(), [&](std::size_t kept) {
          return members_[kept].size() < members_[i].size() &&
                 embeds(members_[kept], members_[i].digraph());
        });
    if (!subsumed) basis_.push_back(i);
  }
}

std::size_t ForbiddenSet::max_size() const {
  std::size_t m = 0;
  for (const auto& t : members_) m = std::max(m, t.size());
  return m;
}

std::optional<std::size_t> ForbiddenSet::find_member(
    const CanonicalCode& code) const {
  auto it = by_code_.find(code);
  if (it == by_code_.end()) return std::nullopt;
  return it->second;
}

namespace {

// Same-size members embed iff isomorphic; a canonical code lookup settles
// the common case of testing a tournament against equally large members.
std::optional<ForbiddenWitness> same_size_check(const Digraph& d,
                                                const ForbiddenSet& t) {
  if (!d.is_tournament()) return std::nullopt;
  if (auto idx = t.find_member(canonical_code(d))) {
    if (auto emb = find_embedding(t.members()[*idx], d)) {
      return ForbiddenWitness{*idx, std::move(*emb)};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ForbiddenWitness> find_forbidden(const Digraph& d,
                                               const ForbiddenSet& t) {
  bool same_size_checked = false;
  for (std::size_t i : t.basis()) {
    const Tournament& m = t.members()[i];
    if (m.size() > d.size()) break;  // basis is sorted by size
    if (m.size() == d.size()) {
      if (!same_size_checked) {
        same_size_checked = true;
        if (auto w = same_size_check(d, t)) return w;
      }
      continue;
    }
    if (auto emb = find_embedding(m, d)) return ForbiddenWitness{i, std::move(*emb)};
  }
  return std::nullopt;
}

std::optional<ForbiddenWitness> find_forbidden_through(const Digraph& d,
                                                       const ForbiddenSet& t,
                                                       Vertex through) {
  for (std::size_t i : t.basis()) {
    const Tournament& m = t.members()[i];
    if (m.size() > d.size()) break;
    if (auto emb = find_embedding_through(m, d, through)) {
      return ForbiddenWitness{i, std::move(*emb)};
    }
  }
  return std::nullopt;
}

bool in_forb(const Digraph& d, const ForbiddenSet& t) {
  return !find_forbidden(d, t).has_value();
}

std::optional<AntichainViolation> antichain_violation(const ForbiddenSet& t) {
  const auto& ms = t.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (i == j || ms[i].size() >= ms[j].size()) continue;
      if (auto emb = find_embedding(ms[i], ms[j].digraph())) {
        return AntichainViolation{i, j, std::move(*emb)};
      }
    }
  }
  return std::nullopt;
}

bool is_antichain(const ForbiddenSet& t) {
  return !antichain_violation(t).has_value();
}

std::optional<std::size_t> minus_closure_violation(const ForbiddenSet& t) {
  for (std::size_t i : t.basis()) {
    if (in_forb(reverse(t.members()[i].digraph()), t)) return i;
  }
  return std::nullopt;
}

bool closed_under_minus(const ForbiddenSet& t) {
  return !minus_closure_violation(t).has_value();
}

std::optional<SwitchViolation> sw_closure_violation(const ForbiddenSet& t) {
  for (std::size_t i : t.basis()) {
    const Digraph& m = t.members()[i].digraph();
    for (Vertex v = 0; v < m.size(); ++v) {
      const Vertex side[] = {v};
      if (in_forb(switch_across(m, side), t)) return SwitchViolation{i, v};
    }
  }
  return std::nullopt;
}

bool closed_under_sw(const ForbiddenSet& t) {
  return !sw_closure_violation(t).has_value();
}

const Tournament& minimal_member(const ForbiddenSet& t) {
  return t.members()[t.basis().front()];
}

}  // namespace henson
