#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "henson/canonical.hpp"
#include "henson/digraph.hpp"

namespace henson {

// A finite set of forbidden tournaments defining the hereditary class
// Forb(T) of digraphs that embed none of them.
//
// members() keeps every distinct (up to isomorphism) tournament in input
// order. basis() lists the subsumption-reduced members, those embedding no
// other member, sorted by (size, canonical code); Forb(T) depends only on
// the basis, so membership tests and closure checks run over it.
class ForbiddenSet {
 public:
  // Throws InvalidInput when empty or when a member has fewer than three
  // vertices; the message names the offending member index.
  explicit ForbiddenSet(std::vector<Tournament> members);

  const std::vector<Tournament>& members() const { return members_; }
  const CanonicalCode& code(std::size_t member) const { return codes_[member]; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  std::size_t min_size() const { return members_[basis_.front()].size(); }
  std::size_t max_size() const;

  // Member index of a tournament isomorphic to `code`, if any.
  std::optional<std::size_t> find_member(const CanonicalCode& code) const;

 private:
  std::vector<Tournament> members_;
  std::vector<CanonicalCode> codes_;
  std::vector<std::size_t> basis_;
  std::unordered_map<CanonicalCode, std::size_t, CanonicalCodeHash> by_code_;
};

// Member `member` of the set embeds into the digraph via `embedding`.
struct ForbiddenWitness {
  std::size_t member = 0;
  std::vector<Vertex> embedding;
};

// nullopt iff d is in Forb(T).
std::optional<ForbiddenWitness> find_forbidden(const Digraph& d,
                                               const ForbiddenSet& t);
// Only tournaments whose image contains `through`; used when d minus
// `through` is already known to be in Forb(T).
std::optional<ForbiddenWitness> find_forbidden_through(const Digraph& d,
                                                       const ForbiddenSet& t,
                                                       Vertex through);
bool in_forb(const Digraph& d, const ForbiddenSet& t);

struct AntichainViolation {
  std::size_t smaller = 0;  // member index
  std::size_t larger = 0;   // member index
  std::vector<Vertex> embedding;
};

// Checks members(), not the basis.
std::optional<AntichainViolation> antichain_violation(const ForbiddenSet& t);
bool is_antichain(const ForbiddenSet& t);

// A basis member whose reversal embeds no member.
std::optional<std::size_t> minus_closure_violation(const ForbiddenSet& t);
bool closed_under_minus(const ForbiddenSet& t);

struct SwitchViolation {
  std::size_t member = 0;
  Vertex vertex = 0;
};

// A basis member and vertex whose single-vertex switch embeds no member.
std::optional<SwitchViolation> sw_closure_violation(const ForbiddenSet& t);
bool closed_under_sw(const ForbiddenSet& t);

// Least vertex count, ties broken by least canonical code.
const Tournament& minimal_member(const ForbiddenSet& t);

}  // namespace henson
