#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "henson/digraph.hpp"
#include "henson/forbidden.hpp"

namespace henson {

// I_n on vertices 0..n-1: the linear order with every consecutive edge and
// the edge between the two ends reversed. Reports print vertex v as v + 1.
// Throws PreconditionViolation for n < 3.
Tournament make_In(std::size_t n);

// Vertices lying on more than `threshold` directed 3-cycles.
std::vector<Vertex> high_cycle_vertices(const Tournament& t, std::size_t threshold = 5);

inline constexpr std::size_t kDefaultBlockerBudget = 1'000'000;

// A tournament with a source, no sink and at least three high-cycle
// vertices. Every I_n has at most two of the latter and 3-cycles through
// a vertex inject under embeddings, so no I_n contains it.
struct Blocker {
  Tournament tournament;
  Vertex source = 0;
  std::vector<Vertex> high_cycle;
  std::size_t examined = 0;  // candidates looked at
};

// Smallest blocker, first by canonical code among those of least size.
// Candidates are the tournaments with a source, i.e. a dominating vertex
// over every smaller tournament up to isomorphism. Throws BudgetExceeded
// when more than `budget` candidates are needed or none exists up to
// max_size; PreconditionViolation for max_size < 4 or above the
// enumeration limit (10).
Blocker find_blocker(std::size_t max_size, std::size_t budget = kDefaultBlockerBudget);

// Rechecks the three blocker conditions.
bool is_blocker(const Tournament& t);

struct FamilyIndex {
  std::set<std::size_t> indices;
};

// Throws PreconditionViolation unless the index set is non-empty and every
// index is at least 6 and at least blocker_size + 2.
void validate_family_index(const FamilyIndex& a, std::size_t blocker_size);

// {I_n : n in a} followed by every one-point extension of the blocker.
ForbiddenSet build_family_set(const FamilyIndex& a, const Tournament& blocker);

struct MaximalityReport {
  bool minus_blocked = false;
  std::optional<std::size_t> minus_member;  // its reversal lies in Forb(T)
  std::optional<Vertex> minus_sink;         // a sink of that member, if any
  bool sw_blocked = false;
  std::optional<SwitchViolation> sw_witness;
  bool linear_orders_embed = false;
  std::size_t linear_order_bound = 0;  // L_m in Forb(T) for all m up to this
  bool extension_blocking = false;
  // Blocker copy and, for each one-point extension of it, the member of T
  // it equals.
  Tournament blocker;
  std::vector<std::size_t> extension_members;
};

MaximalityReport verify_maximality(const ForbiddenSet& family, const Tournament& blocker,
                                   std::size_t linear_order_audit = 12);

// Rechecks every true flag from its witness.
bool recheck_maximality(const MaximalityReport& report, const ForbiddenSet& family);

// I_n for n in the symmetric difference: a member of one family set and in
// Forb of the other.
struct DistinctionCertificate {
  std::size_t n = 0;
  bool in_first = true;  // I_n is a member of the first family set
  std::size_t member = 0;  // its index there
};

// Throws PreconditionViolation when the index sets are equal.
DistinctionCertificate distinguish_family(const FamilyIndex& first, const FamilyIndex& second,
                                          const Tournament& blocker);

bool verify_distinction(const DistinctionCertificate& cert, const FamilyIndex& first,
                        const FamilyIndex& second, const Tournament& blocker);

}  // namespace henson
