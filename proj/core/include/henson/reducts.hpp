#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "henson/canonical.hpp"
#include "henson/digraph.hpp"
#include "henson/forbidden.hpp"

namespace henson {

// Largest scale accepted by classify_underlying_graph. Positive evidence
// needs every graph on `scale` vertices; that part stops at 8.
inline constexpr std::size_t kMaxGraphScale = 9;
inline constexpr std::size_t kMaxEvidenceScale = 8;

// Some orientation of g lies in Forb(T) (vertex i of the result is vertex i
// of g); nullopt if none does.
std::optional<Digraph> realize_graph(const Graph& g, const ForbiddenSet& t);

// Canonical codes of every graph on 1..m vertices that is the underlying
// graph of a member of Forb(T). Throws BudgetExceeded for m > 8.
std::set<CanonicalCode> realizable_underlying_graphs(const ForbiddenSet& t, std::size_t m);

enum class GraphStatusKind : std::uint8_t {
  RandomGraphEvidence,
  HensonGraphEvidence,
  NotHomogeneous,
};

const char* to_string(GraphStatusKind k);

enum class HomogeneityCertificateKind : std::uint8_t {
  // Two digraphs of Forb(T) with the same underlying graph; a new vertex
  // adjacent to `neighbors` can be oriented into Forb(T) over one of them
  // but not over the other.
  ExtensionConflict,
  // The realizable graphs up to the scale match neither all graphs nor the
  // K_n-free graphs for the least non-realizable clique K_n.
  AgeMismatch,
};

const char* to_string(HomogeneityCertificateKind k);

struct HomogeneityCertificate {
  HomogeneityCertificateKind kind = HomogeneityCertificateKind::ExtensionConflict;
  // ExtensionConflict
  Digraph extendable;
  Digraph blocked;
  std::vector<Vertex> neighbors;
  Digraph extension;  // extendable plus the new vertex (last), in Forb(T)
  // AgeMismatch
  Graph missing_graph;  // not realizable
  std::optional<std::size_t> clique_bound;
};

struct GraphStatus {
  GraphStatusKind kind = GraphStatusKind::RandomGraphEvidence;
  std::size_t scale = 0;
  std::optional<std::size_t> clique_bound;  // HensonGraphEvidence
  std::optional<HomogeneityCertificate> certificate;  // NotHomogeneous
};

// Sound refutation when a certificate turns up at this scale; otherwise
// evidence tagged with the scale. Throws BudgetExceeded when the scale is
// out of range.
GraphStatus classify_underlying_graph(const ForbiddenSet& t, std::size_t scale);

// Rechecks a certificate from scratch (the blocked side exhaustively).
bool verify_homogeneity_certificate(const HomogeneityCertificate& cert, const ForbiddenSet& t);

enum class ReductNode : std::uint8_t {
  AutDE,
  Minus,
  Sw,
  MinusSw,
  AutGraph,
  SwGamma,
  MinusGamma,
  SwMinusGamma,
  SymD,
};

inline constexpr std::size_t kReductNodeCount = 9;

const char* to_string(ReductNode n);

// a <= b in the full containment order of the lattice.
bool reduct_below(ReductNode a, ReductNode b);

struct ReductLattice {
  std::vector<ReductNode> nodes;  // in enum order
  std::vector<std::pair<ReductNode, ReductNode>> hasse_edges;  // (lower, upper)
  bool minus_exists = false;
  bool sw_exists = false;
  // NotHomogeneous: the top of the lower part, which plays the role of the
  // graph automorphisms and is maximal below Sym(D).
  std::optional<ReductNode> maximal;
  GraphStatus graph_status;
  std::size_t scale = 0;
};

ReductLattice classify_reducts(const ForbiddenSet& t, std::size_t scale);

// Transitive reduction of reduct_below restricted to `nodes`.
std::vector<std::pair<ReductNode, ReductNode>> hasse_diagram(const std::vector<ReductNode>& nodes);

}  // namespace henson
