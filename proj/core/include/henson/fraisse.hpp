#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "henson/digraph.hpp"
#include "henson/forbidden.hpp"

namespace henson {

// How a target vertex s relates to a new vertex w.
enum class Link : std::uint8_t {
  none = 0,  // s and w non-adjacent
  in = 1,    // s -> w
  out = 2,   // w -> s
};

const char* to_string(Link l);

// One-point extension request: the new vertex is wired to targets[i]
// according to links[i] and is non-adjacent to every other vertex.
struct ExtensionSpec {
  std::vector<Vertex> targets;
  std::vector<Link> links;
  // Index the new vertex should take in the order; vertices at or above it
  // shift up by one. Appended on top when empty.
  std::optional<std::size_t> order_slot;
};

struct Refusal {
  Digraph attempted;  // the extension that was rejected
  ForbiddenWitness witness;
};

// Holds the extended digraph on success.
using ExtensionResult = std::variant<Digraph, Refusal>;

// Requires in_forb(d, t); only tournaments through the new vertex are
// re-checked. Throws InvalidInput on a malformed spec.
ExtensionResult extend_one_point(const Digraph& d, const ExtensionSpec& spec,
                                 const ForbiddenSet& t);

struct Amalgam {
  Digraph digraph;
  // from_b[v] is the vertex of the amalgam that b's vertex v became; a's
  // vertices keep their indices.
  std::vector<Vertex> from_b;
};

// Glues a and b along `glue` (pairs (vertex of a, vertex of b)) with no
// edges between the unglued parts. Throws InvalidInput when the glue is not
// an isomorphism of induced sub-digraphs.
Amalgam free_amalgam(const Digraph& a, const Digraph& b,
                     std::span<const Edge> glue);

// An extension demand over `targets`, without order information.
struct Demand {
  std::vector<Vertex> targets;
  std::vector<Link> links;
};

enum class DemandStatus : std::uint8_t {
  missing,    // realizable in Forb(T) but no vertex realizes it
  forbidden,  // S plus a new vertex wired per the links leaves Forb(T)
};

struct UnmetDemand {
  Demand demand;
  DemandStatus status = DemandStatus::missing;
  // For forbidden demands: the local digraph on targets + new vertex (new
  // vertex last) and a member embedding into it.
  std::optional<Digraph> local;
  std::optional<ForbiddenWitness> witness;
};

struct ExtensionReport {
  std::size_t level = 0;
  std::size_t satisfied = 0;
  std::vector<UnmetDemand> unmet;

  std::size_t missing() const;
  std::size_t forbidden() const;
};

// Audits every demand over every vertex subset of size <= level.
ExtensionReport verify_extension_property(const OrderedDigraph& d,
                                          const ForbiddenSet& t,
                                          std::size_t level);

// Whether some vertex outside the targets realizes the demand.
bool demand_realized(const Digraph& d, const Demand& demand);

struct BuildOptions {
  std::size_t target_size = 1;
  std::size_t level = 0;
  std::uint64_t seed = 0;
  // Hard cap on the number of vertices.
  std::size_t vertex_budget = 2048;
};

// Grows an ordered digraph in Forb(T) to at least target_size vertices, then
// keeps adding vertices until every realizable demand over subsets of size
// <= level is realized. Deterministic per options. Throws BudgetExceeded
// when the vertex budget runs out.
OrderedDigraph build_approximation(const ForbiddenSet& t,
                                   const BuildOptions& options);
OrderedDigraph build_approximation(const ForbiddenSet& t, std::size_t n,
                                   std::size_t level, std::uint64_t seed);

// Least directed path lengths between all ordered pairs.
class ConnectivityReport {
 public:
  static constexpr std::size_t kUnreachable =
      std::numeric_limits<std::size_t>::max();

  explicit ConnectivityReport(const Digraph& d);

  std::size_t size() const { return n_; }
  std::size_t distance(Vertex from, Vertex to) const {
    return dist_[from * n_ + to];
  }
  // Largest distance over ordered pairs of distinct vertices; kUnreachable
  // if some pair is disconnected, 0 for fewer than two vertices.
  std::size_t diameter() const;

 private:
  std::size_t n_;
  std::vector<std::size_t> dist_;
};

ConnectivityReport connectivity_report(const Digraph& d);

}  // namespace henson
