#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace henson {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Type of an ordered pair (u, v) in a digraph: N when u and v are
// non-adjacent, E when u -> v, EStar when v -> u.
enum class TwoType : std::uint8_t { N = 0, E = 1, EStar = 2 };

// E <-> EStar, N fixed.
constexpr TwoType starred(TwoType t) {
  switch (t) {
    case TwoType::E:
      return TwoType::EStar;
    case TwoType::EStar:
      return TwoType::E;
    default:
      return TwoType::N;
  }
}

const char* to_string(TwoType t);

// Finite irreflexive antisymmetric binary relation on {0, ..., n-1}.
//
// Rows are stored as bitsets in both directions so that neighbourhood
// intersections (embedding search, extension audits) are word-parallel.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n);

  // Validates ranges, loops and antisymmetry; throws InvalidInput.
  static Digraph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return n_; }
  std::size_t word_count() const { return words_; }
  std::size_t edge_count() const;

  bool has_edge(Vertex u, Vertex v) const {
    return (out_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  bool adjacent(Vertex u, Vertex v) const {
    return has_edge(u, v) || has_edge(v, u);
  }
  TwoType relation(Vertex u, Vertex v) const {
    if (has_edge(u, v)) return TwoType::E;
    if (has_edge(v, u)) return TwoType::EStar;
    return TwoType::N;
  }

  // Throws InvalidInput on loops, out-of-range vertices or when the
  // reverse edge is already present.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  // Overwrites whatever relation u and v had.
  void set_relation(Vertex u, Vertex v, TwoType t);

  // Appends an isolated vertex and returns its index.
  Vertex add_vertex();

  std::size_t out_degree(Vertex v) const;
  std::size_t in_degree(Vertex v) const;

  std::span<const std::uint64_t> out_row(Vertex v) const {
    return {out_.data() + v * words_, words_};
  }
  std::span<const std::uint64_t> in_row(Vertex v) const {
    return {in_.data() + v * words_, words_};
  }

  // Sorted lexicographically.
  std::vector<Edge> edges() const;

  bool is_tournament() const;

  // Sub-digraph on `vertices`; vertex i of the result is vertices[i].
  Digraph induced(std::span<const Vertex> vertices) const;

  // Applies a relabelling where vertex v becomes perm[v].
  Digraph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

// A digraph with exactly one edge between every pair of distinct vertices.
class Tournament {
 public:
  Tournament() = default;
  // Throws InvalidInput if `d` is not complete.
  explicit Tournament(Digraph d);

  // L_n: i -> j for all i < j.
  static Tournament transitive(std::size_t n);
  // C_3: 0 -> 1 -> 2 -> 0.
  static Tournament cycle3();

  const Digraph& digraph() const { return d_; }
  std::size_t size() const { return d_.size(); }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  Digraph d_;
};

// A digraph together with a linear order; the order is always the index
// order 0 < 1 < ... < n-1.
class OrderedDigraph {
 public:
  OrderedDigraph() = default;
  explicit OrderedDigraph(Digraph d) : d_(std::move(d)) {}

  const Digraph& digraph() const { return d_; }
  std::size_t size() const { return d_.size(); }

  // Same digraph with the order reversed (vertex v becomes n-1-v).
  OrderedDigraph order_reversed() const;

  friend bool operator==(const OrderedDigraph&, const OrderedDigraph&) =
      default;

 private:
  Digraph d_;
};

// Simple undirected graph; used for underlying graphs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph complete(std::size_t n);

  std::size_t size() const { return n_; }
  std::size_t edge_count() const;
  bool has_edge(Vertex u, Vertex v) const {
    return (adj_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  void add_edge(Vertex u, Vertex v);
  std::span<const std::uint64_t> row(Vertex v) const {
    return {adj_.data() + v * words_, words_};
  }
  std::size_t word_count() const { return words_; }
  // Each edge once, as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  Graph induced(std::span<const Vertex> vertices) const;
  // True iff the graph contains a clique on `k` vertices.
  bool has_clique(std::size_t k) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Every edge (u, v) replaced by (v, u).
Digraph reverse(const Digraph& d);
Tournament reverse(const Tournament& t);

// Reverses exactly the edges with one endpoint in `side`.
// Throws InvalidInput on out-of-range vertices.
Digraph switch_across(const Digraph& d, std::span<const Vertex> side);
Tournament switch_across(const Tournament& t, std::span<const Vertex> side);

// Injective edge-preserving map pattern -> host; because the pattern is a
// tournament this is an induced embedding. Element i of the result is the
// image of pattern vertex i.
std::optional<std::vector<Vertex>> find_embedding(const Tournament& pattern,
                                                  const Digraph& host);
// As above, restricted to embeddings whose image contains `through`.
std::optional<std::vector<Vertex>> find_embedding_through(
    const Tournament& pattern, const Digraph& host, Vertex through);
bool embeds(const Tournament& pattern, const Digraph& host);

// A directed 3-cycle a -> b -> c -> a with a the least vertex.
struct ThreeCycle {
  Vertex a;
  Vertex b;
  Vertex c;
  friend auto operator<=>(const ThreeCycle&, const ThreeCycle&) = default;
};

// Sorted, each cycle once.
std::vector<ThreeCycle> three_cycles(const Digraph& d);
// Number of directed 3-cycles through each vertex.
std::vector<std::size_t> three_cycle_counts(const Digraph& d);

struct SourcesAndSinks {
  std::vector<Vertex> sources;
  std::vector<Vertex> sinks;
};

// A source has an edge to every other vertex; a sink receives one from
// every other vertex.
SourcesAndSinks sources_and_sinks(const Digraph& d);

Graph underlying_graph(const Digraph& d);

}  // namespace henson
