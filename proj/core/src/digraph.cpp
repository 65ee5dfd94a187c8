#include "henson/digraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "henson/error.hpp"

namespace henson {
namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

std::size_t popcount(std::span<const std::uint64_t> row) {
  std::size_t total = 0;
  for (std::uint64_t w : row) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

}  // namespace

const char* to_string(TwoType t) {
  switch (t) {
    case TwoType::N:
      return "N";
    case TwoType::E:
      return "E";
    case TwoType::EStar:
      return "E*";
  }
  return "?";
}

// ---------------------------------------------------------------- Digraph

Digraph::Digraph(std::size_t n)
    : n_(n),
      words_(words_for(n)),
      out_(n * words_for(n), 0),
      in_(n * words_for(n), 0) {}

Digraph Digraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Digraph d(n);
  for (const auto& [u, v] : edges) d.add_edge(u, v);
  return d;
}

void Digraph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw InvalidInput("vertex " + std::to_string(v) + " out of range for " +
                       std::to_string(n_) + " vertices");
  }
}

std::size_t Digraph::edge_count() const { return popcount(out_); }

void Digraph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
  if (has_edge(v, u)) {
    throw InvalidInput("edges (" + std::to_string(u) + "," +
                       std::to_string(v) + ") and its reverse both present");
  }
  out_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  in_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void Digraph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  out_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  in_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

void Digraph::set_relation(Vertex u, Vertex v, TwoType t) {
  remove_edge(u, v);
  remove_edge(v, u);
  if (t == TwoType::E) add_edge(u, v);
  if (t == TwoType::EStar) add_edge(v, u);
}

Vertex Digraph::add_vertex() {
  const std::size_t n = n_ + 1;
  const std::size_t words = words_for(n);
  if (words == words_) {
    out_.resize(n * words, 0);
    in_.resize(n * words, 0);
  } else {
    std::vector<std::uint64_t> out(n * words, 0);
    std::vector<std::uint64_t> in(n * words, 0);
    for (Vertex v = 0; v < n_; ++v) {
      std::copy_n(out_.begin() + static_cast<std::ptrdiff_t>(v * words_),
                  words_, out.begin() + static_cast<std::ptrdiff_t>(v * words));
      std::copy_n(in_.begin() + static_cast<std::ptrdiff_t>(v * words_),
                  words_, in.begin() + static_cast<std::ptrdiff_t>(v * words));
    }
    out_ = std::move(out);
    in_ = std::move(in);
    words_ = words;
  }
  n_ = n;
  return n - 1;
}

std::size_t Digraph::out_degree(Vertex v) const { return popcount(out_row(v)); }
std::size_t Digraph::in_degree(Vertex v) const { return popcount(in_row(v)); }

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> result;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) {
      if (has_edge(u, v)) result.emplace_back(u, v);
    }
  }
  return result;
}

bool Digraph::is_tournament() const {
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (!adjacent(u, v)) return false;
    }
  }
  return true;
}

Digraph Digraph::induced(std::span<const Vertex> vertices) const {
  for (Vertex v : vertices) check_vertex(v);
  Digraph d(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (i != j && has_edge(vertices[i], vertices[j])) d.add_edge(i, j);
    }
  }
  return d;
}

Digraph Digraph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) throw InvalidInput("relabelling has wrong length");
  std::vector<bool> seen(n_, false);
  for (Vertex v : perm) {
    check_vertex(v);
    if (seen[v]) throw InvalidInput("relabelling is not a permutation");
    seen[v] = true;
  }
  Digraph d(n_);
  for (const auto& [u, v] : edges()) d.add_edge(perm[u], perm[v]);
  return d;
}

// ------------------------------------------------------------- Tournament

Tournament::Tournament(Digraph d) : d_(std::move(d)) {
  if (!d_.is_tournament()) {
    throw InvalidInput("digraph on " + std::to_string(d_.size()) +
                       " vertices is not a tournament");
  }
}

Tournament Tournament::transitive(std::size_t n) {
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) d.add_edge(u, v);
  }
  return Tournament(std::move(d));
}

Tournament Tournament::cycle3() {
  const Edge edges[] = {{0, 1}, {1, 2}, {2, 0}};
  return Tournament(Digraph::from_edges(3, edges));
}

OrderedDigraph OrderedDigraph::order_reversed() const {
  std::vector<Vertex> perm(d_.size());
  for (Vertex v = 0; v < d_.size(); ++v) perm[v] = d_.size() - 1 - v;
  return OrderedDigraph(d_.relabeled(perm));
}

// ------------------------------------------------------------------ Graph

Graph::Graph(std::size_t n)
    : n_(n), words_(words_for(n)), adj_(n * words_for(n), 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

std::size_t Graph::edge_count() const { return popcount(adj_) / 2; }

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) throw InvalidInput("graph vertex out of range");
  if (u == v) throw InvalidInput("loop in graph");
  adj_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  adj_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) result.emplace_back(u, v);
    }
  }
  return result;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  Graph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) g.add_edge(i, j);
    }
  }
  return g;
}

namespace {

bool extend_clique(const Graph& g, std::vector<std::uint64_t>& candidates,
                   std::size_t needed) {
  if (needed == 0) return true;
  const std::size_t words = g.word_count();
  for (std::size_t w = 0; w < words; ++w) {
    while (candidates[w] != 0) {
      const int bit = std::countr_zero(candidates[w]);
      const Vertex v = w * 64 + static_cast<std::size_t>(bit);
      candidates[w] &= candidates[w] - 1;
      std::vector<std::uint64_t> next(words);
      auto row = g.row(v);
      for (std::size_t i = 0; i < words; ++i) next[i] = candidates[i] & row[i];
      if (extend_clique(g, next, needed - 1)) return true;
    }
  }
  return false;
}

}  // namespace

bool Graph::has_clique(std::size_t k) const {
  if (k == 0) return true;
  if (k > n_) return false;
  std::vector<std::uint64_t> all(words_, 0);
  for (Vertex v = 0; v < n_; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
  return extend_clique(*this, all, k);
}

// ------------------------------------------------------------- operations

Digraph reverse(const Digraph& d) {
  Digraph r(d.size());
  for (const auto& [u, v] : d.edges()) r.add_edge(v, u);
  return r;
}

Tournament reverse(const Tournament& t) {
  return Tournament(reverse(t.digraph()));
}

Digraph switch_across(const Digraph& d, std::span<const Vertex> side) {
  std::vector<bool> inside(d.size(), false);
  for (Vertex v : side) {
    if (v >= d.size()) {
      throw InvalidInput("switch vertex " + std::to_string(v) +
                         " out of range");
    }
    inside[v] = true;
  }
  Digraph r(d.size());
  for (const auto& [u, v] : d.edges()) {
    if (inside[u] != inside[v]) {
      r.add_edge(v, u);
    } else {
      r.add_edge(u, v);
    }
  }
  return r;
}

Tournament switch_across(const Tournament& t, std::span<const Vertex> side) {
  return Tournament(switch_across(t.digraph(), side));
}

namespace {

// Backtracking embedding of a tournament. Pattern vertices are placed in
// `order`; the candidate set for the next one is the intersection of the
// appropriate in/out rows of the already placed images.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const Digraph& pattern, const Digraph& host)
      : pattern_(pattern), host_(host), words_(host.word_count()) {
    const std::size_t m = pattern.size();
    image_.assign(m, 0);
    out_need_.resize(m);
    in_need_.resize(m);
    for (Vertex p = 0; p < m; ++p) {
      out_need_[p] = pattern.out_degree(p);
      in_need_[p] = pattern.in_degree(p);
    }
    host_out_.resize(host.size());
    host_in_.resize(host.size());
    for (Vertex v = 0; v < host.size(); ++v) {
      host_out_[v] = host.out_degree(v);
      host_in_[v] = host.in_degree(v);
    }
  }

  // Places `first` at `anchor` before searching the remaining vertices.
  std::optional<std::vector<Vertex>> run(std::optional<Vertex> first,
                                         std::optional<Vertex> anchor) {
    const std::size_t m = pattern_.size();
    order_.clear();
    if (first) order_.push_back(*first);
    // Vertices with the most lopsided scores have the fewest host candidates.
    std::vector<Vertex> rest;
    for (Vertex p = 0; p < m; ++p) {
      if (!first || p != *first) rest.push_back(p);
    }
    std::stable_sort(rest.begin(), rest.end(), [&](Vertex a, Vertex b) {
      return std::max(out_need_[a], in_need_[a]) >
             std::max(out_need_[b], in_need_[b]);
    });
    order_.insert(order_.end(), rest.begin(), rest.end());

    std::vector<std::uint64_t> all(words_, 0);
    for (Vertex v = 0; v < host_.size(); ++v) {
      all[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    if (anchor) {
      std::fill(all.begin(), all.end(), 0);
      all[*anchor / 64] |= std::uint64_t{1} << (*anchor % 64);
    }
    if (place(0, all)) return image_;
    return std::nullopt;
  }

 private:
  bool place(std::size_t depth, const std::vector<std::uint64_t>& candidates) {
    if (depth == order_.size()) return true;
    const Vertex p = order_[depth];
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = candidates[w];
      while (bits != 0) {
        const Vertex v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (host_out_[v] < out_need_[p] || host_in_[v] < in_need_[p]) continue;
        image_[p] = v;
        if (depth + 1 == order_.size()) return true;
        // Candidates for the next pattern vertex given everything placed.
        const Vertex q = order_[depth + 1];
        std::vector<std::uint64_t> next(words_, ~std::uint64_t{0});
        bool empty = false;
        for (std::size_t i = 0; i <= depth && !empty; ++i) {
          const Vertex placed = order_[i];
          const Vertex img = (i == depth) ? v : image_[placed];
          auto row = pattern_.has_edge(placed, q) ? host_.out_row(img)
                                                  : host_.in_row(img);
          std::uint64_t any = 0;
          for (std::size_t k = 0; k < words_; ++k) {
            next[k] &= row[k];
            any |= next[k];
          }
          empty = any == 0;
        }
        if (empty) continue;
        if (place(depth + 1, next)) return true;
      }
    }
    return false;
  }

  const Digraph& pattern_;
  const Digraph& host_;
  std::size_t words_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<std::size_t> out_need_;
  std::vector<std::size_t> in_need_;
  std::vector<std::size_t> host_out_;
  std::vector<std::size_t> host_in_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_embedding(const Tournament& pattern,
                                                  const Digraph& host) {
  if (pattern.size() > host.size()) return std::nullopt;
  if (pattern.size() == 0) return std::vector<Vertex>{};
  EmbeddingSearch search(pattern.digraph(), host);
  return search.run(std::nullopt, std::nullopt);
}

std::optional<std::vector<Vertex>> find_embedding_through(
    const Tournament& pattern, const Digraph& host, Vertex through) {
  if (pattern.size() > host.size() || pattern.size() == 0) return std::nullopt;
  if (through >= host.size()) throw InvalidInput("vertex out of range");
  EmbeddingSearch search(pattern.digraph(), host);
  for (Vertex p = 0; p < pattern.size(); ++p) {
    if (auto found = search.run(p, through)) return found;
  }
  return std::nullopt;
}

bool embeds(const Tournament& pattern, const Digraph& host) {
  return find_embedding(pattern, host).has_value();
}

std::vector<ThreeCycle> three_cycles(const Digraph& d) {
  std::vector<ThreeCycle> result;
  const std::size_t n = d.size();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        if (d.has_edge(a, b) && d.has_edge(b, c) && d.has_edge(c, a)) {
          result.push_back({a, b, c});
        } else if (d.has_edge(a, c) && d.has_edge(c, b) && d.has_edge(b, a)) {
          result.push_back({a, c, b});
        }
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::size_t> three_cycle_counts(const Digraph& d) {
  std::vector<std::size_t> counts(d.size(), 0);
  for (const auto& cyc : three_cycles(d)) {
    ++counts[cyc.a];
    ++counts[cyc.b];
    ++counts[cyc.c];
  }
  return counts;
}

SourcesAndSinks sources_and_sinks(const Digraph& d) {
  SourcesAndSinks result;
  const std::size_t others = d.size() == 0 ? 0 : d.size() - 1;
  for (Vertex v = 0; v < d.size(); ++v) {
    if (d.out_degree(v) == others) result.sources.push_back(v);
    if (d.in_degree(v) == others) result.sinks.push_back(v);
  }
  return result;
}

Graph underlying_graph(const Digraph& d) {
  Graph g(d.size());
  for (const auto& [u, v] : d.edges()) g.add_edge(u, v);
  return g;
}

}  // namespace henson
