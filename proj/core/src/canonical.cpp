#include "henson/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace henson {
namespace {

// Relation matrix with small values; rel[u * n + v] is the colour of the
// ordered pair (u, v). Digraphs use {0, 1 = u->v, 2 = v->u}, graphs {0, 1}.
struct ColouredPairs {
  std::size_t n = 0;
  std::uint8_t colours = 0;  // number of non-zero colours
  std::uint8_t tag = 0;
  std::vector<std::uint8_t> rel;

  std::uint8_t at(Vertex u, Vertex v) const { return rel[u * n + v]; }
};

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;

// Splits cells by the number of pairs of each colour into every cell until
// the partition is equitable. Cell order is derived from signatures only,
// so the refinement commutes with relabelling.
void refine(const ColouredPairs& g, Partition& p) {
  std::vector<std::size_t> cell_of(g.n);
  while (true) {
    for (std::size_t c = 0; c < p.size(); ++c) {
      for (Vertex v : p[c]) cell_of[v] = c;
    }
    const std::size_t width = p.size() * g.colours;
    Partition next;
    next.reserve(p.size());
    bool split = false;
    for (const Cell& cell : p) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<std::uint32_t>, Vertex>> keyed;
      keyed.reserve(cell.size());
      for (Vertex v : cell) {
        std::vector<std::uint32_t> sig(width, 0);
        for (Vertex u = 0; u < g.n; ++u) {
          const std::uint8_t c = g.at(v, u);
          if (c != 0) ++sig[cell_of[u] * g.colours + (c - 1U)];
        }
        keyed.emplace_back(std::move(sig), v);
      }
      std::stable_sort(keyed.begin(), keyed.end(),
                       [](const auto& a, const auto& b) {
                         return a.first < b.first;
                       });
      Cell current{keyed.front().second};
      for (std::size_t i = 1; i < keyed.size(); ++i) {
        if (keyed[i].first != keyed[i - 1].first) {
          next.push_back(std::move(current));
          current.clear();
          split = true;
        }
        current.push_back(keyed[i].second);
      }
      next.push_back(std::move(current));
    }
    p = std::move(next);
    if (!split) return;
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const ColouredPairs& g) : g_(g) {}

  void run() {
    Partition root{Cell(g_.n)};
    std::iota(root.front().begin(), root.front().end(), Vertex{0});
    std::vector<Vertex> prefix;
    if (g_.n == 0) {
      best_.emplace();
      best_labeling_.clear();
      return;
    }
    search(std::move(root), prefix);
  }

  const std::vector<std::uint8_t>& certificate() const { return *best_; }
  const std::vector<Vertex>& labeling() const { return best_labeling_; }

 private:
  void search(Partition p, std::vector<Vertex>& prefix) {
    refine(g_, p);
    if (p.size() == g_.n) {
      leaf(p);
      return;
    }
    std::size_t target = p.size();
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (p[c].size() > 1 &&
          (target == p.size() || p[c].size() < p[target].size())) {
        target = c;
      }
    }
    const Cell cell = p[target];
    std::vector<Vertex> explored;
    for (Vertex v : cell) {
      if (equivalent_to_explored(v, explored, prefix)) continue;
      explored.push_back(v);
      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (c != target) {
          child.push_back(p[c]);
          continue;
        }
        child.push_back({v});
        Cell rest;
        for (Vertex u : cell) {
          if (u != v) rest.push_back(u);
        }
        child.push_back(std::move(rest));
      }
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  // True if some automorphism found so far fixes the prefix pointwise and
  // joins v with an explored sibling; such subtrees yield identical leaves.
  bool equivalent_to_explored(Vertex v, const std::vector<Vertex>& explored,
                              const std::vector<Vertex>& prefix) const {
    if (explored.empty() || automorphisms_.empty()) return false;
    std::vector<Vertex> parent(g_.n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](Vertex x) { return gamma[x] == x; });
      if (!fixes) continue;
      for (Vertex x = 0; x < g_.n; ++x) {
        Vertex a = find(x);
        Vertex b = find(gamma[x]);
        if (a != b) parent[a] = b;
      }
    }
    const Vertex root = find(v);
    return std::any_of(explored.begin(), explored.end(),
                       [&](Vertex u) { return find(u) == root; });
  }

  void leaf(const Partition& p) {
    std::vector<Vertex> labeling(g_.n);  // vertex -> position
    std::vector<Vertex> at(g_.n);        // position -> vertex
    for (std::size_t i = 0; i < p.size(); ++i) {
      labeling[p[i].front()] = i;
      at[i] = p[i].front();
    }
    std::vector<std::uint8_t> cert;
    cert.reserve(g_.n * g_.n);
    for (std::size_t i = 0; i < g_.n; ++i) {
      for (std::size_t j = 0; j < g_.n; ++j) cert.push_back(g_.at(at[i], at[j]));
    }
    if (!best_ || cert < *best_) {
      best_ = std::move(cert);
      best_labeling_ = std::move(labeling);
      best_at_ = std::move(at);
    } else if (cert == *best_) {
      // best_at_[labeling[x]] is where the best leaf put the vertex that this
      // leaf put at x's position: an automorphism.
      std::vector<Vertex> gamma(g_.n);
      for (Vertex x = 0; x < g_.n; ++x) gamma[x] = best_at_[labeling[x]];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  const ColouredPairs& g_;
  std::optional<std::vector<std::uint8_t>> best_;
  std::vector<Vertex> best_labeling_;
  std::vector<Vertex> best_at_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

ColouredPairs colour(const Digraph& d) {
  ColouredPairs g;
  g.n = d.size();
  g.colours = 2;
  g.tag = 'D';
  g.rel.assign(g.n * g.n, 0);
  for (const auto& [u, v] : d.edges()) {
    g.rel[u * g.n + v] = 1;
    g.rel[v * g.n + u] = 2;
  }
  return g;
}

ColouredPairs colour(const Graph& h) {
  ColouredPairs g;
  g.n = h.size();
  g.colours = 1;
  g.tag = 'G';
  g.rel.assign(g.n * g.n, 0);
  for (const auto& [u, v] : h.edges()) {
    g.rel[u * g.n + v] = 1;
    g.rel[v * g.n + u] = 1;
  }
  return g;
}

CanonicalCode encode(const ColouredPairs& g) {
  CanonicalSearch search(g);
  search.run();
  std::vector<std::uint8_t> bytes;
  const auto& cert = search.certificate();
  bytes.reserve(5 + cert.size());
  const auto n = static_cast<std::uint32_t>(g.n);
  for (int shift = 24; shift >= 0; shift -= 8) {
    bytes.push_back(static_cast<std::uint8_t>(n >> shift));
  }
  bytes.push_back(g.tag);
  // Only the strict upper triangle is needed: the lower one is implied.
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = i + 1; j < g.n; ++j) bytes.push_back(cert[i * g.n + j]);
  }
  return CanonicalCode(std::move(bytes));
}

}  // namespace

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& code) const {
  // FNV-1a
  std::size_t h = 1469598103934665603ULL;
  for (std::uint8_t b : code.bytes()) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

CanonicalCode canonical_code(const Digraph& d) { return encode(colour(d)); }
CanonicalCode canonical_code(const Graph& g) { return encode(colour(g)); }

std::vector<Vertex> canonical_labeling(const Digraph& d) {
  const ColouredPairs g = colour(d);
  CanonicalSearch search(g);
  search.run();
  return search.labeling();
}

Digraph canonical_form(const Digraph& d) {
  return d.relabeled(canonical_labeling(d));
}

}  // namespace henson
