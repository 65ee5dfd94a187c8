#pragma once

// Slow, obviously-correct reference implementations for the tests.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "henson/digraph.hpp"

namespace oracle {

using henson::Digraph;
using henson::TwoType;
using henson::Vertex;

inline std::vector<Vertex> identity_perm(std::size_t n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  return p;
}

// Some permutation p with a(u, v) = b(p[u], p[v]) for all pairs.
inline bool isomorphic(const Digraph& a, const Digraph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  auto p = identity_perm(a.size());
  do {
    bool ok = true;
    for (Vertex u = 0; u < a.size() && ok; ++u) {
      for (Vertex v = 0; v < a.size() && ok; ++v) {
        if (u != v && a.has_edge(u, v) != b.has_edge(p[u], p[v])) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Induced embedding of `pattern` into `host` by trying every injection.
inline bool embeds(const Digraph& pattern, const Digraph& host) {
  const std::size_t k = pattern.size();
  const std::size_t n = host.size();
  if (k > n) return false;
  std::vector<Vertex> image(k);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) return true;
    for (Vertex h = 0; h < n; ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (pattern.has_edge(j, i) != host.has_edge(image[j], h)) ok = false;
        if (pattern.has_edge(i, j) != host.has_edge(h, image[j])) ok = false;
      }
      if (!ok) continue;
      used[h] = true;
      image[i] = h;
      if (self(self, i + 1)) return true;
      used[h] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

// Ordered triples (a, b, c), a least, with a -> b -> c -> a.
inline std::vector<std::array<Vertex, 3>> three_cycles(const Digraph& d) {
  std::vector<std::array<Vertex, 3>> out;
  const std::size_t n = d.size();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = a + 1; c < n; ++c) {
        if (b != c && d.has_edge(a, b) && d.has_edge(b, c) && d.has_edge(c, a)) {
          out.push_back({a, b, c});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Digraph whose pair (i, j), i < j, in lexicographic order takes relation
// digit i of `code` in base 3 (0 = N, 1 = E, 2 = E*).
inline Digraph from_ternary(std::size_t n, std::uint64_t code) {
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      d.set_relation(u, v, static_cast<TwoType>(code % 3));
      code /= 3;
    }
  }
  return d;
}

inline std::uint64_t pow3(std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

// Every labelled digraph on n vertices.
inline std::vector<Digraph> all_digraphs(std::size_t n) {
  const std::uint64_t total = pow3(n * (n - 1) / 2);
  std::vector<Digraph> out;
  out.reserve(total);
  for (std::uint64_t c = 0; c < total; ++c) out.push_back(from_ternary(n, c));
  return out;
}

inline Digraph random_digraph(std::size_t n, double density, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng) >= density) continue;
      d.set_relation(u, v, coin(rng) < 0.5 ? TwoType::E : TwoType::EStar);
    }
  }
  return d;
}

inline Digraph random_tournament(std::size_t n, std::mt19937_64& rng) {
  return random_digraph(n, 1.0, rng);
}

inline std::vector<Vertex> random_perm(std::size_t n, std::mt19937_64& rng) {
  auto p = identity_perm(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
