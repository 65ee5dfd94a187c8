#include "henson/reducts.hpp"

#include <algorithm>

#include "henson/enumerate.hpp"
#include "henson/error.hpp"
#include "henson/parallel.hpp"

namespace henson {

namespace {

// Graph sizes for the exhaustive part of the certificate search; the
// complete-graph part goes up to the largest enumerable tournaments.
constexpr std::size_t kGenericCertificateSize = 5;
constexpr std::size_t kCliqueCertificateSize = 8;

// Orients the edges of g from vertex `v` on, keeping d in Forb(T). d
// already carries g's orientation on vertices below v; later vertices are
// still isolated in d.
bool orient_from(const Graph& g, const ForbiddenSet& t, Digraph& d, Vertex v) {
  if (v == g.size()) return true;
  std::vector<Vertex> back;
  for (Vertex u = 0; u < v; ++u) {
    if (g.has_edge(u, v)) back.push_back(u);
  }
  const std::size_t options = std::size_t{1} << back.size();
  for (std::size_t mask = 0; mask < options; ++mask) {
    for (std::size_t i = 0; i < back.size(); ++i) {
      d.set_relation(back[i], v, (mask >> i) & 1U ? TwoType::EStar : TwoType::E);
    }
    if (!find_forbidden_through(d, t, v) && orient_from(g, t, d, v + 1)) return true;
  }
  for (Vertex u : back) d.set_relation(u, v, TwoType::N);
  return false;
}

// Every orientation of g lying in Forb(T).
void all_orientations(const Graph& g, const ForbiddenSet& t, Digraph& d, Vertex v,
                      std::vector<Digraph>& out) {
  if (v == g.size()) {
    out.push_back(d);
    return;
  }
  std::vector<Vertex> back;
  for (Vertex u = 0; u < v; ++u) {
    if (g.has_edge(u, v)) back.push_back(u);
  }
  const std::size_t options = std::size_t{1} << back.size();
  for (std::size_t mask = 0; mask < options; ++mask) {
    for (std::size_t i = 0; i < back.size(); ++i) {
      d.set_relation(back[i], v, (mask >> i) & 1U ? TwoType::EStar : TwoType::E);
    }
    if (!find_forbidden_through(d, t, v)) all_orientations(g, t, d, v + 1, out);
  }
  for (Vertex u : back) d.set_relation(u, v, TwoType::N);
}

// d plus a vertex adjacent exactly to `neighbors`, oriented into Forb(T).
std::optional<Digraph> extend_over(const Digraph& d, const std::vector<Vertex>& neighbors,
                                   const ForbiddenSet& t) {
  Digraph ext = d;
  const Vertex x = ext.add_vertex();
  const std::size_t options = std::size_t{1} << neighbors.size();
  for (std::size_t mask = 0; mask < options; ++mask) {
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
      ext.set_relation(neighbors[i], x, (mask >> i) & 1U ? TwoType::EStar : TwoType::E);
    }
    if (!find_forbidden_through(ext, t, x)) return ext;
  }
  return std::nullopt;
}

std::optional<HomogeneityCertificate> conflict_among(const std::vector<Digraph>& orientations,
                                                     const std::vector<Vertex>& neighbors,
                                                     const ForbiddenSet& t) {
  std::optional<Digraph> good;
  std::optional<std::size_t> bad;
  for (std::size_t i = 0; i < orientations.size() && !(good && bad); ++i) {
    auto ext = extend_over(orientations[i], neighbors, t);
    if (ext) {
      if (!good) good = std::move(ext);
    } else if (!bad) {
      bad = i;
    }
  }
  if (!good || !bad) return std::nullopt;
  HomogeneityCertificate cert;
  cert.kind = HomogeneityCertificateKind::ExtensionConflict;
  cert.extension = *good;
  cert.extendable = good->induced([&] {
    std::vector<Vertex> keep(good->size() - 1);
    for (Vertex v = 0; v < keep.size(); ++v) keep[v] = v;
    return keep;
  }());
  cert.blocked = orientations[*bad];
  cert.neighbors = neighbors;
  return cert;
}

std::optional<HomogeneityCertificate> generic_conflict(const ForbiddenSet& t, std::size_t size) {
  const auto graphs = graphs_up_to_iso(size);
  auto found = parallel_map<std::optional<HomogeneityCertificate>>(
      graphs.size(), [&](std::size_t gi) -> std::optional<HomogeneityCertificate> {
        const Graph& g = graphs[gi];
        std::vector<Digraph> orientations;
        Digraph d(g.size());
        all_orientations(g, t, d, 0, orientations);
        if (orientations.size() < 2) return std::nullopt;
        for (std::size_t mask = 1; mask < (std::size_t{1} << size); ++mask) {
          std::vector<Vertex> neighbors;
          for (Vertex v = 0; v < size; ++v) {
            if ((mask >> v) & 1U) neighbors.push_back(v);
          }
          if (auto cert = conflict_among(orientations, neighbors, t)) return cert;
        }
        return std::nullopt;
      });
  for (auto& c : found) {
    if (c) return c;
  }
  return std::nullopt;
}

// Tournaments of Forb(T) on `size` vertices, with a new vertex adjacent to
// all of them.
std::optional<HomogeneityCertificate> clique_conflict(const ForbiddenSet& t, std::size_t size) {
  std::vector<Digraph> members;
  for (const Tournament& tour : tournaments_up_to_iso(size)) {
    if (in_forb(tour.digraph(), t)) members.push_back(tour.digraph());
  }
  std::vector<Vertex> all(size);
  for (Vertex v = 0; v < size; ++v) all[v] = v;
  const auto extendable = parallel_map<char>(members.size(), [&](std::size_t i) {
    return static_cast<char>(extend_over(members[i], all, t).has_value());
  });
  const auto good = std::find(extendable.begin(), extendable.end(), 1);
  const auto bad = std::find(extendable.begin(), extendable.end(), 0);
  if (good == extendable.end() || bad == extendable.end()) return std::nullopt;
  const std::vector<Digraph> pair = {members[static_cast<std::size_t>(good - extendable.begin())],
                                     members[static_cast<std::size_t>(bad - extendable.begin())]};
  return conflict_among(pair, all, t);
}

}  // namespace

std::optional<Digraph> realize_graph(const Graph& g, const ForbiddenSet& t) {
  Digraph d(g.size());
  if (orient_from(g, t, d, 0)) return d;
  return std::nullopt;
}

std::set<CanonicalCode> realizable_underlying_graphs(const ForbiddenSet& t, std::size_t m) {
  if (m == 0) throw PreconditionViolation("graph size bound must be at least 1");
  if (m > kMaxEvidenceScale) {
    throw BudgetExceeded("realizable graphs are enumerated up to " +
                         std::to_string(kMaxEvidenceScale) + " vertices");
  }
  std::set<CanonicalCode> out;
  for (std::size_t s = 1; s <= m; ++s) {
    const auto graphs = graphs_up_to_iso(s);
    const auto ok = parallel_map<char>(graphs.size(), [&](std::size_t i) {
      return static_cast<char>(realize_graph(graphs[i], t).has_value());
    });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (ok[i]) out.insert(canonical_code(graphs[i]));
    }
  }
  return out;
}

const char* to_string(GraphStatusKind k) {
  switch (k) {
    case GraphStatusKind::RandomGraphEvidence:
      return "RandomGraphEvidence";
    case GraphStatusKind::HensonGraphEvidence:
      return "HensonGraphEvidence";
    case GraphStatusKind::NotHomogeneous:
      return "NotHomogeneous";
  }
  return "?";
}

const char* to_string(HomogeneityCertificateKind k) {
  switch (k) {
    case HomogeneityCertificateKind::ExtensionConflict:
      return "extension-conflict";
    case HomogeneityCertificateKind::AgeMismatch:
      return "age-mismatch";
  }
  return "?";
}

GraphStatus classify_underlying_graph(const ForbiddenSet& t, std::size_t scale) {
  if (scale == 0 || scale > kMaxGraphScale) {
    throw BudgetExceeded("scale must lie in 1.." + std::to_string(kMaxGraphScale));
  }
  GraphStatus status;
  status.scale = scale;
  // A conflict needs a forbidden tournament through the new vertex, so
  // bases smaller than min_size - 1 cannot produce one.
  const std::size_t first = t.min_size() - 1;
  for (std::size_t s = std::max<std::size_t>(first, 1); s + 1 <= scale; ++s) {
    std::optional<HomogeneityCertificate> cert;
    if (s <= kGenericCertificateSize) cert = generic_conflict(t, s);
    if (!cert && s <= kCliqueCertificateSize) cert = clique_conflict(t, s);
    if (cert) {
      status.kind = GraphStatusKind::NotHomogeneous;
      status.certificate = std::move(cert);
      return status;
    }
  }

  if (scale > kMaxEvidenceScale) {
    throw BudgetExceeded("no certificate up to scale " + std::to_string(scale) +
                         " and evidence stops at " + std::to_string(kMaxEvidenceScale));
  }
  std::optional<std::size_t> clique;
  for (std::size_t s = 1; s <= scale && !clique; ++s) {
    if (!realize_graph(Graph::complete(s), t)) clique = s;
  }
  std::optional<Graph> missing;
  for (std::size_t s = 1; s <= scale && !missing; ++s) {
    const auto graphs = graphs_up_to_iso(s);
    const auto ok = parallel_map<char>(graphs.size(), [&](std::size_t i) {
      if (clique && graphs[i].has_clique(*clique)) return char{1};
      return static_cast<char>(realize_graph(graphs[i], t).has_value());
    });
    const auto it = std::find(ok.begin(), ok.end(), 0);
    if (it != ok.end()) missing = graphs[static_cast<std::size_t>(it - ok.begin())];
  }
  if (missing) {
    HomogeneityCertificate cert;
    cert.kind = HomogeneityCertificateKind::AgeMismatch;
    cert.missing_graph = std::move(*missing);
    cert.clique_bound = clique;
    status.kind = GraphStatusKind::NotHomogeneous;
    status.certificate = std::move(cert);
  } else if (clique) {
    status.kind = GraphStatusKind::HensonGraphEvidence;
    status.clique_bound = clique;
  } else {
    status.kind = GraphStatusKind::RandomGraphEvidence;
  }
  return status;
}

bool verify_homogeneity_certificate(const HomogeneityCertificate& cert, const ForbiddenSet& t) {
  if (cert.kind == HomogeneityCertificateKind::AgeMismatch) {
    const Graph& g = cert.missing_graph;
    if (realize_graph(g, t)) return false;
    if (cert.clique_bound) {
      // Least non-realizable clique, and g avoids it.
      const std::size_t n = *cert.clique_bound;
      if (realize_graph(Graph::complete(n), t)) return false;
      if (n > 1 && !realize_graph(Graph::complete(n - 1), t)) return false;
      if (g.has_clique(n)) return false;
    } else {
      // Every clique up to |g| is realizable.
      if (!realize_graph(Graph::complete(g.size()), t)) return false;
    }
    return true;
  }
  const std::size_t n = cert.extendable.size();
  if (cert.blocked.size() != n || cert.extension.size() != n + 1) return false;
  if (!in_forb(cert.extendable, t) || !in_forb(cert.blocked, t)) return false;
  if (!(underlying_graph(cert.extendable) == underlying_graph(cert.blocked))) return false;
  if (!in_forb(cert.extension, t)) return false;
  std::vector<Vertex> base(n);
  for (Vertex v = 0; v < n; ++v) base[v] = v;
  if (!(cert.extension.induced(base) == cert.extendable)) return false;
  for (Vertex v = 0; v < n; ++v) {
    const bool listed =
        std::find(cert.neighbors.begin(), cert.neighbors.end(), v) != cert.neighbors.end();
    if (cert.extension.adjacent(v, static_cast<Vertex>(n)) != listed) return false;
  }
  return !extend_over(cert.blocked, cert.neighbors, t).has_value();
}

const char* to_string(ReductNode n) {
  switch (n) {
    case ReductNode::AutDE:
      return "AutDE";
    case ReductNode::Minus:
      return "Minus";
    case ReductNode::Sw:
      return "Sw";
    case ReductNode::MinusSw:
      return "MinusSw";
    case ReductNode::AutGraph:
      return "AutGraph";
    case ReductNode::SwGamma:
      return "SwGamma";
    case ReductNode::MinusGamma:
      return "MinusGamma";
    case ReductNode::SwMinusGamma:
      return "SwMinusGamma";
    case ReductNode::SymD:
      return "SymD";
  }
  return "?";
}

bool reduct_below(ReductNode a, ReductNode b) {
  using R = ReductNode;
  // Covering pairs of the full lattice.
  static constexpr std::pair<R, R> kCovers[] = {
      {R::AutDE, R::Minus},          {R::AutDE, R::Sw},
      {R::Minus, R::MinusSw},        {R::Sw, R::MinusSw},
      {R::MinusSw, R::AutGraph},     {R::AutGraph, R::SwGamma},
      {R::AutGraph, R::MinusGamma},  {R::SwGamma, R::SwMinusGamma},
      {R::MinusGamma, R::SwMinusGamma}, {R::SwMinusGamma, R::SymD},
  };
  bool reach[kReductNodeCount][kReductNodeCount] = {};
  for (std::size_t i = 0; i < kReductNodeCount; ++i) reach[i][i] = true;
  for (const auto& [lo, hi] : kCovers) {
    reach[static_cast<std::size_t>(lo)][static_cast<std::size_t>(hi)] = true;
  }
  for (std::size_t k = 0; k < kReductNodeCount; ++k) {
    for (std::size_t i = 0; i < kReductNodeCount; ++i) {
      for (std::size_t j = 0; j < kReductNodeCount; ++j) {
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
      }
    }
  }
  return reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

std::vector<std::pair<ReductNode, ReductNode>> hasse_diagram(const std::vector<ReductNode>& nodes) {
  std::vector<std::pair<ReductNode, ReductNode>> out;
  for (ReductNode lo : nodes) {
    for (ReductNode hi : nodes) {
      if (lo == hi || !reduct_below(lo, hi)) continue;
      const bool covered = std::none_of(nodes.begin(), nodes.end(), [&](ReductNode mid) {
        return mid != lo && mid != hi && reduct_below(lo, mid) && reduct_below(mid, hi);
      });
      if (covered) out.emplace_back(lo, hi);
    }
  }
  return out;
}

ReductLattice classify_reducts(const ForbiddenSet& t, std::size_t scale) {
  using R = ReductNode;
  ReductLattice lattice;
  lattice.scale = scale;
  lattice.minus_exists = closed_under_minus(t);
  lattice.sw_exists = closed_under_sw(t);
  lattice.graph_status = classify_underlying_graph(t, scale);

  std::vector<R> nodes = {R::AutDE};
  if (lattice.minus_exists) nodes.push_back(R::Minus);
  if (lattice.sw_exists) nodes.push_back(R::Sw);
  if (lattice.minus_exists && lattice.sw_exists) nodes.push_back(R::MinusSw);
  switch (lattice.graph_status.kind) {
    case GraphStatusKind::RandomGraphEvidence:
      nodes.insert(nodes.end(), {R::AutGraph, R::SwGamma, R::MinusGamma, R::SwMinusGamma});
      break;
    case GraphStatusKind::HensonGraphEvidence:
      nodes.push_back(R::AutGraph);
      break;
    case GraphStatusKind::NotHomogeneous:
      lattice.maximal = nodes.back();
      break;
  }
  nodes.push_back(R::SymD);
  lattice.hasse_edges = hasse_diagram(nodes);
  lattice.nodes = std::move(nodes);
  return lattice;
}

}  // namespace henson
