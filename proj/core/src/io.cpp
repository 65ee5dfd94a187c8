#include "henson/io.hpp"

#include <istream>
#include <sstream>

#include "henson/error.hpp"

namespace henson {

namespace {

json encode_vertices(const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(v);
  return out;
}

json encode_certificate(const ImpossibilityCertificate& c) {
  json j = {
      {"kind", to_string(c.kind)},
      {"member", c.member},
      {"member_order", encode_vertices(c.member_order)},
      {"witness", encode(c.witness.digraph())},
      {"image", encode(c.image)},
      {"forbidden", {{"member", c.forbidden.member},
                     {"embedding", encode_vertices(c.forbidden.embedding)}}},
  };
  if (c.center) j["center"] = *c.center;
  if (c.target) j["target"] = *c.target;
  if (c.rule) {
    j["rule"] = {{"into_center", to_string(c.rule->into_center)},
                 {"out_of_center", to_string(c.rule->out_of_center)}};
  }
  if (c.kind == CertificateKind::PowerIdentity) j["power"] = c.power;
  if (c.realization) {
    j["realization"] = {{"digraph", encode(c.realization->amalgam.digraph)},
                        {"anchor", c.realization->anchor},
                        {"constants", encode_vertices(c.realization->constants)}};
  }
  return j;
}

json encode_trace(const Trace& t) {
  json j = {
      {"kind", to_string(t.kind)},
      {"sample", encode(t.sample.digraph())},
      {"image", encode(t.image)},
  };
  if (t.center) j["center"] = *t.center;
  if (t.target) j["target"] = *t.target;
  if (t.kind == TraceKind::Composition) {
    json comp = json::array();
    for (const Behavior& b : t.composition) comp.push_back(encode(b));
    j["composition"] = std::move(comp);
    if (t.reduces_to) j["reduces_to"] = encode(*t.reduces_to);
    j["extra_cases"] = t.extra_cases;
  }
  if (!t.placements.empty()) j["placements"] = t.placements;
  return j;
}

json encode_graph(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.size()}, {"edges", std::move(edges)}};
}

}  // namespace

json encode(const Digraph& d) {
  json edges = json::array();
  for (const auto& [u, v] : d.edges()) edges.push_back({u, v});
  return {{"n", d.size()}, {"edges", std::move(edges)}};
}

Digraph decode_digraph(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw InvalidInput("digraph needs \"n\" and \"edges\"");
  }
  if (!j["n"].is_number_unsigned()) throw InvalidInput("\"n\" must be a non-negative integer");
  const std::size_t n = j["n"].get<std::size_t>();
  if (!j["edges"].is_array()) throw InvalidInput("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      throw InvalidInput("edge must be a pair of vertex indices");
    }
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return Digraph::from_edges(n, edges);
}

json encode(const ForbiddenSet& t) {
  json members = json::array();
  for (const Tournament& m : t.members()) members.push_back(encode(m.digraph()));
  return {{"tournaments", std::move(members)}};
}

ForbiddenSet decode_forbidden_set(const json& j) {
  if (!j.is_object() || !j.contains("tournaments") || !j["tournaments"].is_array()) {
    throw InvalidInput("forbidden set needs a \"tournaments\" array");
  }
  std::vector<Tournament> members;
  std::size_t index = 0;
  for (const json& m : j["tournaments"]) {
    try {
      Digraph d = decode_digraph(m);
      if (d.size() < 3) throw InvalidInput("fewer than 3 vertices");
      members.emplace_back(std::move(d));
    } catch (const InvalidInput& e) {
      throw InvalidInput("tournament " + std::to_string(index) + ": " + e.what());
    }
    ++index;
  }
  return ForbiddenSet(std::move(members));
}

ForbiddenSet parse_forbidden_set(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  return decode_forbidden_set(j);
}

ForbiddenSet read_forbidden_set(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_forbidden_set(buffer.str());
}

json encode(const Behavior& b) {
  return {{"N", to_string(b(TwoType::N))},
          {"E", to_string(b(TwoType::E))},
          {"E*", to_string(b(TwoType::EStar))},
          {"index", b.index()}};
}

json encode(const BehaviorContext& c) {
  json j = {{"kind", to_string(c.kind)}};
  if (c.order) j["order"] = to_string(*c.order);
  if (c.off_orbit) {
    j["off_orbit"] = {{"from", to_string(c.off_orbit->from)},
                      {"to", to_string(c.off_orbit->to)}};
  } else {
    j["behavior"] = encode(c.behavior);
  }
  if (c.above) j["above"] = encode(*c.above);
  return j;
}

json encode(const CaseReport& r) {
  json j = {{"context", encode(r.context)},
            {"verdict", to_string(r.verdict)},
            {"clause", r.clause}};
  if (r.certificate) j["certificate"] = encode_certificate(*r.certificate);
  if (r.trace) j["trace"] = encode_trace(*r.trace);
  return j;
}

json encode(const ExtensionReport& r) {
  json unmet = json::array();
  for (const UnmetDemand& u : r.unmet) {
    json links = json::array();
    for (Link l : u.demand.links) links.push_back(to_string(l));
    json item = {{"targets", encode_vertices(u.demand.targets)},
                 {"links", std::move(links)},
                 {"status", u.status == DemandStatus::missing ? "missing" : "forbidden"}};
    if (u.local) item["local"] = encode(*u.local);
    if (u.witness) {
      item["witness"] = {{"member", u.witness->member},
                         {"embedding", encode_vertices(u.witness->embedding)}};
    }
    unmet.push_back(std::move(item));
  }
  return {{"level", r.level},
          {"satisfied", r.satisfied},
          {"missing", r.missing()},
          {"forbidden", r.forbidden()},
          {"unmet", std::move(unmet)}};
}

json encode(const AntichainViolation& v) {
  return {{"smaller", v.smaller}, {"larger", v.larger},
          {"embedding", encode_vertices(v.embedding)}};
}

json encode(const GraphStatus& s) {
  json j = {{"kind", to_string(s.kind)}, {"scale", s.scale}};
  if (s.clique_bound) j["clique_bound"] = *s.clique_bound;
  if (s.certificate) {
    const HomogeneityCertificate& c = *s.certificate;
    json cert = {{"kind", to_string(c.kind)}};
    if (c.kind == HomogeneityCertificateKind::ExtensionConflict) {
      cert["extendable"] = encode(c.extendable);
      cert["blocked"] = encode(c.blocked);
      cert["neighbors"] = encode_vertices(c.neighbors);
      cert["extension"] = encode(c.extension);
    } else {
      cert["missing_graph"] = encode_graph(c.missing_graph);
      if (c.clique_bound) cert["clique_bound"] = *c.clique_bound;
    }
    j["certificate"] = std::move(cert);
  }
  return j;
}

json encode(const ReductLattice& l) {
  json nodes = json::array();
  for (ReductNode n : l.nodes) nodes.push_back(to_string(n));
  json edges = json::array();
  for (const auto& [lo, hi] : l.hasse_edges) edges.push_back({to_string(lo), to_string(hi)});
  json flags = {{"minus_exists", l.minus_exists}, {"sw_exists", l.sw_exists}};
  if (l.maximal) flags["maximal"] = to_string(*l.maximal);
  return {{"nodes", std::move(nodes)},
          {"hasse_edges", std::move(edges)},
          {"flags", std::move(flags)},
          {"graph_status", encode(l.graph_status)},
          {"scale", l.scale}};
}

json encode(const Blocker& b) {
  return {{"tournament", encode(b.tournament.digraph())},
          {"source", b.source},
          {"high_cycle_vertices", encode_vertices(b.high_cycle)},
          {"size", b.tournament.size()},
          {"examined", b.examined}};
}

json encode(const MaximalityReport& r) {
  json minus = {{"blocked", r.minus_blocked}};
  if (r.minus_member) minus["member"] = *r.minus_member;
  if (r.minus_sink) minus["sink"] = *r.minus_sink;
  json sw = {{"blocked", r.sw_blocked}};
  if (r.sw_witness) {
    sw["member"] = r.sw_witness->member;
    sw["vertex"] = r.sw_witness->vertex;
  }
  return {{"minus", std::move(minus)},
          {"sw", std::move(sw)},
          {"linear_orders", {{"embed", r.linear_orders_embed}, {"bound", r.linear_order_bound}}},
          {"extension_blocking",
           {{"holds", r.extension_blocking},
            {"blocker", encode(r.blocker.digraph())},
            {"extension_members", r.extension_members}}}};
}

json encode(const DistinctionCertificate& c) {
  return {{"n", c.n}, {"member_of", c.in_first ? "first" : "second"}, {"member", c.member}};
}

std::string to_dot(const Digraph& d, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (Vertex v = 0; v < d.size(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : d.edges()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const ReductLattice& l) {
  std::ostringstream out;
  out << "digraph reducts {\n  rankdir=BT;\n";
  for (ReductNode n : l.nodes) {
    out << "  " << to_string(n);
    if (l.maximal == n) out << " [peripheries=2]";
    out << ";\n";
  }
  for (const auto& [lo, hi] : l.hasse_edges) {
    out << "  " << to_string(lo) << " -> " << to_string(hi) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string summarize(const CaseReport& r) {
  std::string line = r.context.to_string() + "  " + to_string(r.verdict) + "  (" + r.clause + ")";
  if (r.certificate) {
    const auto& c = *r.certificate;
    line += "  " + std::string(to_string(c.kind)) + ": witness on " +
            std::to_string(c.witness.size()) + " vertices, " +
            std::to_string(c.witness.digraph().edge_count()) + " edges, image embeds member " +
            std::to_string(c.forbidden.member);
  } else if (r.trace) {
    line += "  trace: " + std::string(to_string(r.trace->kind));
    if (r.trace->reduces_to) line += " -> [" + r.trace->reduces_to->to_string() + "]";
    if (r.trace->extra_cases) line += " (+ other composites)";
  }
  return line;
}

}  // namespace henson
