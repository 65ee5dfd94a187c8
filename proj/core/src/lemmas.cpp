#include "henson/lemmas.hpp"

#include <algorithm>
#include <numeric>

#include "henson/error.hpp"
#include "henson/parallel.hpp"

namespace henson {

const char* to_string(Lemma l) {
  switch (l) {
    case Lemma::NoConstants:
      return "L-noconstants";
    case Lemma::OneOrbit:
      return "L-oneorbit";
    case Lemma::XLessThanY:
      return "L-xlessthany";
    case Lemma::XYInterdense:
      return "L-xyinterdense";
    case Lemma::Constants:
      return "L-constants";
  }
  return "?";
}

std::optional<Lemma> parse_lemma(std::string_view name) {
  for (Lemma l : {Lemma::NoConstants, Lemma::OneOrbit, Lemma::XLessThanY,
                  Lemma::XYInterdense, Lemma::Constants}) {
    if (name == to_string(l)) return l;
  }
  return std::nullopt;
}

const char* to_string(ContextKind k) {
  switch (k) {
    case ContextKind::NoConstants:
      return "no-constants";
    case ContextKind::OneIndependentOrbit:
      return "one-independent-orbit";
    case ContextKind::OrbitPair:
      return "orbit-pair";
    case ContextKind::ConstantStar:
      return "constant-star";
  }
  return "?";
}

const char* to_string(OrbitOrder o) {
  switch (o) {
    case OrbitOrder::Below:
      return "below";
    case OrbitOrder::Above:
      return "above";
    case OrbitOrder::Interdense:
      return "interdense";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Identity:
      return "Identity";
    case Verdict::GeneratesMinus:
      return "GeneratesMinus";
    case Verdict::GeneratesSw:
      return "GeneratesSw";
    case Verdict::DominatesGraphAut:
      return "DominatesGraphAut";
    case Verdict::FullSym:
      return "FullSym";
    case Verdict::Impossible:
      return "Impossible";
  }
  return "?";
}

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::EdgeDeletion:
      return "edge-deletion";
    case CertificateKind::PowerIdentity:
      return "power-identity";
    case CertificateKind::MissingClosure:
      return "missing-closure";
    case CertificateKind::StarPreimage:
      return "star-preimage";
    case CertificateKind::EdgeRestoration:
      return "edge-restoration";
  }
  return "?";
}

const char* to_string(TraceKind k) {
  switch (k) {
    case TraceKind::EdgeAlignment:
      return "edge-alignment";
    case TraceKind::EdgeDeletion:
      return "edge-deletion";
    case TraceKind::LinearOrderCollapse:
      return "linear-order-collapse";
    case TraceKind::Composition:
      return "composition";
    case TraceKind::SingleEdgeChange:
      return "single-edge-change";
  }
  return "?";
}

std::string BehaviorContext::to_string() const {
  std::string out = henson::to_string(kind);
  if (order) {
    out += '/';
    out += henson::to_string(*order);
  }
  if (off_orbit) {
    out += " orbit ";
    out += henson::to_string(off_orbit->from);
    out += '>';
    out += henson::to_string(off_orbit->to);
    return out;
  }
  out += " [" + behavior.to_string() + "]";
  if (above) out += " above [" + above->to_string() + "]";
  return out;
}

Digraph apply_context(const BehaviorContext& context, const OrderedDigraph& d,
                      std::optional<Vertex> center, std::optional<Vertex> target) {
  switch (context.kind) {
    case ContextKind::NoConstants:
    case ContextKind::OneIndependentOrbit:
      return apply_behavior(context.behavior, d);
    case ContextKind::OrbitPair:
      if (!center) throw InvalidInput("orbit-pair context needs a center");
      if (context.order == OrbitOrder::Interdense) {
        return apply_interdense(context.behavior, context.above.value(), d, *center);
      }
      return apply_star(context.behavior, d.digraph(), *center);
    case ContextKind::ConstantStar: {
      if (!center) throw InvalidInput("constant context needs a center");
      if (!context.off_orbit) return apply_star(context.behavior, d.digraph(), *center);
      if (!target) throw InvalidInput("off-orbit context needs a target");
      Digraph out = d.digraph();
      if (out.relation(*target, *center) == context.off_orbit->from) {
        out.set_relation(*target, *center, context.off_orbit->to);
      }
      return out;
    }
  }
  return d.digraph();
}

namespace {

constexpr TwoType kN = TwoType::N;
constexpr TwoType kE = TwoType::E;
constexpr TwoType kS = TwoType::EStar;
constexpr TwoType kTypes[] = {kN, kE, kS};

// Cap on the member orderings tried when searching for a witness.
constexpr std::size_t kMaxOrderings = 40320;

enum class Method : std::uint8_t {
  None,
  Flip,       // minus / sw: label depends on closure of T
  Alignment,
  Deletion,
  Collapse,
  ComposeTo,  // reduces to `targets` by applying twice
  Preimage,   // linear: pairs replaced by preimages
  Power,      // linear: bijective, W = b^(m-1)(member)
  Star,       // star preimage of a member
};

struct Classification {
  Verdict verdict = Verdict::Identity;
  std::string clause;
  Method method = Method::None;
  std::vector<Behavior> targets;
};

Behavior B(TwoType n, TwoType e, TwoType s) { return Behavior::make(n, e, s); }

std::vector<Behavior> alignment_set() { return {B(kN, kE, kE), B(kN, kS, kS)}; }
std::vector<Behavior> collapse_set() { return {B(kE, kE, kE), B(kS, kS, kS)}; }
std::vector<Behavior> deletion_set() {
  std::vector<Behavior> out;
  for (const Behavior& b : enumerate_behaviors()) {
    if (b(kN) == kN && (b(kE) == kN || b(kS) == kN)) out.push_back(b);
  }
  return out;
}

bool contains(const std::vector<Behavior>& set, const Behavior& b) {
  return std::find(set.begin(), set.end(), b) != set.end();
}

// Shared head of both tables: identity, flip, N fixed, non-edges swapped
// with edges.
std::optional<Classification> classify_common(const Behavior& b, bool star) {
  if (b == Behavior::identity()) return Classification{Verdict::Identity, "identity", Method::None, {}};
  if (b == Behavior::minus()) {
    return Classification{star ? Verdict::GeneratesSw : Verdict::GeneratesMinus,
                          star ? "switches every edge at the center"
                               : "reverses every edge",
                          Method::Flip,
                          {}};
  }
  if (b(kN) == kN) {
    if (contains(alignment_set(), b)) {
      return Classification{Verdict::DominatesGraphAut, "aligns every edge",
                            Method::Alignment, {}};
    }
    return Classification{Verdict::FullSym, "deletes edges", Method::Deletion, {}};
  }
  if (b(kE) == kN && b(kS) == kN) {
    return Classification{Verdict::DominatesGraphAut,
                          "exchanges edges and non-edges; twice aligns edges",
                          Method::ComposeTo, alignment_set()};
  }
  return std::nullopt;
}

// Behaviour on increasing pairs of an ordered copy.
Classification classify_linear(const Behavior& b) {
  if (auto c = classify_common(b, false)) return *c;
  // Non-edges become edges; read in the orientation where they become E.
  const Behavior c = b(kN) == kE ? b : dual(b);
  const TwoType e = c(kE);
  const TwoType s = c(kS);
  if (e == kE && s == kE) {
    return {Verdict::FullSym, "collapses to a linear order", Method::Collapse, {}};
  }
  if (e == kS && s == kS) {
    return {Verdict::FullSym, "twice collapses to a linear order", Method::ComposeTo,
            collapse_set()};
  }
  if (e == kE && s == kS) {
    return {Verdict::Impossible, "restores a deleted edge", Method::Preimage, {}};
  }
  if (e == kS && s == kE) {
    return {Verdict::Impossible, "twice restores a deleted edge, dually",
            Method::Preimage, {}};
  }
  if (e == kE && s == kN) {
    return {Verdict::FullSym, "twice collapses to a linear order", Method::ComposeTo,
            collapse_set()};
  }
  if (e == kN && s == kE) {
    return {Verdict::FullSym, "twice deletes edges", Method::ComposeTo, deletion_set()};
  }
  if (e == kS && s == kN) {
    return {Verdict::Impossible, "cycles the three types", Method::Power, {}};
  }
  // e == N, s == E*
  return {Verdict::Impossible, "exchanges non-edges with one edge type", Method::Power,
          {}};
}

// Behaviour on pairs (x, center) of a star.
Classification classify_star(const Behavior& b) {
  if (auto c = classify_common(b, true)) return *c;
  const Behavior c = b(kN) == kE ? b : dual(b);
  const TwoType e = c(kE);
  const TwoType s = c(kS);
  if (e == kS || s == kS) {
    return {Verdict::Impossible, "pulls a member back through the center",
            Method::Star, {}};
  }
  if (e == kE && s == kE) {
    return {Verdict::FullSym, "collapses to a linear order", Method::Collapse, {}};
  }
  if (e == kE && s == kN) {
    return {Verdict::FullSym, "twice collapses to a linear order", Method::ComposeTo,
            collapse_set()};
  }
  // e == N, s == E
  return {Verdict::FullSym, "twice deletes edges", Method::ComposeTo, deletion_set()};
}

// Calls fn(order) on permutations of 0..n-1 in lexicographic order until it
// returns true or the cap is reached.
template <typename Fn>
bool for_each_ordering(std::size_t n, Fn&& fn) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::size_t tried = 0;
  do {
    if (fn(std::as_const(order))) return true;
  } while (++tried < kMaxOrderings && std::next_permutation(order.begin(), order.end()));
  return false;
}

// Vertex i of the result is vertex order[i] of d.
Digraph reorder(const Digraph& d, const std::vector<Vertex>& order) {
  return d.induced(order);
}

std::size_t minimal_index(const ForbiddenSet& t) { return t.basis().front(); }

// A member with the pair of its first two vertices made non-adjacent; in
// Forb(T) because every member is at least as large.
Digraph base_sample(const ForbiddenSet& t) {
  Digraph d = t.members()[minimal_index(t)].digraph();
  d.set_relation(0, 1, kN);
  if (!in_forb(d, t)) {
    throw WitnessConstructionFailure("sample digraph unexpectedly outside Forb(T)");
  }
  return d;
}

bool is_linear_order(const Digraph& d) {
  return d.is_tournament() && three_cycles(d).empty();
}

// Moves `center` to the top (or bottom) of the order, keeping the others in
// place. Returns the relabelled digraph, its center and the new order.
struct Placed {
  OrderedDigraph digraph;
  Vertex center = 0;
  std::vector<Vertex> order;  // new vertex i was old vertex order[i]
};

Placed place_center(const Digraph& d, Vertex center, bool top) {
  std::vector<Vertex> order;
  if (!top) order.push_back(center);
  for (Vertex v = 0; v < d.size(); ++v) {
    if (v != center) order.push_back(v);
  }
  if (top) order.push_back(center);
  return {OrderedDigraph(reorder(d, order)), top ? d.size() - 1 : 0, order};
}

// ---------------------------------------------------------------------------
// Certificates

std::optional<ImpossibilityCertificate> try_certificate(ImpossibilityCertificate cert,
                                                        const BehaviorContext& ctx,
                                                        const ForbiddenSet& t) {
  cert.image = apply_context(ctx, cert.witness, cert.center, cert.target);
  if (!in_forb(cert.witness.digraph(), t)) return std::nullopt;
  auto hit = find_forbidden(cert.image, t);
  if (!hit) return std::nullopt;
  cert.forbidden = std::move(*hit);
  return cert;
}

ImpossibilityCertificate linear_preimage(const Behavior& b, const BehaviorContext& ctx,
                                         const ForbiddenSet& t, bool power) {
  const std::size_t m = minimal_index(t);
  const Digraph& member = t.members()[m].digraph();
  std::optional<ImpossibilityCertificate> found;
  for_each_ordering(member.size(), [&](const std::vector<Vertex>& order) {
    const Digraph target = reorder(member, order);
    Digraph w(target.size());
    bool deleted = false;
    for (Vertex u = 0; u < target.size(); ++u) {
      for (Vertex v = u + 1; v < target.size(); ++v) {
        const TwoType want = target.relation(u, v);
        std::vector<TwoType> pre;
        for (TwoType s : kTypes) {
          if (b(s) == want) pre.push_back(s);
        }
        if (pre.empty()) return false;
        TwoType pick = pre.front();
        const bool has_n = pre.front() == kN;
        if (has_n && pre.size() > 1) pick = deleted ? pre[1] : kN;
        if (pick == kN) deleted = true;
        w.set_relation(u, v, pick);
      }
    }
    ImpossibilityCertificate cert;
    cert.kind = power ? CertificateKind::PowerIdentity : CertificateKind::EdgeDeletion;
    cert.member = m;
    cert.member_order = order;
    cert.witness = OrderedDigraph(std::move(w));
    cert.power = power ? b.order() : 1;
    found = try_certificate(std::move(cert), ctx, t);
    return found.has_value();
  });
  if (!found) {
    throw WitnessConstructionFailure("no ordering of the minimal member yields a witness for " +
                                     ctx.to_string());
  }
  return *found;
}

ImpossibilityCertificate linear_missing_closure(const BehaviorContext& ctx,
                                                const ForbiddenSet& t) {
  const auto bad = minus_closure_violation(t);
  if (!bad) throw WitnessConstructionFailure("minus closure holds; nothing to certify");
  ImpossibilityCertificate cert;
  cert.kind = CertificateKind::MissingClosure;
  cert.member = *bad;
  cert.member_order.resize(t.members()[*bad].size());
  std::iota(cert.member_order.begin(), cert.member_order.end(), Vertex{0});
  cert.witness = OrderedDigraph(reverse(t.members()[*bad].digraph()));
  auto done = try_certificate(std::move(cert), ctx, t);
  if (!done) throw WitnessConstructionFailure("reversed member did not certify " + ctx.to_string());
  return *done;
}

// Star certificate before order placement: witness, center, provenance.
struct StarWitness {
  CertificateKind kind = CertificateKind::StarPreimage;
  std::size_t member = 0;
  Digraph witness;
  Vertex center = 0;
  std::optional<StarRule> rule;
};

TwoType fate_type(EdgeFate f) {
  switch (f) {
    case EdgeFate::none:
      return kN;
    case EdgeFate::in:
      return kE;
    case EdgeFate::out:
      return kS;
  }
  return kN;
}

StarWitness star_preimage(const Behavior& b, const ForbiddenSet& t) {
  const std::size_t m = minimal_index(t);
  const Tournament& member = t.members()[m];
  const EdgeFate fates[] = {EdgeFate::none, EdgeFate::in, EdgeFate::out};
  for (Vertex v = 0; v < member.size(); ++v) {
    for (EdgeFate into : fates) {
      if (b(fate_type(into)) != kE) continue;
      for (EdgeFate out : fates) {
        if (b(fate_type(out)) != kS) continue;
        const StarRule rule{into, out};
        Digraph w = transform_star(member, v, rule);
        if (!in_forb(w, t)) continue;
        if (in_forb(apply_star(b, w, v), t)) continue;
        return {CertificateKind::StarPreimage, m, std::move(w), v, rule};
      }
    }
  }
  throw WitnessConstructionFailure("no center and rule pull a member back through [" +
                                   b.to_string() + "]");
}

StarWitness star_missing_closure(const ForbiddenSet& t) {
  const auto bad = sw_closure_violation(t);
  if (!bad) throw WitnessConstructionFailure("switch closure holds; nothing to certify");
  const Vertex side[] = {bad->vertex};
  return {CertificateKind::MissingClosure, bad->member,
          switch_across(t.members()[bad->member].digraph(), side), bad->vertex,
          std::nullopt};
}

ImpossibilityCertificate place_star_certificate(const StarWitness& sw,
                                                const BehaviorContext& ctx,
                                                const ForbiddenSet& t, bool top) {
  Placed placed = place_center(sw.witness, sw.center, top);
  ImpossibilityCertificate cert;
  cert.kind = sw.kind;
  cert.member = sw.member;
  cert.member_order = placed.order;
  cert.witness = std::move(placed.digraph);
  cert.center = placed.center;
  cert.rule = sw.rule;
  cert.realization =
      realize_over_independent(cert.witness.digraph(), placed.center, default_constants());
  auto done = try_certificate(std::move(cert), ctx, t);
  if (!done) {
    throw WitnessConstructionFailure("star witness does not certify " + ctx.to_string());
  }
  return *done;
}

// ---------------------------------------------------------------------------
// Traces

Trace make_trace(TraceKind kind, OrderedDigraph sample, std::optional<Vertex> center,
                 const BehaviorContext& ctx) {
  Trace tr;
  tr.kind = kind;
  tr.sample = std::move(sample);
  tr.center = center;
  tr.image = apply_context(ctx, tr.sample, center, std::nullopt);
  return tr;
}

Trace composition_trace(const Behavior& b, const std::vector<Behavior>& targets,
                        bool star, const BehaviorContext& ctx, const ForbiddenSet& t) {
  Trace tr = make_trace(TraceKind::Composition, OrderedDigraph(base_sample(t)),
                        star ? std::optional<Vertex>(0) : std::nullopt, ctx);
  tr.composition = star ? std::vector<Behavior>{then(b, b)} : compose_behaviors(b, b);
  for (const Behavior& c : tr.composition) {
    if (contains(targets, c)) {
      if (!tr.reduces_to) tr.reduces_to = c;
    } else {
      tr.extra_cases = true;
    }
  }
  if (!tr.reduces_to) {
    throw WitnessConstructionFailure("applying twice does not reach the expected case for " +
                                     ctx.to_string());
  }
  return tr;
}

// Searches orderings (linear) or centers (star) of the base sample.
Trace searched_trace(TraceKind kind, bool star, const BehaviorContext& ctx,
                     const ForbiddenSet& t) {
  const Digraph base = base_sample(t);
  std::optional<Trace> found;
  if (star) {
    for (Vertex v = 0; v < base.size() && !found; ++v) {
      Trace tr = make_trace(kind, OrderedDigraph(base), v, ctx);
      if (trace_holds(ctx, tr)) found = std::move(tr);
    }
  } else {
    for_each_ordering(base.size(), [&](const std::vector<Vertex>& order) {
      Trace tr = make_trace(kind, OrderedDigraph(reorder(base, order)), std::nullopt, ctx);
      if (trace_holds(ctx, tr)) found = std::move(tr);
      return found.has_value();
    });
  }
  if (!found) {
    throw WitnessConstructionFailure(std::string("no sample exhibits ") + to_string(kind) +
                                     " for " + ctx.to_string());
  }
  return *found;
}

// A linear order on all but one vertex plus a center below... every
// collapsing star turns it into a transitive tournament.
Trace star_collapse_trace(const BehaviorContext& ctx, const ForbiddenSet& t) {
  const std::size_t k = t.members()[minimal_index(t)].size();
  Digraph d = Tournament::transitive(k - 1).digraph();
  const Vertex center = d.add_vertex();
  d.add_edge(center, 0);
  Trace tr = make_trace(TraceKind::LinearOrderCollapse, OrderedDigraph(std::move(d)),
                        center, ctx);
  if (!trace_holds(ctx, tr)) {
    throw WitnessConstructionFailure("star collapse failed for " + ctx.to_string());
  }
  return tr;
}

// ---------------------------------------------------------------------------
// Tables

CaseReport linear_report(const Behavior& b, ContextKind kind, const ForbiddenSet& t) {
  BehaviorContext ctx;
  ctx.kind = kind;
  ctx.behavior = b;
  Classification c = classify_linear(b);
  CaseReport r{ctx, c.verdict, c.clause, std::nullopt, std::nullopt};
  switch (c.method) {
    case Method::None:
    case Method::Star:
      break;
    case Method::Flip:
      if (!closed_under_minus(t)) {
        r.verdict = Verdict::Impossible;
        r.clause += "; T not closed under reversal";
        r.certificate = linear_missing_closure(ctx, t);
      }
      break;
    case Method::Alignment:
      r.trace = searched_trace(TraceKind::EdgeAlignment, false, ctx, t);
      break;
    case Method::Deletion:
      r.trace = searched_trace(TraceKind::EdgeDeletion, false, ctx, t);
      break;
    case Method::Collapse:
      r.trace = searched_trace(TraceKind::LinearOrderCollapse, false, ctx, t);
      break;
    case Method::ComposeTo:
      r.trace = composition_trace(b, c.targets, false, ctx, t);
      break;
    case Method::Preimage:
      r.certificate = linear_preimage(b, ctx, t, false);
      break;
    case Method::Power:
      r.certificate = linear_preimage(b, ctx, t, true);
      break;
  }
  return r;
}

// Everything about one star behaviour that does not depend on placement.
struct StarAnalysis {
  Behavior behavior;
  Classification cls;
  std::optional<StarWitness> witness;  // Impossible
};

StarAnalysis analyse_star(const Behavior& b, const ForbiddenSet& t) {
  StarAnalysis a{b, classify_star(b), std::nullopt};
  if (a.cls.method == Method::Flip && !closed_under_sw(t)) {
    a.cls.verdict = Verdict::Impossible;
    a.cls.clause += "; T not closed under switching";
    a.witness = star_missing_closure(t);
  } else if (a.cls.method == Method::Star) {
    a.witness = star_preimage(b, t);
  }
  return a;
}

// Report for a star context whose only behaviour is `a` (center on top or
// bottom of the order).
CaseReport star_report(const StarAnalysis& a, BehaviorContext ctx, const ForbiddenSet& t,
                       bool top) {
  CaseReport r{ctx, a.cls.verdict, a.cls.clause, std::nullopt, std::nullopt};
  if (a.witness) {
    r.certificate = place_star_certificate(*a.witness, ctx, t, top);
    return r;
  }
  switch (a.cls.method) {
    case Method::Alignment:
      r.trace = searched_trace(TraceKind::EdgeAlignment, true, ctx, t);
      break;
    case Method::Deletion:
      r.trace = searched_trace(TraceKind::EdgeDeletion, true, ctx, t);
      break;
    case Method::Collapse:
      r.trace = star_collapse_trace(ctx, t);
      break;
    case Method::ComposeTo:
      r.trace = composition_trace(a.behavior, a.cls.targets, true, ctx, t);
      break;
    default:
      break;
  }
  return r;
}

int severity(Verdict v) {
  switch (v) {
    case Verdict::Impossible:
      return 3;
    case Verdict::FullSym:
      return 2;
    case Verdict::DominatesGraphAut:
      return 1;
    default:
      return 0;
  }
}

// Star context equivalent to one side of an interdense pair: the center is
// placed so that every other vertex falls on that side.
BehaviorContext side_context(const Behavior& b) {
  BehaviorContext side;
  side.kind = ContextKind::OrbitPair;
  side.order = OrbitOrder::Below;
  side.behavior = b;
  return side;
}

// One behaviour is the identity and the other switches: find a digraph and
// a center position where exactly one edge changes direction.
Trace mixed_switch_trace(const BehaviorContext& ctx, const ForbiddenSet& t) {
  const Digraph base = base_sample(t);
  const std::size_t n = base.size();
  for (Vertex v = 0; v < n; ++v) {
    std::optional<Trace> first;
    std::vector<std::size_t> placements;
    for (std::size_t pos = 0; pos < n; ++pos) {
      std::vector<Vertex> order;
      for (Vertex u = 0; u < n; ++u) {
        if (u != v) order.push_back(u);
      }
      order.insert(order.begin() + static_cast<std::ptrdiff_t>(pos), v);
      Trace tr = make_trace(TraceKind::SingleEdgeChange,
                            OrderedDigraph(reorder(base, order)), pos, ctx);
      if (!trace_holds(ctx, tr)) continue;
      placements.push_back(pos);
      if (!first) first = std::move(tr);
    }
    if (first) {
      first->placements = std::move(placements);
      return *first;
    }
  }
  throw WitnessConstructionFailure("no placement changes exactly one edge for " +
                                   ctx.to_string());
}

CaseReport interdense_report(const StarAnalysis& below, const StarAnalysis& above,
                             const ForbiddenSet& t) {
  BehaviorContext ctx;
  ctx.kind = ContextKind::OrbitPair;
  ctx.order = OrbitOrder::Interdense;
  ctx.behavior = below.behavior;
  ctx.above = above.behavior;

  const int sb = severity(below.cls.verdict);
  const int sa = severity(above.cls.verdict);
  if (sb > 0 || sa > 0) {
    // The worse side decides; ties go to the side below the center.
    const bool use_below = sb >= sa;
    const StarAnalysis& side = use_below ? below : above;
    CaseReport part = star_report(side, side_context(side.behavior), t, use_below);
    CaseReport r{ctx, side.cls.verdict,
                 std::string(use_below ? "below: " : "above: ") + side.cls.clause,
                 std::nullopt, std::nullopt};
    if (part.certificate) {
      r.certificate = place_star_certificate(*side.witness, ctx, t, use_below);
    }
    if (part.trace) {
      Trace tr = *part.trace;
      // Same sample; only the side that applies matters once the center
      // sits at the extreme of the order.
      if (tr.center) {
        Placed placed = place_center(tr.sample.digraph(), *tr.center, use_below);
        tr.sample = std::move(placed.digraph);
        tr.center = placed.center;
      }
      tr.image = apply_context(ctx, tr.sample, tr.center, std::nullopt);
      r.trace = std::move(tr);
    }
    return r;
  }
  const bool below_id = below.cls.verdict == Verdict::Identity;
  const bool above_id = above.cls.verdict == Verdict::Identity;
  if (below_id && above_id) {
    return {ctx, Verdict::Identity, "preserves edges and non-edges between the orbits",
            std::nullopt, std::nullopt};
  }
  if (!below_id && !above_id) {
    return {ctx, Verdict::GeneratesSw, "switches every edge between the orbits",
            std::nullopt, std::nullopt};
  }
  CaseReport r{ctx, Verdict::DominatesGraphAut,
               "switches on one side only; a single edge changes direction", std::nullopt,
               std::nullopt};
  r.trace = mixed_switch_trace(ctx, t);
  return r;
}

std::vector<CaseReport> constants_table(const ForbiddenSet& t) {
  std::vector<CaseReport> out = parallel_map<CaseReport>(27, [&](std::size_t i) {
    BehaviorContext ctx;
    ctx.kind = ContextKind::ConstantStar;
    ctx.behavior = Behavior::from_index(i);
    return star_report(analyse_star(ctx.behavior, t), ctx, t, true);
  });

  const std::pair<TwoType, TwoType> changes[] = {
      {kE, kS}, {kE, kN}, {kS, kE}, {kS, kN}, {kN, kE}, {kN, kS}};
  for (const auto& [from, to] : changes) {
    BehaviorContext ctx;
    ctx.kind = ContextKind::ConstantStar;
    ctx.off_orbit = OffOrbitChange{from, to};
    if (from == kN) {
      // Delete the member edge that the constant would put back.
      const std::size_t m = minimal_index(t);
      const Digraph& member = t.members()[m].digraph();
      std::optional<ImpossibilityCertificate> cert;
      for (Vertex c = 0; c < member.size() && !cert; ++c) {
        for (Vertex x = 0; x < member.size() && !cert; ++x) {
          if (x == c || member.relation(x, c) != to) continue;
          Digraph w = member;
          w.set_relation(x, c, kN);
          Placed placed = place_center(w, c, true);
          ImpossibilityCertificate attempt;
          attempt.kind = CertificateKind::EdgeRestoration;
          attempt.member = m;
          attempt.member_order = placed.order;
          attempt.center = placed.center;
          attempt.target = static_cast<Vertex>(
              std::find(placed.order.begin(), placed.order.end(), x) - placed.order.begin());
          attempt.witness = std::move(placed.digraph);
          attempt.realization = realize_over_independent(attempt.witness.digraph(),
                                                         placed.center, default_constants());
          cert = try_certificate(std::move(attempt), ctx, t);
        }
      }
      if (!cert) {
        throw WitnessConstructionFailure("no member edge certifies " + ctx.to_string());
      }
      out.push_back({ctx, Verdict::Impossible, "adds one edge to an otherwise fixed digraph",
                     std::move(cert), std::nullopt});
      continue;
    }
    const bool reversal = to != kN;
    CaseReport r{ctx, reversal ? Verdict::DominatesGraphAut : Verdict::FullSym,
                 reversal ? "reverses exactly one edge" : "deletes exactly one edge",
                 std::nullopt, std::nullopt};
    const Digraph base = base_sample(t);
    for (Vertex c = 0; c < base.size() && !r.trace; ++c) {
      for (Vertex x = 0; x < base.size() && !r.trace; ++x) {
        if (x == c || base.relation(x, c) != from) continue;
        Trace tr;
        tr.kind = TraceKind::SingleEdgeChange;
        tr.sample = OrderedDigraph(base);
        tr.center = c;
        tr.target = x;
        tr.image = apply_context(ctx, tr.sample, c, x);
        if (trace_holds(ctx, tr)) r.trace = std::move(tr);
      }
    }
    if (!r.trace) throw WitnessConstructionFailure("no sample edge for " + ctx.to_string());
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<CaseReport> verify_lemma_table(Lemma lemma, const ForbiddenSet& t) {
  switch (lemma) {
    case Lemma::NoConstants:
    case Lemma::OneOrbit: {
      const ContextKind kind = lemma == Lemma::NoConstants ? ContextKind::NoConstants
                                                           : ContextKind::OneIndependentOrbit;
      return parallel_map<CaseReport>(
          27, [&](std::size_t i) { return linear_report(Behavior::from_index(i), kind, t); });
    }
    case Lemma::XLessThanY: {
      const auto analyses = parallel_map<StarAnalysis>(
          27, [&](std::size_t i) { return analyse_star(Behavior::from_index(i), t); });
      return parallel_map<CaseReport>(54, [&](std::size_t i) {
        const bool below = i < 27;
        BehaviorContext ctx;
        ctx.kind = ContextKind::OrbitPair;
        ctx.order = below ? OrbitOrder::Below : OrbitOrder::Above;
        ctx.behavior = Behavior::from_index(i % 27);
        // X below Y puts the point of Y above every vertex of X.
        return star_report(analyses[i % 27], ctx, t, below);
      });
    }
    case Lemma::XYInterdense: {
      const auto analyses = parallel_map<StarAnalysis>(
          27, [&](std::size_t i) { return analyse_star(Behavior::from_index(i), t); });
      return parallel_map<CaseReport>(729, [&](std::size_t i) {
        return interdense_report(analyses[i / 27], analyses[i % 27], t);
      });
    }
    case Lemma::Constants:
      return constants_table(t);
  }
  return {};
}

bool trace_holds(const BehaviorContext& ctx, const Trace& tr) {
  const Digraph& s = tr.sample.digraph();
  const Digraph& img = tr.image;
  if (s.size() != img.size()) return false;
  if (apply_context(ctx, tr.sample, tr.center, tr.target) != img) return false;
  const std::size_t n = s.size();
  const bool star = tr.center.has_value() && ctx.kind != ContextKind::NoConstants &&
                    ctx.kind != ContextKind::OneIndependentOrbit;
  auto at_stake = [&](Vertex u, Vertex v) {
    return !star || u == *tr.center || v == *tr.center;
  };
  switch (tr.kind) {
    case TraceKind::EdgeAlignment: {
      if (!(underlying_graph(s) == underlying_graph(img))) return false;
      // Linear: every edge forward or every edge backward. Star: every edge
      // at the center points the same way.
      int direction = 0;
      bool any = false;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (!at_stake(u, v)) {
            if (s.relation(u, v) != img.relation(u, v)) return false;
            continue;
          }
          const TwoType r = star ? img.relation(u == *tr.center ? v : u, *tr.center)
                                 : img.relation(u, v);
          if (r == kN) continue;
          const int d = r == kE ? 1 : -1;
          if (direction != 0 && d != direction) return false;
          direction = d;
          any = true;
        }
      }
      return any;
    }
    case TraceKind::EdgeDeletion: {
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (!s.adjacent(u, v) && img.adjacent(u, v)) return false;
        }
      }
      return img.edge_count() < s.edge_count();
    }
    case TraceKind::LinearOrderCollapse:
      return is_linear_order(img);
    case TraceKind::Composition: {
      if (!tr.reduces_to) return false;
      const Behavior& b = ctx.behavior;
      if (!contains(tr.composition, *tr.reduces_to)) return false;
      if (ctx.kind == ContextKind::NoConstants || ctx.kind == ContextKind::OneIndependentOrbit) {
        return compose_behaviors(b, b) == tr.composition;
      }
      // Interdense: the composite of whichever side decided.
      if (tr.composition.size() != 1) return false;
      return tr.composition.front() == then(b, b) ||
             (ctx.above && tr.composition.front() == then(*ctx.above, *ctx.above));
    }
    case TraceKind::SingleEdgeChange: {
      std::size_t changed = 0;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (s.relation(u, v) == img.relation(u, v)) continue;
          ++changed;
          if (!s.adjacent(u, v)) return false;  // must act on an edge
        }
      }
      return changed == 1;
    }
  }
  return false;
}

bool reverify(const CaseReport& report, const ForbiddenSet& t) {
  if (report.verdict == Verdict::Impossible) {
    if (!report.certificate) return false;
    const auto& cert = *report.certificate;
    if (!in_forb(cert.witness.digraph(), t)) return false;
    const Digraph image = apply_context(report.context, cert.witness, cert.center, cert.target);
    if (image != cert.image || in_forb(image, t)) return false;
    if (cert.forbidden.member >= t.members().size()) return false;
    const Tournament& m = t.members()[cert.forbidden.member];
    if (cert.forbidden.embedding.size() != m.size()) return false;
    for (const auto& [u, v] : m.digraph().edges()) {
      if (!image.has_edge(cert.forbidden.embedding[u], cert.forbidden.embedding[v])) return false;
    }
    if (cert.realization && !in_forb(cert.realization->amalgam.digraph, t)) return false;
    return true;
  }
  if (report.verdict == Verdict::GeneratesMinus && !closed_under_minus(t)) return false;
  if (report.verdict == Verdict::GeneratesSw && !closed_under_sw(t)) return false;
  if (report.trace) return trace_holds(report.context, *report.trace);
  return true;
}

}  // namespace henson
