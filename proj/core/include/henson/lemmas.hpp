#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "henson/behavior.hpp"
#include "henson/digraph.hpp"
#include "henson/forbidden.hpp"

namespace henson {

// The case analyses that can be replayed.
enum class Lemma : std::uint8_t {
  NoConstants,   // behaviour on increasing pairs of the ordered digraph
  OneOrbit,      // the same, inside an independent orbit
  XLessThanY,    // star between an independent orbit and a point of an
                 // orbit lying entirely above or below it
  XYInterdense,  // star between interdense orbits, one behaviour per side
  Constants,     // star around a constant
};

const char* to_string(Lemma l);  // "L-noconstants", ...
std::optional<Lemma> parse_lemma(std::string_view name);

enum class ContextKind : std::uint8_t {
  NoConstants,
  OneIndependentOrbit,
  OrbitPair,
  ConstantStar,
};

// Where the independent orbit X sits relative to the other orbit.
enum class OrbitOrder : std::uint8_t { Below, Above, Interdense };

const char* to_string(ContextKind k);
const char* to_string(OrbitOrder o);

// For constants: the relation between a constant and one whole orbit
// changes from `from` to `to` (read on pairs (x, constant)), while the
// constant's star on the other orbits behaves like the identity.
struct OffOrbitChange {
  TwoType from = TwoType::N;
  TwoType to = TwoType::N;
};

struct BehaviorContext {
  ContextKind kind = ContextKind::NoConstants;
  std::optional<OrbitOrder> order;  // OrbitPair only
  // Increasing pairs (NoConstants, OneIndependentOrbit); pairs (x, center)
  // for the star contexts; pairs with x below the center for Interdense.
  Behavior behavior;
  std::optional<Behavior> above;  // Interdense: pairs with x above the center
  std::optional<OffOrbitChange> off_orbit;

  std::string to_string() const;
};

enum class Verdict : std::uint8_t {
  Identity,
  GeneratesMinus,
  GeneratesSw,
  DominatesGraphAut,
  FullSym,
  Impossible,
};

const char* to_string(Verdict v);

enum class CertificateKind : std::uint8_t {
  EdgeDeletion,     // a member with pairs replaced by preimages
  PowerIdentity,    // bijective behaviour: b^(m-1) of an ordered member
  MissingClosure,   // reversal or switch of a member that escapes T
  StarPreimage,     // member rewritten around a star center
  EdgeRestoration,  // member minus one edge; the constant adds it back
};

const char* to_string(CertificateKind k);

// W is in Forb(T) but the context sends it onto a digraph embedding a
// member of T.
struct ImpossibilityCertificate {
  CertificateKind kind = CertificateKind::EdgeDeletion;
  std::size_t member = 0;  // the member of T the construction started from
  // Vertex i of the witness comes from vertex member_order[i] of the member.
  std::vector<Vertex> member_order;
  OrderedDigraph witness;
  std::optional<Vertex> center;
  std::optional<Vertex> target;  // off-orbit pair (target, center)
  std::optional<StarRule> rule;
  std::size_t power = 1;  // PowerIdentity: order of the behaviour
  Digraph image;
  ForbiddenWitness forbidden;  // into `image`
  // Star contexts: the witness glued to the constants over its center.
  std::optional<Realization> realization;
};

enum class TraceKind : std::uint8_t {
  EdgeAlignment,        // every edge at stake ends up pointing one way
  EdgeDeletion,         // edges lost, non-edges kept
  LinearOrderCollapse,  // the image is a transitive tournament
  Composition,          // applying the behaviour twice lands in a known case
  SingleEdgeChange,     // exactly one pair changes
};

const char* to_string(TraceKind k);

// Finite trace behind a DominatesGraphAut or FullSym label.
struct Trace {
  TraceKind kind = TraceKind::EdgeAlignment;
  OrderedDigraph sample;
  std::optional<Vertex> center;
  std::optional<Vertex> target;
  Digraph image;
  std::vector<Behavior> composition;  // Composition: candidate composites
  std::optional<Behavior> reduces_to;
  // Composition: the candidate set also contains behaviours outside the
  // claimed target cases.
  bool extra_cases = false;
  // Interdense SingleEdgeChange: center positions in the order that yield
  // exactly one changed edge.
  std::vector<std::size_t> placements;
};

struct CaseReport {
  BehaviorContext context;
  Verdict verdict = Verdict::Identity;
  std::string clause;  // which shape of the case analysis applied
  std::optional<ImpossibilityCertificate> certificate;
  std::optional<Trace> trace;
};

// One report per behaviour (per context). Report order: behaviour index;
// XLessThanY lists Below then Above; XYInterdense enumerates
// (below, above) pairs with `below` major; Constants lists the 27 star
// behaviours and then the six off-orbit changes.
// Throws WitnessConstructionFailure when a promised certificate cannot be
// built.
std::vector<CaseReport> verify_lemma_table(Lemma lemma, const ForbiddenSet& t);

// The context applied to an ordered digraph (center/target as recorded).
Digraph apply_context(const BehaviorContext& context, const OrderedDigraph& d,
                      std::optional<Vertex> center, std::optional<Vertex> target);

// Impossible: witness in Forb(T), recomputed image equal to the stored one
// and outside Forb(T), realization (if any) in Forb(T). Traces: the
// recorded property holds. Other verdicts: true.
bool reverify(const CaseReport& report, const ForbiddenSet& t);
bool trace_holds(const BehaviorContext& context, const Trace& trace);

}  // namespace henson
