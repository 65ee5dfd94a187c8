#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "henson/digraph.hpp"
#include "henson/family.hpp"
#include "henson/forbidden.hpp"
#include "henson/fraisse.hpp"
#include "henson/lemmas.hpp"
#include "henson/reducts.hpp"

namespace henson {

using json = nlohmann::json;

// {"n": 3, "edges": [[0, 1], ...]}; vertices 0-based.
json encode(const Digraph& d);
Digraph decode_digraph(const json& j);

// {"tournaments": [<digraph>, ...]}. Decoding checks completeness and
// size >= 3 and names the offending member on failure (InvalidInput).
json encode(const ForbiddenSet& t);
ForbiddenSet decode_forbidden_set(const json& j);
ForbiddenSet parse_forbidden_set(std::string_view text);
ForbiddenSet read_forbidden_set(std::istream& in);

json encode(const Behavior& b);
json encode(const BehaviorContext& c);
json encode(const CaseReport& r);
json encode(const ExtensionReport& r);
json encode(const AntichainViolation& v);
json encode(const GraphStatus& s);
json encode(const ReductLattice& l);
json encode(const Blocker& b);
json encode(const MaximalityReport& r);
json encode(const DistinctionCertificate& c);

// `digraph name { 0 -> 1; ... }` with every vertex listed.
std::string to_dot(const Digraph& d, std::string_view name = "D");
// Hasse diagram, lower node pointing to the upper one.
std::string to_dot(const ReductLattice& l);

// One line: context, verdict, clause and a certificate summary.
std::string summarize(const CaseReport& r);

}  // namespace henson
