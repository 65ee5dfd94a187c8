#pragma once

#include <cstddef>
#include <vector>

#include "henson/digraph.hpp"

namespace henson {

// One representative per isomorphism class, sorted by canonical code.
// Built by adding one vertex at a time and deduplicating canonical codes.
// Sizes beyond 9 are refused with BudgetExceeded.
std::vector<Tournament> tournaments_up_to_iso(std::size_t n);
std::vector<Graph> graphs_up_to_iso(std::size_t n);

// All tournaments on |t| + 1 vertices that contain t, up to isomorphism,
// obtained by attaching one new vertex (as vertex |t|) in every possible way.
std::vector<Tournament> one_point_extensions(const Tournament& t);

}  // namespace henson
