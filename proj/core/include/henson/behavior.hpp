#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "henson/digraph.hpp"
#include "henson/fraisse.hpp"

namespace henson {

// Map from 2-types to 2-types, read on increasing pairs (u < v): the pair
// of type t is sent to a pair of type image(t). Decreasing pairs follow:
// the pair (v, u) of type t* is sent to image(t)*.
struct Behavior {
  std::array<TwoType, 3> image{TwoType::N, TwoType::E, TwoType::EStar};

  constexpr TwoType operator()(TwoType t) const {
    return image[static_cast<std::size_t>(t)];
  }

  // image(N) * 9 + image(E) * 3 + image(E*); the identity is 5.
  constexpr std::size_t index() const {
    return static_cast<std::size_t>(image[0]) * 9 +
           static_cast<std::size_t>(image[1]) * 3 +
           static_cast<std::size_t>(image[2]);
  }
  static constexpr Behavior from_index(std::size_t i) {
    return Behavior{{static_cast<TwoType>(i / 9 % 3),
                     static_cast<TwoType>(i / 3 % 3),
                     static_cast<TwoType>(i % 3)}};
  }
  static constexpr Behavior make(TwoType n, TwoType e, TwoType estar) {
    return Behavior{{n, e, estar}};
  }

  static constexpr Behavior identity() { return from_index(5); }
  // Reverses every edge.
  static constexpr Behavior minus() {
    return make(TwoType::N, TwoType::EStar, TwoType::E);
  }

  bool is_bijective() const;
  // Least m >= 1 with the m-fold composite equal to the identity; 0 when b
  // is not a bijection.
  std::size_t order() const;
  // "N>N E>E* E*>E"
  std::string to_string() const;

  friend constexpr bool operator==(const Behavior&, const Behavior&) = default;
};

// The same map seen after exchanging E and E* everywhere:
// dual(b)(t) = b(t*)*.
Behavior dual(const Behavior& b);
// Plain composite, first `first`, then `second`.
Behavior then(const Behavior& first, const Behavior& second);

// All 27 behaviours in index order.
std::vector<Behavior> enumerate_behaviors();

// Increasing pairs (u, v) of d get relation b(rel(u, v)).
Digraph apply_behavior(const Behavior& b, const OrderedDigraph& d);

// Pairs (x, center) get relation b(rel(x, center)); all other pairs keep
// their relation.
Digraph apply_star(const Behavior& b, const Digraph& d, Vertex center);

// Star around `center` whose behaviour depends on the order: vertices below
// the center use `below`, vertices above it use `above`.
Digraph apply_interdense(const Behavior& below, const Behavior& above,
                         const OrderedDigraph& d, Vertex center);

// Behaviours of "apply first, re-embed the image with either orientation of
// the order, apply second": for each source type t the composite is either
// second(first(t)) or second(first(t)*)*. Sorted by index, deduplicated.
std::vector<Behavior> compose_behaviors(const Behavior& second,
                                        const Behavior& first);

// Fate of an edge at the star center.
enum class EdgeFate : std::uint8_t { none, in, out };

const char* to_string(EdgeFate f);

struct StarRule {
  EdgeFate into_center = EdgeFate::in;
  EdgeFate out_of_center = EdgeFate::out;
  friend bool operator==(const StarRule&, const StarRule&) = default;
};

// Rewrites the edges meeting v: an edge x -> v becomes rule.into_center
// (in: x -> v, out: v -> x, none: removed) and an edge v -> x becomes
// rule.out_of_center. Other edges are untouched.
Digraph transform_star(const Tournament& t, Vertex v, const StarRule& rule);

// Vertices standing for the constants, together with the anchor whose
// relations to them are prescribed.
struct ConstantsPart {
  Digraph digraph;
  Vertex anchor = 0;
};

// An anchor below one constant: anchor -> constant.
ConstantsPart default_constants();

struct Realization {
  Amalgam amalgam;
  Vertex anchor = 0;  // image of a0, equal to a0
  // Amalgam vertices of the constants (everything in the constants part
  // other than its anchor), in constants-part order.
  std::vector<Vertex> constants;
};

// Free amalgam of a and the constants part over a0 ~ anchor; the rest of a
// is non-adjacent to the constants.
Realization realize_over_independent(const Digraph& a, Vertex a0,
                                     const ConstantsPart& constants);

}  // namespace henson
