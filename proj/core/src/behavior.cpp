#include "henson/behavior.hpp"

#include <algorithm>

#include "henson/error.hpp"

namespace henson {

bool Behavior::is_bijective() const {
  return image[0] != image[1] && image[0] != image[2] && image[1] != image[2];
}

std::size_t Behavior::order() const {
  if (!is_bijective()) return 0;
  Behavior power = *this;
  for (std::size_t m = 1; m <= 6; ++m) {
    if (power == identity()) return m;
    power = then(power, *this);
  }
  return 0;  // unreachable for a permutation of three points
}

std::string Behavior::to_string() const {
  std::string out;
  const TwoType sources[] = {TwoType::N, TwoType::E, TwoType::EStar};
  for (TwoType s : sources) {
    if (!out.empty()) out += ' ';
    out += henson::to_string(s);
    out += '>';
    out += henson::to_string((*this)(s));
  }
  return out;
}

Behavior dual(const Behavior& b) {
  return Behavior::make(starred(b(TwoType::N)), starred(b(TwoType::EStar)),
                        starred(b(TwoType::E)));
}

Behavior then(const Behavior& first, const Behavior& second) {
  return Behavior::make(second(first(TwoType::N)), second(first(TwoType::E)),
                        second(first(TwoType::EStar)));
}

std::vector<Behavior> enumerate_behaviors() {
  std::vector<Behavior> all;
  all.reserve(27);
  for (std::size_t i = 0; i < 27; ++i) all.push_back(Behavior::from_index(i));
  return all;
}

Digraph apply_behavior(const Behavior& b, const OrderedDigraph& od) {
  const Digraph& d = od.digraph();
  Digraph out(d.size());
  for (Vertex u = 0; u < d.size(); ++u) {
    for (Vertex v = u + 1; v < d.size(); ++v) {
      out.set_relation(u, v, b(d.relation(u, v)));
    }
  }
  return out;
}

Digraph apply_star(const Behavior& b, const Digraph& d, Vertex center) {
  if (center >= d.size()) throw InvalidInput("star center out of range");
  Digraph out = d;
  for (Vertex x = 0; x < d.size(); ++x) {
    if (x != center) out.set_relation(x, center, b(d.relation(x, center)));
  }
  return out;
}

Digraph apply_interdense(const Behavior& below, const Behavior& above,
                         const OrderedDigraph& od, Vertex center) {
  const Digraph& d = od.digraph();
  if (center >= d.size()) throw InvalidInput("star center out of range");
  Digraph out = d;
  for (Vertex x = 0; x < d.size(); ++x) {
    if (x == center) continue;
    const Behavior& b = x < center ? below : above;
    out.set_relation(x, center, b(d.relation(x, center)));
  }
  return out;
}

std::vector<Behavior> compose_behaviors(const Behavior& second,
                                        const Behavior& first) {
  std::array<std::array<TwoType, 2>, 3> options{};
  for (std::size_t s = 0; s < 3; ++s) {
    const TwoType mid = first(static_cast<TwoType>(s));
    options[s] = {second(mid), starred(second(starred(mid)))};
  }
  std::vector<Behavior> result;
  for (int mask = 0; mask < 8; ++mask) {
    result.push_back(Behavior::make(options[0][mask & 1],
                                    options[1][(mask >> 1) & 1],
                                    options[2][(mask >> 2) & 1]));
  }
  std::sort(result.begin(), result.end(), [](const Behavior& a, const Behavior& b) {
    return a.index() < b.index();
  });
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

const char* to_string(EdgeFate f) {
  switch (f) {
    case EdgeFate::none:
      return "none";
    case EdgeFate::in:
      return "in";
    case EdgeFate::out:
      return "out";
  }
  return "?";
}

Digraph transform_star(const Tournament& t, Vertex v, const StarRule& rule) {
  const Digraph& d = t.digraph();
  if (v >= d.size()) throw InvalidInput("star center out of range");
  Digraph out = d;
  for (Vertex x = 0; x < d.size(); ++x) {
    if (x == v) continue;
    const EdgeFate fate = d.has_edge(x, v) ? rule.into_center : rule.out_of_center;
    switch (fate) {
      case EdgeFate::none:
        out.set_relation(x, v, TwoType::N);
        break;
      case EdgeFate::in:
        out.set_relation(x, v, TwoType::E);
        break;
      case EdgeFate::out:
        out.set_relation(x, v, TwoType::EStar);
        break;
    }
  }
  return out;
}

ConstantsPart default_constants() {
  ConstantsPart part{Digraph(2), 0};
  part.digraph.add_edge(0, 1);
  return part;
}

Realization realize_over_independent(const Digraph& a, Vertex a0,
                                     const ConstantsPart& constants) {
  if (a0 >= a.size()) throw InvalidInput("distinguished vertex out of range");
  if (constants.anchor >= constants.digraph.size()) {
    throw InvalidInput("constants anchor out of range");
  }
  const Edge glue[] = {{a0, constants.anchor}};
  Realization r{free_amalgam(a, constants.digraph, glue), a0, {}};
  for (Vertex v = 0; v < constants.digraph.size(); ++v) {
    if (v != constants.anchor) r.constants.push_back(r.amalgam.from_b[v]);
  }
  return r;
}

}  // namespace henson
