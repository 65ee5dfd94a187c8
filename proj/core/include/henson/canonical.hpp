#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "henson/digraph.hpp"

namespace henson {

// Isomorphism-invariant fingerprint: two digraphs (or two graphs) have equal
// codes iff they are isomorphic. Ordered lexicographically by bytes, which
// sorts by vertex count first.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::vector<std::uint8_t> bytes)
      : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  std::string hex() const;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& code) const;
};

CanonicalCode canonical_code(const Digraph& d);
CanonicalCode canonical_code(const Graph& g);
inline CanonicalCode canonical_code(const Tournament& t) {
  return canonical_code(t.digraph());
}

// labeling[v] is the canonical position of v; relabelling by it yields the
// canonical form.
std::vector<Vertex> canonical_labeling(const Digraph& d);
Digraph canonical_form(const Digraph& d);

}  // namespace henson
