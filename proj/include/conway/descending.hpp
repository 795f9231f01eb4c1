#pragma once

#include <cstddef>
#include <vector>

#include "conway/diagram.hpp"

namespace conway {

// Component order plus one base arc per component. base_edges[i] lies on the
// i-th component in the marking's order; the marked point sits on that arc.
// Crossing-free components carry no base edge.
struct Marking {
  std::vector<EdgeId> base_edges;

  bool operator==(const Marking&) const = default;
};

// Deterministic marking: components in the diagram's own order (or by least
// contained edge when unordered), base arc = least edge of each component.
Marking default_marking(const Diagram& d);

// The components of d in marking order. Throws std::invalid_argument when the
// marking does not match d (missing component, duplicate, unknown edge).
std::vector<std::vector<EdgeId>> marked_components(const Diagram& d, const Marking& m);

// Over bits reassigned by the descending rule: at an inter-component crossing
// the later component's passage goes over; at a self-crossing the passage
// reached later in the traversal from the base arc goes over. Input over bits
// are ignored (only the shadow matters). Always yields a trivial diagram.
Diagram descending_diagram(const Diagram& shadow, const Marking& m);

bool is_descending(const Diagram& d, const Marking& m);

// Crossings where d differs from the descending diagram of its shadow, in
// ascending id order. Changing exactly these crossings in the descending
// diagram reproduces d.
std::vector<CrossingId> diff_set(const Diagram& d, const Marking& m);

// Deterministic enumeration of distinct markings, capped. Component
// permutations are exhausted first (with default base arcs), then base-arc
// combinations.
std::vector<Marking> enumerate_markings(const Diagram& d, std::size_t cap);

}  // namespace conway
