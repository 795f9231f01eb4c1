#pragma once

#include <cstdint>
#include <string>

#include "conway/diagram.hpp"

namespace conway {

// Relabeling-invariant identity of a diagram: equal keys exactly for
// diagrams that differ only by edge/crossing renaming, passage renaming,
// component order, or rotation of component starting points. Computed as
// the lexicographically least traversal word over all (component order,
// start edge) choices.
std::string canonical_key(const Diagram& d);

// Cheap non-canonical fingerprint of the exact representation, including
// labels and component order. Used for staleness checks.
std::uint64_t fingerprint(const Diagram& d);

}  // namespace conway
