#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "conway/diagram.hpp"

namespace conway {

// One side of an arc: traversed with (forward) or against (backward) its
// direction. Faces are walked so that the face lies to the left of each dart.
struct Dart {
  EdgeId edge = 0;
  bool forward = true;
  bool operator==(const Dart&) const = default;
};

struct Face {
  std::vector<Dart> boundary;
};

// One of the four edge ends at a crossing; head ends arrive, tail ends leave.
struct EdgeEnd {
  EdgeId edge = 0;
  bool at_head = false;
  bool operator==(const EdgeEnd&) const = default;
};

// The rotation system: counterclockwise cyclic order of the four edge ends,
// derived from orient_ab alone — (A_out, B_out, A_in, B_in) for +1 and
// (A_out, B_in, A_in, B_out) for -1.
std::array<EdgeEnd, 4> rotation_order(const Crossing& c);

// Face orbits of the rotation system.
std::vector<Face> faces(const Diagram& d);

// True iff every connected piece of the underlying 4-valent graph satisfies
// V - E + F = 2 under the rotation system (sphere embedding). Crossing-free
// loops are ignored.
bool validate_planarity(const Diagram& d);

enum class MoveKind : std::uint8_t { r1_add, r1_remove, r2_add, r2_remove, r3 };

struct MoveDescriptor {
  MoveKind kind = MoveKind::r1_add;

  EdgeId edge = 0;                  // r1_add: arc receiving the kink
  int orient = 0;                   // r1_add: frame orientation of the new crossing
  Strand over = Strand::A;          // r1_add: which new passage goes over (A = first)

  CrossingId c1 = 0, c2 = 0;        // r1_remove: c1; r2_remove: both corners

  Dart finger{}, target{};          // r2_add: poked strand side and poked-over side
  bool finger_over = false;         // r2_add: finger passes over target

  std::array<EdgeId, 3> triangle{}; // r3: the three side arcs

  std::uint64_t source = 0;         // fingerprint of the diagram enumerated from

  std::string describe() const;
};

// All applicable moves, deterministically ordered: removals and R3 from the
// face structure, then kink and poke insertions per arc / per face dart pair.
std::vector<MoveDescriptor> find_moves(const Diagram& d);

// Applies a descriptor enumerated from exactly this diagram (stale
// descriptors throw). Non-participating crossings keep their over bit and
// frame; component count is preserved.
Diagram apply_move(const Diagram& d, const MoveDescriptor& mv);

struct WalkResult {
  Diagram diagram;
  std::vector<std::string> log;
};

// Seeded random walk in the move graph. Growth is capped: when a move would
// push the crossing count above the cap it is excluded, unless nothing else
// applies. crossing_cap < 0 means crossings + 8.
WalkResult random_equivalent(const Diagram& d, int steps, std::uint64_t seed,
                             int crossing_cap = -1);

}  // namespace conway
