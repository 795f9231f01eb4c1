#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conway {

using EdgeId = std::int32_t;
using CrossingId = std::int32_t;

// Which of the two strand passages at a crossing we are talking about.
enum class Strand : std::uint8_t { A, B };

inline Strand other_strand(Strand s) { return s == Strand::A ? Strand::B : Strand::A; }
inline char strand_letter(Strand s) { return s == Strand::A ? 'A' : 'B'; }

// A transversal double point. Each strand passage is a directed pair of
// arcs (in, out); orient_ab is the orientation of the ordered frame
// (direction of A, direction of B) at the intersection point, and `over`
// names the passage on top. The crossing sign is derived, never stored.
struct Crossing {
  CrossingId id = 0;
  EdgeId a_in = 0;
  EdgeId a_out = 0;
  EdgeId b_in = 0;
  EdgeId b_out = 0;
  int orient_ab = +1;
  Strand over = Strand::A;

  EdgeId in_edge(Strand s) const { return s == Strand::A ? a_in : b_in; }
  EdgeId out_edge(Strand s) const { return s == Strand::A ? a_out : b_out; }
  void set_in(Strand s, EdgeId e) { (s == Strand::A ? a_in : b_in) = e; }
  void set_out(Strand s, EdgeId e) { (s == Strand::A ? a_out : b_out) = e; }

  bool operator==(const Crossing&) const = default;
};

// Combinatorial oriented link diagram: crossings plus a count of closed
// components that meet no crossing at all. component_order, when present,
// holds one representative edge per edge cycle and makes the diagram
// ordered; dropping it forgets the order.
struct Diagram {
  std::vector<Crossing> crossings;  // kept sorted by id
  int free_loops = 0;
  std::optional<std::vector<EdgeId>> component_order;

  bool ordered() const { return component_order.has_value(); }
  const Crossing* find(CrossingId id) const;
  const Crossing& at(CrossingId id) const;  // throws on unknown id
  Crossing& at(CrossingId id);
  void sort_crossings();

  bool operator==(const Diagram&) const = default;
};

struct SlotRef {
  CrossingId crossing = 0;
  Strand strand = Strand::A;
  bool operator==(const SlotRef&) const = default;
};

// Edge incidence index for one diagram. Arcs are directed: each edge id
// leaves exactly one crossing slot and enters exactly one.
class EdgeIndex {
 public:
  explicit EdgeIndex(const Diagram& d);

  const std::vector<EdgeId>& edges() const { return edges_; }
  bool has_edge(EdgeId e) const;
  SlotRef in_slot(EdgeId e) const;   // where e arrives
  SlotRef out_slot(EdgeId e) const;  // where e leaves
  // The arc that continues e's strand: arrive at in_slot(e), leave on the
  // same passage.
  EdgeId successor(const Diagram& d, EdgeId e) const;

 private:
  std::vector<EdgeId> edges_;
  std::vector<std::pair<EdgeId, SlotRef>> in_, out_;  // sorted by edge id
};

// Edge cycles of the diagram, each listed in successor order starting from
// its least edge. Cycles ordered by component_order when present, else by
// least contained edge. Crossing-free components are not included here.
std::vector<std::vector<EdgeId>> components(const Diagram& d);

// Empty result means the diagram satisfies all structural invariants;
// otherwise each string names one violation.
std::vector<std::string> validate(const Diagram& d);

int sign(const Diagram& d, CrossingId c);
Diagram change_crossing(const Diagram& d, CrossingId c);
Diagram smooth_crossing(const Diagram& d, CrossingId c);  // result is unordered
Diagram mirror(const Diagram& d);
int component_count(const Diagram& d);

// True when the two passages of c belong to the same edge cycle.
bool is_self_crossing(const Diagram& d, CrossingId c);

// Equal up to over bits (and component order): same crossings, same slots,
// same frame orientations.
bool same_shadow(const Diagram& a, const Diagram& b);

struct SkeinTriple {
  Diagram k_plus;
  Diagram k_minus;
  Diagram k_zero;
  CrossingId site = 0;
};

SkeinTriple skein_triple(const Diagram& d, CrossingId c);

namespace detail {

enum class Reconnect : std::uint8_t {
  passthrough,  // a_in -> a_out, b_in -> b_out (erase, strands uncrossed)
  smooth,       // a_in -> b_out, b_in -> a_out (oriented smoothing)
};

// Remove the named crossings, merging arc chains across them. Merged arcs
// take the least surviving edge id; chains that close up without touching a
// surviving crossing become free loops. keep_order remaps component
// representatives where possible (only sound when no component splits or
// merges, i.e. for passthrough removals).
Diagram erase_crossings(const Diagram& d,
                        const std::vector<std::pair<CrossingId, Reconnect>>& sites,
                        bool keep_order);

}  // namespace detail

}  // namespace conway
