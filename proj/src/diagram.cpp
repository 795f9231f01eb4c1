#include "conway/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace conway {

const Crossing* Diagram::find(CrossingId id) const {
  for (const auto& c : crossings)
    if (c.id == id) return &c;
  return nullptr;
}

const Crossing& Diagram::at(CrossingId id) const {
  if (const Crossing* c = find(id)) return *c;
  throw std::invalid_argument("unknown crossing id " + std::to_string(id));
}

Crossing& Diagram::at(CrossingId id) {
  return const_cast<Crossing&>(static_cast<const Diagram*>(this)->at(id));
}

void Diagram::sort_crossings() {
  std::sort(crossings.begin(), crossings.end(),
            [](const Crossing& a, const Crossing& b) { return a.id < b.id; });
}

EdgeIndex::EdgeIndex(const Diagram& d) {
  for (const auto& c : d.crossings) {
    in_.push_back({c.a_in, {c.id, Strand::A}});
    in_.push_back({c.b_in, {c.id, Strand::B}});
    out_.push_back({c.a_out, {c.id, Strand::A}});
    out_.push_back({c.b_out, {c.id, Strand::B}});
  }
  auto by_edge = [](const auto& x, const auto& y) { return x.first < y.first; };
  std::sort(in_.begin(), in_.end(), by_edge);
  std::sort(out_.begin(), out_.end(), by_edge);
  std::set<EdgeId> seen;
  for (const auto& [e, _] : in_) seen.insert(e);
  for (const auto& [e, _] : out_) seen.insert(e);
  edges_.assign(seen.begin(), seen.end());
}

namespace {

const SlotRef* lookup(const std::vector<std::pair<EdgeId, SlotRef>>& v, EdgeId e) {
  auto it = std::lower_bound(v.begin(), v.end(), e,
                             [](const auto& p, EdgeId x) { return p.first < x; });
  if (it == v.end() || it->first != e) return nullptr;
  return &it->second;
}

}  // namespace

bool EdgeIndex::has_edge(EdgeId e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

SlotRef EdgeIndex::in_slot(EdgeId e) const {
  if (const SlotRef* s = lookup(in_, e)) return *s;
  throw std::invalid_argument("edge " + std::to_string(e) + " has no in-slot");
}

SlotRef EdgeIndex::out_slot(EdgeId e) const {
  if (const SlotRef* s = lookup(out_, e)) return *s;
  throw std::invalid_argument("edge " + std::to_string(e) + " has no out-slot");
}

EdgeId EdgeIndex::successor(const Diagram& d, EdgeId e) const {
  SlotRef s = in_slot(e);
  return d.at(s.crossing).out_edge(s.strand);
}

std::vector<std::vector<EdgeId>> components(const Diagram& d) {
  EdgeIndex idx(d);
  std::set<EdgeId> unvisited(idx.edges().begin(), idx.edges().end());

  auto trace = [&](EdgeId start) {
    std::vector<EdgeId> cycle;
    EdgeId e = start;
    do {
      cycle.push_back(e);
      unvisited.erase(e);
      e = idx.successor(d, e);
    } while (e != start);
    // rotate so the least edge comes first
    auto least = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), least, cycle.end());
    return cycle;
  };

  std::vector<std::vector<EdgeId>> out;
  if (d.component_order) {
    for (EdgeId rep : *d.component_order)
      if (unvisited.count(rep)) out.push_back(trace(rep));
  }
  while (!unvisited.empty()) out.push_back(trace(*unvisited.begin()));
  return out;
}

std::vector<std::string> validate(const Diagram& d) {
  std::vector<std::string> bad;
  if (d.free_loops < 0) bad.push_back("negative free loop count");

  std::set<CrossingId> ids;
  std::map<EdgeId, int> in_count, out_count;
  for (const auto& c : d.crossings) {
    if (c.id <= 0) bad.push_back("crossing id " + std::to_string(c.id) + " must be positive");
    if (!ids.insert(c.id).second)
      bad.push_back("duplicate crossing id " + std::to_string(c.id));
    if (c.orient_ab != 1 && c.orient_ab != -1)
      bad.push_back("crossing " + std::to_string(c.id) + " has orient " +
                    std::to_string(c.orient_ab));
    if (c.a_in == c.a_out)
      bad.push_back("crossing " + std::to_string(c.id) + " passage A enters and leaves on edge " +
                    std::to_string(c.a_in));
    if (c.b_in == c.b_out)
      bad.push_back("crossing " + std::to_string(c.id) + " passage B enters and leaves on edge " +
                    std::to_string(c.b_in));
    for (EdgeId e : {c.a_in, c.a_out, c.b_in, c.b_out})
      if (e <= 0) bad.push_back("crossing " + std::to_string(c.id) + " references edge id " +
                                std::to_string(e));
    ++in_count[c.a_in];
    ++in_count[c.b_in];
    ++out_count[c.a_out];
    ++out_count[c.b_out];
  }

  std::set<EdgeId> edges;
  for (const auto& [e, _] : in_count) edges.insert(e);
  for (const auto& [e, _] : out_count) edges.insert(e);
  for (EdgeId e : edges) {
    int i = in_count.count(e) ? in_count[e] : 0;
    int o = out_count.count(e) ? out_count[e] : 0;
    if (i == 0)
      bad.push_back("dangling edge " + std::to_string(e) + ": never enters a crossing");
    if (o == 0)
      bad.push_back("dangling edge " + std::to_string(e) + ": never leaves a crossing");
    if (i > 1) bad.push_back("edge " + std::to_string(e) + " enters " + std::to_string(i) +
                             " crossings");
    if (o > 1) bad.push_back("edge " + std::to_string(e) + " leaves " + std::to_string(o) +
                             " crossings");
  }
  if (!bad.empty()) return bad;  // cycle structure needs the slot invariants

  auto cycles = components(d);
  if (d.component_order) {
    if (d.component_order->size() != cycles.size()) {
      bad.push_back("component order lists " + std::to_string(d.component_order->size()) +
                    " components, diagram has " + std::to_string(cycles.size()));
    } else {
      EdgeIndex idx(d);
      std::set<EdgeId> seen;
      for (EdgeId rep : *d.component_order) {
        if (!idx.has_edge(rep)) {
          bad.push_back("component order references unknown edge " + std::to_string(rep));
          continue;
        }
        // walk to the cycle's least edge
        EdgeId e = rep, least = rep;
        do {
          e = idx.successor(d, e);
          least = std::min(least, e);
        } while (e != rep);
        if (!seen.insert(least).second)
          bad.push_back("component order lists the component of edge " + std::to_string(rep) +
                        " twice");
      }
    }
  }
  return bad;
}

int sign(const Diagram& d, CrossingId c) {
  const Crossing& x = d.at(c);
  return x.over == Strand::A ? x.orient_ab : -x.orient_ab;
}

Diagram change_crossing(const Diagram& d, CrossingId c) {
  Diagram r = d;
  Crossing& x = r.at(c);
  x.over = other_strand(x.over);
  return r;
}

Diagram mirror(const Diagram& d) {
  Diagram r = d;
  for (auto& x : r.crossings) x.over = other_strand(x.over);
  return r;
}

Diagram smooth_crossing(const Diagram& d, CrossingId c) {
  d.at(c);  // unknown-id check
  return detail::erase_crossings(d, {{c, detail::Reconnect::smooth}}, /*keep_order=*/false);
}

int component_count(const Diagram& d) {
  return static_cast<int>(components(d).size()) + d.free_loops;
}

bool is_self_crossing(const Diagram& d, CrossingId c) {
  const Crossing& x = d.at(c);
  for (const auto& cyc : components(d)) {
    bool a = std::find(cyc.begin(), cyc.end(), x.a_in) != cyc.end();
    bool b = std::find(cyc.begin(), cyc.end(), x.b_in) != cyc.end();
    if (a || b) return a && b;
  }
  return false;
}

bool same_shadow(const Diagram& a, const Diagram& b) {
  if (a.free_loops != b.free_loops) return false;
  if (a.crossings.size() != b.crossings.size()) return false;
  for (std::size_t i = 0; i < a.crossings.size(); ++i) {
    Crossing x = a.crossings[i], y = b.crossings[i];
    x.over = Strand::A;
    y.over = Strand::A;
    if (!(x == y)) return false;
  }
  return true;
}

SkeinTriple skein_triple(const Diagram& d, CrossingId c) {
  SkeinTriple t;
  t.site = c;
  if (sign(d, c) > 0) {
    t.k_plus = d;
    t.k_minus = change_crossing(d, c);
  } else {
    t.k_minus = d;
    t.k_plus = change_crossing(d, c);
  }
  t.k_zero = smooth_crossing(d, c);
  return t;
}

namespace detail {

Diagram erase_crossings(const Diagram& d,
                        const std::vector<std::pair<CrossingId, Reconnect>>& sites,
                        bool keep_order) {
  std::set<CrossingId> removed;
  for (const auto& [id, _] : sites) {
    d.at(id);
    if (!removed.insert(id).second)
      throw std::invalid_argument("crossing " + std::to_string(id) + " removed twice");
  }

  // strand continuations across removed crossings: next[u] = v means the
  // strand arriving on arc u proceeds along arc v
  std::map<EdgeId, EdgeId> next;
  std::set<EdgeId> has_prev;
  for (const auto& [id, mode] : sites) {
    const Crossing& x = d.at(id);
    std::pair<EdgeId, EdgeId> j1, j2;
    if (mode == Reconnect::smooth) {
      j1 = {x.a_in, x.b_out};
      j2 = {x.b_in, x.a_out};
    } else {
      j1 = {x.a_in, x.a_out};
      j2 = {x.b_in, x.b_out};
    }
    next[j1.first] = j1.second;
    next[j2.first] = j2.second;
    has_prev.insert(j1.second);
    has_prev.insert(j2.second);
  }

  // resolve chains: arcs joined end to end collapse to one arc keyed by the
  // least member id; closed chains become free loops
  std::map<EdgeId, EdgeId> rename;  // member -> merged id (for chain ends only)
  int new_loops = 0;
  std::set<EdgeId> visited;
  for (const auto& [start, _] : next) {
    if (has_prev.count(start)) continue;  // not a chain head
    EdgeId least = start, e = start;
    std::vector<EdgeId> chain{start};
    while (next.count(e)) {
      e = next.at(e);
      chain.push_back(e);
      least = std::min(least, e);
    }
    for (EdgeId m : chain) {
      visited.insert(m);
      rename[m] = least;
    }
  }
  for (const auto& [start, _] : next) {
    if (visited.count(start)) continue;  // closed chain
    EdgeId e = start;
    do {
      visited.insert(e);
      e = next.at(e);
    } while (e != start);
    ++new_loops;
    // members of a closed chain have no surviving slot references
  }

  auto remap = [&](EdgeId e) {
    auto it = rename.find(e);
    return it == rename.end() ? e : it->second;
  };

  Diagram r;
  r.free_loops = d.free_loops + new_loops;
  for (const auto& c : d.crossings) {
    if (removed.count(c.id)) continue;
    Crossing nc = c;
    nc.a_in = remap(c.a_in);
    nc.a_out = remap(c.a_out);
    nc.b_in = remap(c.b_in);
    nc.b_out = remap(c.b_out);
    r.crossings.push_back(nc);
  }

  if (keep_order && d.component_order) {
    std::vector<EdgeId> order;
    for (EdgeId rep : *d.component_order) {
      auto it = rename.find(rep);
      if (it != rename.end()) {
        order.push_back(it->second);
      } else if (next.count(rep) || has_prev.count(rep)) {
        // rep sat on a chain that closed into a free loop
        continue;
      } else {
        order.push_back(rep);
      }
    }
    r.component_order = std::move(order);
  }
  return r;
}

}  // namespace detail

}  // namespace conway
