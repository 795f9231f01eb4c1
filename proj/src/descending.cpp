#include "conway/descending.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace conway {

Marking default_marking(const Diagram& d) {
  Marking m;
  for (const auto& cyc : components(d)) m.base_edges.push_back(cyc.front());
  return m;
}

std::vector<std::vector<EdgeId>> marked_components(const Diagram& d, const Marking& m) {
  auto cycles = components(d);
  std::vector<std::vector<EdgeId>> out;
  std::vector<bool> taken(cycles.size(), false);
  for (EdgeId base : m.base_edges) {
    bool found = false;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (std::find(cycles[i].begin(), cycles[i].end(), base) == cycles[i].end()) continue;
      if (taken[i])
        throw std::invalid_argument("inconsistent marking: component of edge " +
                                    std::to_string(base) + " marked twice");
      taken[i] = true;
      // rotate the cycle so the walk starts on the base arc
      auto it = std::find(cycles[i].begin(), cycles[i].end(), base);
      std::vector<EdgeId> cyc(it, cycles[i].end());
      cyc.insert(cyc.end(), cycles[i].begin(), it);
      out.push_back(std::move(cyc));
      found = true;
      break;
    }
    if (!found)
      throw std::invalid_argument("inconsistent marking: no component contains edge " +
                                  std::to_string(base));
  }
  for (bool t : taken)
    if (!t) throw std::invalid_argument("inconsistent marking: component without base edge");
  return out;
}

Diagram descending_diagram(const Diagram& shadow, const Marking& m) {
  auto comps = marked_components(shadow, m);

  // component index and traversal position of every passage, keyed by in-arc
  std::map<EdgeId, std::pair<int, int>> place;  // edge -> (component, position)
  for (std::size_t ci = 0; ci < comps.size(); ++ci)
    for (std::size_t k = 0; k < comps[ci].size(); ++k)
      place[comps[ci][k]] = {int(ci), int(k)};

  Diagram r = shadow;
  for (auto& x : r.crossings) {
    auto [ca, pa] = place.at(x.a_in);
    auto [cb, pb] = place.at(x.b_in);
    if (ca != cb)
      x.over = ca > cb ? Strand::A : Strand::B;
    else
      x.over = pa > pb ? Strand::A : Strand::B;
  }
  return r;
}

bool is_descending(const Diagram& d, const Marking& m) {
  Diagram ref = descending_diagram(d, m);
  for (std::size_t i = 0; i < d.crossings.size(); ++i)
    if (d.crossings[i].over != ref.crossings[i].over) return false;
  return true;
}

std::vector<CrossingId> diff_set(const Diagram& d, const Marking& m) {
  Diagram ref = descending_diagram(d, m);
  std::vector<CrossingId> out;
  for (std::size_t i = 0; i < d.crossings.size(); ++i)
    if (d.crossings[i].over != ref.crossings[i].over) out.push_back(d.crossings[i].id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Marking> enumerate_markings(const Diagram& d, std::size_t cap) {
  auto cycles = components(d);
  std::sort(cycles.begin(), cycles.end());  // enumeration base, least edge first

  std::vector<Marking> out;
  std::set<std::vector<EdgeId>> seen;
  auto push = [&](const Marking& m) {
    if (out.size() < cap && seen.insert(m.base_edges).second) out.push_back(m);
  };

  if (cycles.empty()) {
    push(Marking{});
    return out;
  }

  std::vector<std::size_t> perm(cycles.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;

  // component permutations first, default base arcs
  do {
    Marking m;
    for (std::size_t i : perm) m.base_edges.push_back(cycles[i].front());
    push(m);
    if (out.size() >= cap) return out;
  } while (std::next_permutation(perm.begin(), perm.end()));

  // then base-arc combinations, for every permutation until the cap
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    std::vector<std::size_t> odo(cycles.size(), 0);
    while (true) {
      Marking m;
      for (std::size_t i = 0; i < perm.size(); ++i)
        m.base_edges.push_back(cycles[perm[i]][odo[i]]);
      push(m);
      if (out.size() >= cap) return out;
      std::size_t k = 0;
      while (k < odo.size()) {
        if (++odo[k] < cycles[perm[k]].size()) break;
        odo[k++] = 0;
      }
      if (k == odo.size()) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace conway
