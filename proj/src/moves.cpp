#include "conway/moves.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "conway/canonical.hpp"

namespace conway {

std::array<EdgeEnd, 4> rotation_order(const Crossing& c) {
  if (c.orient_ab > 0)
    return {EdgeEnd{c.a_out, false}, EdgeEnd{c.b_out, false}, EdgeEnd{c.a_in, true},
            EdgeEnd{c.b_in, true}};
  return {EdgeEnd{c.a_out, false}, EdgeEnd{c.b_in, true}, EdgeEnd{c.a_in, true},
          EdgeEnd{c.b_out, false}};
}

namespace {

struct FaceWalker {
  const Diagram* d;
  EdgeIndex idx;

  explicit FaceWalker(const Diagram& diagram) : d(&diagram), idx(diagram) {}

  // the dart following `dart` around the face on its left
  Dart next(Dart dart) const {
    SlotRef arrive = dart.forward ? idx.in_slot(dart.edge) : idx.out_slot(dart.edge);
    const Crossing& c = d->at(arrive.crossing);
    EdgeEnd in{dart.edge, dart.forward};
    auto rot = rotation_order(c);
    int pos = -1;
    for (int i = 0; i < 4; ++i)
      if (rot[i] == in) pos = i;
    const EdgeEnd& out = rot[(pos + 3) % 4];  // clockwise successor
    return Dart{out.edge, !out.at_head};
  }
};

Strand passage_with_in(const Crossing& c, EdgeId e) {
  if (c.a_in == e) return Strand::A;
  if (c.b_in == e) return Strand::B;
  throw std::invalid_argument("edge " + std::to_string(e) + " does not enter crossing " +
                              std::to_string(c.id));
}

Strand passage_with_out(const Crossing& c, EdgeId e) {
  if (c.a_out == e) return Strand::A;
  if (c.b_out == e) return Strand::B;
  throw std::invalid_argument("edge " + std::to_string(e) + " does not leave crossing " +
                              std::to_string(c.id));
}

EdgeId max_edge(const Diagram& d) {
  EdgeId m = 0;
  for (const auto& c : d.crossings)
    m = std::max({m, c.a_in, c.a_out, c.b_in, c.b_out});
  return m;
}

CrossingId max_crossing(const Diagram& d) {
  CrossingId m = 0;
  for (const auto& c : d.crossings) m = std::max(m, c.id);
  return m;
}

void retarget_in_slot(Diagram& d, EdgeId old_edge, EdgeId new_edge) {
  for (auto& c : d.crossings) {
    if (c.a_in == old_edge) {
      c.a_in = new_edge;
      return;
    }
    if (c.b_in == old_edge) {
      c.b_in = new_edge;
      return;
    }
  }
  throw std::invalid_argument("edge " + std::to_string(old_edge) + " enters no crossing");
}

}  // namespace

std::vector<Face> faces(const Diagram& d) {
  if (d.crossings.empty()) return {};
  FaceWalker w(d);

  std::vector<Dart> all;
  for (EdgeId e : w.idx.edges()) {
    all.push_back({e, true});
    all.push_back({e, false});
  }
  std::set<std::pair<EdgeId, bool>> seen;
  std::vector<Face> out;
  for (const Dart& start : all) {
    if (seen.count({start.edge, start.forward})) continue;
    Face f;
    Dart cur = start;
    do {
      f.boundary.push_back(cur);
      seen.insert({cur.edge, cur.forward});
      cur = w.next(cur);
    } while (!(cur == start));
    out.push_back(std::move(f));
  }
  return out;
}

bool validate_planarity(const Diagram& d) {
  if (d.crossings.empty()) return true;

  // connected pieces of the 4-valent graph, by shared arcs
  std::map<EdgeId, std::vector<CrossingId>> touching;
  for (const auto& c : d.crossings)
    for (EdgeId e : {c.a_in, c.a_out, c.b_in, c.b_out}) touching[e].push_back(c.id);

  std::map<CrossingId, CrossingId> parent;
  for (const auto& c : d.crossings) parent[c.id] = c.id;
  std::function<CrossingId(CrossingId)> find = [&](CrossingId x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& [e, cs] : touching)
    for (std::size_t i = 1; i < cs.size(); ++i) parent[find(cs[0])] = find(cs[i]);

  std::map<CrossingId, int> verts, edge_cnt, face_cnt;
  for (const auto& c : d.crossings) ++verts[find(c.id)];
  for (const auto& [e, cs] : touching) ++edge_cnt[find(cs[0])];
  EdgeIndex idx(d);
  for (const auto& f : faces(d)) {
    CrossingId any = idx.in_slot(f.boundary.front().edge).crossing;
    ++face_cnt[find(any)];
  }
  for (const auto& [root, v] : verts) {
    if (v - edge_cnt[root] + face_cnt[root] != 2) return false;
  }
  return true;
}

std::string MoveDescriptor::describe() const {
  std::ostringstream os;
  switch (kind) {
    case MoveKind::r1_add:
      os << "R1+ edge " << edge << " orient " << (orient > 0 ? '+' : '-') << " over "
         << strand_letter(over);
      break;
    case MoveKind::r1_remove:
      os << "R1- crossing " << c1;
      break;
    case MoveKind::r2_add:
      os << "R2+ finger " << finger.edge << (finger.forward ? 'f' : 'b') << " target "
         << target.edge << (target.forward ? 'f' : 'b') << (finger_over ? " over" : " under");
      break;
    case MoveKind::r2_remove:
      os << "R2- crossings " << c1 << "," << c2;
      break;
    case MoveKind::r3:
      os << "R3 arcs " << triangle[0] << "," << triangle[1] << "," << triangle[2];
      break;
  }
  return os.str();
}

std::vector<MoveDescriptor> find_moves(const Diagram& d) {
  std::vector<MoveDescriptor> out;
  if (d.crossings.empty()) return out;

  std::uint64_t fp = fingerprint(d);
  EdgeIndex idx(d);
  auto fs = faces(d);

  std::set<CrossingId> monogons;
  std::set<std::pair<CrossingId, CrossingId>> bigons;
  std::set<std::array<EdgeId, 3>> triangles;

  for (const auto& f : fs) {
    const auto& b = f.boundary;
    if (b.size() == 1) {
      monogons.insert(idx.in_slot(b[0].edge).crossing);
    } else if (b.size() == 2) {
      EdgeId p = b[0].edge, q = b[1].edge;
      if (p == q) continue;
      CrossingId pt = idx.out_slot(p).crossing, ph = idx.in_slot(p).crossing;
      CrossingId qt = idx.out_slot(q).crossing, qh = idx.in_slot(q).crossing;
      if (pt == ph || qt == qh) continue;
      // over bits must align: one arc's strand on top at both corners
      const Crossing& cpt = d.at(pt);
      const Crossing& cph = d.at(ph);
      bool p_over_tail = cpt.over == passage_with_out(cpt, p);
      bool p_over_head = cph.over == passage_with_in(cph, p);
      if (p_over_tail != p_over_head) continue;
      bigons.insert(std::minmax(pt, ph));
    } else if (b.size() == 3) {
      std::array<EdgeId, 3> sides{b[0].edge, b[1].edge, b[2].edge};
      if (sides[0] == sides[1] || sides[1] == sides[2] || sides[0] == sides[2]) continue;
      std::set<CrossingId> corners;
      for (EdgeId s : sides) {
        corners.insert(idx.out_slot(s).crossing);
        corners.insert(idx.in_slot(s).crossing);
      }
      if (corners.size() != 3) continue;
      bool movable = false;
      for (EdgeId s : sides) {
        const Crossing& ct = d.at(idx.out_slot(s).crossing);
        const Crossing& ch = d.at(idx.in_slot(s).crossing);
        if (ct.over == passage_with_out(ct, s) && ch.over == passage_with_in(ch, s))
          movable = true;  // this strand passes over both others
      }
      if (!movable) continue;
      std::sort(sides.begin(), sides.end());
      triangles.insert(sides);
    }
  }

  for (CrossingId x : monogons) {
    MoveDescriptor mv;
    mv.kind = MoveKind::r1_remove;
    mv.c1 = x;
    mv.source = fp;
    out.push_back(mv);
  }
  for (auto [x1, x2] : bigons) {
    MoveDescriptor mv;
    mv.kind = MoveKind::r2_remove;
    mv.c1 = x1;
    mv.c2 = x2;
    mv.source = fp;
    out.push_back(mv);
  }
  for (const auto& tri : triangles) {
    MoveDescriptor mv;
    mv.kind = MoveKind::r3;
    mv.triangle = tri;
    mv.source = fp;
    out.push_back(mv);
  }
  for (EdgeId e : idx.edges()) {
    for (int orient : {+1, -1}) {
      for (Strand over : {Strand::A, Strand::B}) {
        MoveDescriptor mv;
        mv.kind = MoveKind::r1_add;
        mv.edge = e;
        mv.orient = orient;
        mv.over = over;
        mv.source = fp;
        out.push_back(mv);
      }
    }
  }
  for (const auto& f : fs) {
    const auto& b = f.boundary;
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (i == j || b[i].edge == b[j].edge) continue;
        for (bool over : {true, false}) {
          MoveDescriptor mv;
          mv.kind = MoveKind::r2_add;
          mv.finger = b[i];
          mv.target = b[j];
          mv.finger_over = over;
          mv.source = fp;
          out.push_back(mv);
        }
      }
    }
  }
  return out;
}

namespace {

Diagram apply_r1_add(const Diagram& d, const MoveDescriptor& mv) {
  Diagram r = d;
  EdgeId loop = max_edge(d) + 1;
  EdgeId tail_out = max_edge(d) + 2;
  CrossingId id = max_crossing(d) + 1;

  retarget_in_slot(r, mv.edge, tail_out);

  Crossing x;
  x.id = id;
  x.a_in = mv.edge;
  x.a_out = loop;
  x.b_in = loop;
  x.b_out = tail_out;
  x.orient_ab = mv.orient;
  x.over = mv.over;
  r.crossings.push_back(x);
  r.sort_crossings();
  return r;
}

Diagram apply_r2_add(const Diagram& d, const MoveDescriptor& mv) {
  EdgeId e = mv.finger.edge, f = mv.target.edge;
  int s1 = mv.finger.forward ? +1 : -1;
  int s2 = mv.target.forward ? +1 : -1;

  Diagram r = d;
  EdgeId base = max_edge(d);
  EdgeId m_e = base + 1, e_b = base + 2, m_f = base + 3, f_b = base + 4;
  CrossingId x1 = max_crossing(d) + 1, x2 = max_crossing(d) + 2;

  retarget_in_slot(r, e, e_b);
  retarget_in_slot(r, f, f_b);

  // crossing order along each strand; along the finger dart it is (x1, x2),
  // along the target dart (x2, x1)
  CrossingId e_first = s1 > 0 ? x1 : x2;
  CrossingId f_first = s2 > 0 ? x2 : x1;

  Crossing c1, c2;
  c1.id = x1;
  c2.id = x2;
  auto& e1 = (e_first == x1) ? c1 : c2;  // e's first crossing along its strand
  auto& e2 = (e_first == x1) ? c2 : c1;
  e1.a_in = e;
  e1.a_out = m_e;
  e2.a_in = m_e;
  e2.a_out = e_b;
  auto& f1 = (f_first == x1) ? c1 : c2;
  auto& f2 = (f_first == x1) ? c2 : c1;
  f1.b_in = f;
  f1.b_out = m_f;
  f2.b_in = m_f;
  f2.b_out = f_b;

  c1.orient_ab = s1 * s2;
  c2.orient_ab = -s1 * s2;
  c1.over = c2.over = mv.finger_over ? Strand::A : Strand::B;

  r.crossings.push_back(c1);
  r.crossings.push_back(c2);
  r.sort_crossings();
  return r;
}

Diagram apply_r3(const Diagram& d, const MoveDescriptor& mv) {
  EdgeIndex idx(d);
  struct Write {
    CrossingId crossing;
    Strand strand;
    EdgeId in, out;
  };
  std::vector<Write> writes;
  for (EdgeId s : mv.triangle) {
    SlotRef t = idx.out_slot(s), h = idx.in_slot(s);
    EdgeId s_pre = d.at(t.crossing).in_edge(t.strand);
    EdgeId s_post = d.at(h.crossing).out_edge(h.strand);
    writes.push_back({t.crossing, t.strand, s, s_post});
    writes.push_back({h.crossing, h.strand, s_pre, s});
  }
  Diagram r = d;
  for (const auto& w : writes) {
    Crossing& c = r.at(w.crossing);
    c.set_in(w.strand, w.in);
    c.set_out(w.strand, w.out);
  }
  return r;
}

}  // namespace

Diagram apply_move(const Diagram& d, const MoveDescriptor& mv) {
  if (mv.source != fingerprint(d))
    throw std::invalid_argument("stale move descriptor: " + mv.describe());
  switch (mv.kind) {
    case MoveKind::r1_remove:
      return detail::erase_crossings(d, {{mv.c1, detail::Reconnect::passthrough}},
                                     /*keep_order=*/true);
    case MoveKind::r2_remove:
      return detail::erase_crossings(d,
                                     {{mv.c1, detail::Reconnect::passthrough},
                                      {mv.c2, detail::Reconnect::passthrough}},
                                     /*keep_order=*/true);
    case MoveKind::r1_add:
      return apply_r1_add(d, mv);
    case MoveKind::r2_add:
      return apply_r2_add(d, mv);
    case MoveKind::r3:
      return apply_r3(d, mv);
  }
  throw std::logic_error("unreachable move kind");
}

namespace {

int crossing_delta(const MoveDescriptor& mv) {
  switch (mv.kind) {
    case MoveKind::r1_add: return 1;
    case MoveKind::r2_add: return 2;
    case MoveKind::r1_remove: return -1;
    case MoveKind::r2_remove: return -2;
    case MoveKind::r3: return 0;
  }
  return 0;
}

}  // namespace

WalkResult random_equivalent(const Diagram& d, int steps, std::uint64_t seed, int crossing_cap) {
  if (crossing_cap < 0) crossing_cap = int(d.crossings.size()) + 8;
  std::mt19937_64 rng(seed);

  WalkResult res;
  res.diagram = d;
  for (int step = 0; step < steps; ++step) {
    auto moves = find_moves(res.diagram);
    if (moves.empty()) break;
    int n = int(res.diagram.crossings.size());
    std::vector<MoveDescriptor> fitting;
    for (const auto& mv : moves)
      if (n + crossing_delta(mv) <= crossing_cap) fitting.push_back(mv);
    const auto& pool = fitting.empty() ? moves : fitting;
    const MoveDescriptor& mv = pool[rng() % pool.size()];
    res.diagram = apply_move(res.diagram, mv);
    res.log.push_back(mv.describe());
  }
  return res;
}

}  // namespace conway
