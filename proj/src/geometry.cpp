#include "conway/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace conway {

namespace {

Rational cross(const Point& v, const Point& w) { return v.x * w.y - v.y * w.x; }

Point sub(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

int sign_of(const Rational& r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); }

struct Segment {
  int contour;  // index into ContourSet::contours
  int index;    // position along the contour
  Point a, b;
};

std::vector<Segment> collect_segments(const ContourSet& s) {
  std::vector<Segment> segs;
  for (std::size_t ci = 0; ci < s.contours.size(); ++ci) {
    const auto& vs = s.contours[ci].vertices;
    for (std::size_t j = 0; j < vs.size(); ++j)
      segs.push_back({int(ci), int(j), vs[j], vs[(j + 1) % vs.size()]});
  }
  return segs;
}

bool adjacent(const Segment& p, const Segment& q, const ContourSet& s) {
  if (p.contour != q.contour) return false;
  int n = int(s.contours[p.contour].vertices.size());
  int d = (p.index - q.index + n) % n;
  return d == 0 || d == 1 || d == n - 1;
}

std::string seg_name(const ContourSet& s, const Segment& g) {
  return s.contours[g.contour].name + "[" + std::to_string(g.index) + "]";
}

enum class Meet { none, proper, contact, overlap };

Meet classify(const Segment& p, const Segment& q) {
  int o1 = orientation_determinant(p.a, p.b, q.a);
  int o2 = orientation_determinant(p.a, p.b, q.b);
  int o3 = orientation_determinant(q.a, q.b, p.a);
  int o4 = orientation_determinant(q.a, q.b, p.b);
  if (o1 * o2 > 0 || o3 * o4 > 0) return Meet::none;
  if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return Meet::proper;
  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    // collinear: compare 1D extents along the dominant axis
    auto key = [&](const Point& pt) { return p.a.x == p.b.x ? pt.y : pt.x; };
    Rational plo = std::min(key(p.a), key(p.b)), phi = std::max(key(p.a), key(p.b));
    Rational qlo = std::min(key(q.a), key(q.b)), qhi = std::max(key(q.a), key(q.b));
    if (phi < qlo || qhi < plo) return Meet::none;
    return Meet::overlap;
  }
  return Meet::contact;
}

Point proper_intersection(const Segment& p, const Segment& q, Rational* t_out, Rational* u_out) {
  Point r = sub(p.b, p.a), s = sub(q.b, q.a);
  Rational den = cross(r, s);
  Rational t = cross(sub(q.a, p.a), s) / den;
  Rational u = cross(sub(q.a, p.a), r) / den;
  if (t_out) *t_out = t;
  if (u_out) *u_out = u;
  return {p.a.x + t * r.x, p.a.y + t * r.y};
}

}  // namespace

int orientation_determinant(const Point& p, const Point& q, const Point& r) {
  return sign_of(cross(sub(q, p), sub(r, p)));
}

std::vector<std::string> validate_general_position(const ContourSet& s) {
  std::vector<std::string> bad;

  for (const auto& c : s.contours) {
    if (c.vertices.size() < 3) {
      bad.push_back("contour " + c.name + " has fewer than 3 vertices");
      continue;
    }
    for (std::size_t j = 0; j < c.vertices.size(); ++j)
      if (c.vertices[j] == c.vertices[(j + 1) % c.vertices.size()])
        bad.push_back("contour " + c.name + " repeats consecutive vertex " + std::to_string(j));
  }
  if (!bad.empty()) return bad;

  std::vector<Point> all;
  for (const auto& c : s.contours)
    all.insert(all.end(), c.vertices.begin(), c.vertices.end());

  {
    std::set<Point> seen;
    for (const auto& v : all)
      if (!seen.insert(v).second) bad.push_back("vertex used twice across the contour set");
  }
  if (!bad.empty()) return bad;

  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      for (std::size_t k = j + 1; k < all.size(); ++k)
        if (orientation_determinant(all[i], all[j], all[k]) == 0)
          bad.push_back("three collinear vertices");
  if (!bad.empty()) return bad;

  auto segs = collect_segments(s);
  std::map<Point, int> hits;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (adjacent(segs[i], segs[j], s)) continue;
      switch (classify(segs[i], segs[j])) {
        case Meet::none:
          break;
        case Meet::proper:
          ++hits[proper_intersection(segs[i], segs[j], nullptr, nullptr)];
          break;
        case Meet::contact:
          bad.push_back("segments " + seg_name(s, segs[i]) + " and " + seg_name(s, segs[j]) +
                        " touch at a vertex");
          break;
        case Meet::overlap:
          bad.push_back("segments " + seg_name(s, segs[i]) + " and " + seg_name(s, segs[j]) +
                        " overlap along a line");
          break;
      }
    }
  }
  for (const auto& [pt, n] : hits)
    if (n > 1) bad.push_back("three or more segments meet at one point");
  return bad;
}

ShadowResult compute_shadow(const ContourSet& s) {
  auto bad = validate_general_position(s);
  if (!bad.empty()) throw std::invalid_argument("general position violation: " + bad.front());

  auto segs = collect_segments(s);

  struct Event {
    int seg_index;   // along this contour
    Rational t;      // parameter within the segment
    std::size_t partner;  // global id of the other segment
    std::size_t self;     // global id of this segment
    Point at;
  };
  std::vector<std::vector<Event>> events(s.contours.size());

  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (adjacent(segs[i], segs[j], s)) continue;
      if (classify(segs[i], segs[j]) != Meet::proper) continue;
      Rational t, u;
      Point at = proper_intersection(segs[i], segs[j], &t, &u);
      events[segs[i].contour].push_back({segs[i].index, t, j, i, at});
      events[segs[j].contour].push_back({segs[j].index, u, i, j, at});
    }
  }

  // crossings keyed by the unordered pair of global segment ids
  std::map<std::pair<std::size_t, std::size_t>, CrossingId> registry;
  std::map<CrossingId, Crossing> crossings;
  std::map<CrossingId, Point> dir_a;  // direction of the first-seen passage
  ShadowResult result;

  EdgeId next_edge = 1;
  CrossingId next_crossing = 1;
  std::vector<EdgeId> order;

  for (std::size_t ci = 0; ci < s.contours.size(); ++ci) {
    auto& evs = events[ci];
    if (evs.empty()) {
      ++result.diagram.free_loops;
      continue;
    }
    std::sort(evs.begin(), evs.end(), [](const Event& a, const Event& b) {
      return std::tie(a.seg_index, a.t) < std::tie(b.seg_index, b.t);
    });

    EdgeId base = next_edge;
    int m = int(evs.size());
    for (int k = 0; k < m; ++k) {
      EdgeId in_arc = base + (k + m - 1) % m;
      EdgeId out_arc = base + k;
      const Event& ev = evs[k];
      auto key = std::minmax(ev.self, ev.partner);
      Point dir = sub(segs[ev.self].b, segs[ev.self].a);
      auto it = registry.find(key);
      if (it == registry.end()) {
        CrossingId id = next_crossing++;
        registry.emplace(key, id);
        Crossing c;
        c.id = id;
        c.a_in = in_arc;
        c.a_out = out_arc;
        c.over = Strand::A;  // unset; the descending pass decides
        crossings[id] = c;
        dir_a[id] = dir;
        result.positions[id] = ev.at;
      } else {
        Crossing& c = crossings[it->second];
        c.b_in = in_arc;
        c.b_out = out_arc;
        c.orient_ab = sign_of(cross(dir_a[it->second], dir));
      }
    }
    order.push_back(base);
    next_edge += m;
  }

  for (auto& [id, c] : crossings) result.diagram.crossings.push_back(c);
  result.diagram.sort_crossings();
  result.diagram.component_order = std::move(order);
  return result;
}

}  // namespace conway
