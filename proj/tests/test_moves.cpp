#include <doctest.h>

#include <algorithm>

#include "conway/canonical.hpp"
#include "conway/engine.hpp"
#include "conway/geometry.hpp"
#include "conway/moves.hpp"
#include "helpers.hpp"

using namespace conway;
using test::fx;

namespace {

int count_kind(const std::vector<MoveDescriptor>& mvs, MoveKind k) {
  return int(std::count_if(mvs.begin(), mvs.end(),
                           [&](const MoveDescriptor& m) { return m.kind == k; }));
}

}  // namespace

TEST_CASE("face counts satisfy Euler on the fixtures") {
  CHECK(faces(fx("kink_plus")).size() == 3);   // V=1, E=2
  CHECK(faces(fx("hopf_plus")).size() == 4);   // V=2, E=4
  CHECK(faces(fx("trefoil_right")).size() == 5);  // V=3, E=6
  for (const auto& f : fixtures()) {
    CAPTURE(f.name);
    CHECK(validate_planarity(fx(f.name)));
  }
}

TEST_CASE("planarity fails on a corrupted frame") {
  Diagram d = fx("trefoil_right");
  d.at(2).orient_ab = -d.at(2).orient_ab;
  CHECK_FALSE(validate_planarity(d));
}

TEST_CASE("zero-crossing diagrams are trivially planar") {
  Diagram d;
  d.free_loops = 3;
  CHECK(validate_planarity(d));
  CHECK(faces(d).empty());
  CHECK(find_moves(d).empty());
}

TEST_CASE("kink exposes an R1 removal") {
  auto mvs = find_moves(fx("kink_plus"));
  CHECK(count_kind(mvs, MoveKind::r1_remove) >= 1);
}

TEST_CASE("standard trefoil has no removals") {
  auto mvs = find_moves(fx("trefoil_right"));
  CHECK(count_kind(mvs, MoveKind::r1_remove) == 0);
  CHECK(count_kind(mvs, MoveKind::r2_remove) == 0);
}

TEST_CASE("R1 removal of the kink leaves a free loop") {
  Diagram d = fx("kink_plus");
  auto mvs = find_moves(d);
  for (const auto& mv : mvs) {
    if (mv.kind != MoveKind::r1_remove) continue;
    Diagram r = apply_move(d, mv);
    CHECK(r.crossings.empty());
    CHECK(r.free_loops == 1);
  }
}

TEST_CASE("R1 add then remove returns to the original diagram") {
  Diagram d = fx("trefoil_right");
  for (int orient : {+1, -1}) {
    for (Strand over : {Strand::A, Strand::B}) {
      MoveDescriptor add;
      add.kind = MoveKind::r1_add;
      add.edge = 3;
      add.orient = orient;
      add.over = over;
      add.source = fingerprint(d);
      Diagram kinked = apply_move(d, add);
      CHECK(validate(kinked).empty());
      CHECK(validate_planarity(kinked));
      CHECK(kinked.crossings.size() == 4);
      CHECK(component_count(kinked) == 1);

      auto mvs = find_moves(kinked);
      bool removed = false;
      for (const auto& mv : mvs) {
        if (mv.kind != MoveKind::r1_remove) continue;
        Diagram back = apply_move(kinked, mv);
        if (canonical_key(back) == canonical_key(d)) removed = true;
      }
      CHECK(removed);
    }
  }
}

TEST_CASE("R2 add then remove at the created bigon is the identity") {
  Diagram d = fx("trefoil_right");
  auto mvs = find_moves(d);
  int tested = 0;
  for (const auto& mv : mvs) {
    if (mv.kind != MoveKind::r2_add) continue;
    if (tested >= 12) break;  // a representative sample of pokes
    ++tested;
    Diagram poked = apply_move(d, mv);
    CAPTURE(mv.describe());
    CHECK(validate(poked).empty());
    CHECK(validate_planarity(poked));
    CHECK(poked.crossings.size() == d.crossings.size() + 2);
    CHECK(component_count(poked) == component_count(d));

    bool undone = false;
    for (const auto& rm : find_moves(poked)) {
      if (rm.kind != MoveKind::r2_remove) continue;
      Diagram back = apply_move(poked, rm);
      if (canonical_key(back) == canonical_key(d)) undone = true;
    }
    CHECK(undone);
  }
  CHECK(tested > 0);
}

TEST_CASE("R2 removal requires aligned over bits") {
  // the hopf link's bigons are clasps, not removable
  auto mvs = find_moves(fx("hopf_plus"));
  CHECK(count_kind(mvs, MoveKind::r2_remove) == 0);

  // descending 2-crossing bigon: same shadow, aligned over bits
  Diagram d = fx("hopf_plus");
  d.at(1).over = Strand::A;
  d.at(2).over = Strand::B;  // component 1 over at both crossings
  auto mvs2 = find_moves(d);
  CHECK(count_kind(mvs2, MoveKind::r2_remove) == 1);
  for (const auto& mv : mvs2) {
    if (mv.kind != MoveKind::r2_remove) continue;
    Diagram r = apply_move(d, mv);
    CHECK(r.crossings.empty());
    CHECK(r.free_loops == 2);
  }
}

TEST_CASE("R3 slides preserve structure and coefficients") {
  // build diagrams with R3 triangles by poking a fixture arc across a face
  for (const char* base_name : {"trefoil_right", "figure_eight"}) {
    Diagram base = fx(base_name);
    int r3_seen = 0;
    for (const auto& poke : find_moves(base)) {
      if (poke.kind != MoveKind::r2_add) continue;
      Diagram d = apply_move(base, poke);
      for (const auto& mv : find_moves(d)) {
        if (mv.kind != MoveKind::r3) continue;
        ++r3_seen;
        Diagram r = apply_move(d, mv);
        CAPTURE(base_name);
        CAPTURE(mv.describe());
        CHECK(validate(r).empty());
        CHECK(validate_planarity(r));
        CHECK(r.crossings.size() == d.crossings.size());
        CHECK(component_count(r) == component_count(d));
        for (const auto& c : r.crossings) {
          CHECK(c.orient_ab == d.at(c.id).orient_ab);
          CHECK(c.over == d.at(c.id).over);
        }
        MemoTable memo;
        for (int n = 0; n <= 4; ++n)
          CHECK(coefficient(r, n, memo) == coefficient(d, n, memo));
      }
      if (r3_seen >= 6) break;
    }
    CHECK(r3_seen > 0);
  }
}

TEST_CASE("moves preserve component count and planarity along random walks") {
  std::uint64_t seed = 12;
  for (const auto& name : {"trefoil_right", "figure_eight", "hopf_minus", "knot_5_2"}) {
    Diagram d = fx(name);
    int comps = component_count(d);
    Diagram cur = d;
    for (int step = 0; step < 12; ++step) {
      auto mvs = find_moves(cur);
      if (mvs.empty()) break;
      cur = apply_move(cur, mvs[(seed = seed * 6364136223846793005ull + 1442695040888963407ull) %
                                mvs.size()]);
      CAPTURE(name);
      CAPTURE(step);
      REQUIRE(validate(cur).empty());
      CHECK(validate_planarity(cur));
      CHECK(component_count(cur) == comps);
    }
  }
}

TEST_CASE("stale descriptors are rejected") {
  Diagram d = fx("trefoil_right");
  auto mvs = find_moves(d);
  Diagram other = change_crossing(d, 1);
  CHECK_THROWS_AS(apply_move(other, mvs.front()), std::invalid_argument);
}

TEST_CASE("random_equivalent is reproducible and invariant") {
  Diagram d = fx("trefoil_right");
  WalkResult none = random_equivalent(d, 0, 7);
  CHECK(none.diagram == d);
  CHECK(none.log.empty());

  WalkResult a = random_equivalent(d, 10, 42);
  WalkResult b = random_equivalent(d, 10, 42);
  CHECK(a.log == b.log);
  CHECK(a.diagram == b.diagram);
  CHECK(coefficient(a.diagram, 2) == 1);
  CHECK(validate_planarity(a.diagram));

  WalkResult c = random_equivalent(d, 10, 43);
  CHECK(validate_planarity(c.diagram));
}

TEST_CASE("walks respect the crossing cap") {
  Diagram d = fx("figure_eight");
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    WalkResult w = random_equivalent(d, 20, seed, 7);
    CHECK(int(w.diagram.crossings.size()) <= 7);
  }
}

TEST_CASE("derived rotation matches the geometric cyclic order on contour fixtures") {
  const char* name;
  SUBCASE("hopf") { name = "hopf"; }
  SUBCASE("trefoil") { name = "trefoil"; }
  ContourSet cs = parse_contours(std::string(contour_fixture(name)));
  ShadowResult sh = compute_shadow(cs);

  // recompute, per crossing, the four edge-end directions straight from the
  // contour segments and sort them counterclockwise
  struct Vec {
    Rational x, y;
  };
  auto half = [](const Vec& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
  auto ccw_less = [&](const Vec& a, const Vec& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return a.x * b.y - a.y * b.x > 0;
  };

  EdgeIndex idx(sh.diagram);
  for (const auto& [id, at] : sh.positions) {
    // find the two segments through the intersection point
    std::vector<Vec> dirs;
    for (const auto& contour : cs.contours) {
      const auto& vs = contour.vertices;
      for (std::size_t j = 0; j < vs.size(); ++j) {
        Point a = vs[j], b = vs[(j + 1) % vs.size()];
        if (orientation_determinant(a, b, at) != 0) continue;
        if (std::min(a.x, b.x) <= at.x && at.x <= std::max(a.x, b.x) &&
            std::min(a.y, b.y) <= at.y && at.y <= std::max(a.y, b.y))
          dirs.push_back({b.x - a.x, b.y - a.y});
      }
    }
    REQUIRE(dirs.size() == 2);
    const Crossing& c = sh.diagram.at(id);

    // ends in fixture order: A_out, A_in, B_out, B_in with A the first-seen
    // passage (contour order), so A's direction is dirs[0]
    struct NamedEnd {
      EdgeId edge;
      bool at_head;
      Vec dir;
    };
    std::vector<NamedEnd> ends = {
        {c.a_out, false, dirs[0]},
        {c.a_in, true, {-dirs[0].x, -dirs[0].y}},
        {c.b_out, false, dirs[1]},
        {c.b_in, true, {-dirs[1].x, -dirs[1].y}},
    };
    std::sort(ends.begin(), ends.end(),
              [&](const NamedEnd& p, const NamedEnd& q) { return ccw_less(p.dir, q.dir); });

    // the derived rotation the face walker actually uses
    auto derived = rotation_order(c);
    std::vector<std::pair<EdgeId, bool>> expected;
    for (const auto& e : derived) expected.push_back({e.edge, e.at_head});

    // compare cyclically
    std::vector<std::pair<EdgeId, bool>> got;
    for (const auto& e : ends) got.push_back({e.edge, e.at_head});
    bool match = false;
    for (int rot = 0; rot < 4; ++rot) {
      bool all = true;
      for (int i = 0; i < 4; ++i)
        if (got[(i + rot) % 4] != expected[i]) all = false;
      if (all) match = true;
    }
    CHECK(match);
  }
}
