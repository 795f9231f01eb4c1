#include "conway/fixtures.hpp"

#include <stdexcept>
#include <string>

namespace conway {

namespace {

// Knot and link diagrams written as braid closures (all strands oriented the
// same way, every crossing frame +1), except the zero-crossing and kink
// diagrams which are written directly.

constexpr std::string_view kUnknot = R"(diagram unknot
loops 1
end
)";

constexpr std::string_view kUnlink2 = R"(diagram unlink_2
loops 2
end
)";

constexpr std::string_view kKinkPlus = R"(diagram kink_plus
crossing 1 A=1:2 B=2:1 orient=+ over=A
end
)";

constexpr std::string_view kKinkMinus = R"(diagram kink_minus
crossing 1 A=1:2 B=2:1 orient=+ over=B
end
)";

constexpr std::string_view kHopfPlus = R"(diagram hopf_plus
crossing 1 A=1:3 B=2:4 orient=+ over=A
crossing 2 A=4:2 B=3:1 orient=+ over=A
end
)";

constexpr std::string_view kHopfMinus = R"(diagram hopf_minus
crossing 1 A=1:3 B=2:4 orient=+ over=B
crossing 2 A=4:2 B=3:1 orient=+ over=B
end
)";

constexpr std::string_view kTrefoilRight = R"(diagram trefoil_right
crossing 1 A=1:3 B=2:4 orient=+ over=A
crossing 2 A=4:5 B=3:6 orient=+ over=A
crossing 3 A=6:2 B=5:1 orient=+ over=A
end
)";

constexpr std::string_view kTrefoilLeft = R"(diagram trefoil_left
crossing 1 A=1:3 B=2:4 orient=+ over=B
crossing 2 A=4:5 B=3:6 orient=+ over=B
crossing 3 A=6:2 B=5:1 orient=+ over=B
end
)";

constexpr std::string_view kFigureEight = R"(diagram figure_eight
crossing 1 A=1:4 B=2:5 orient=+ over=A
crossing 2 A=4:6 B=3:7 orient=+ over=B
crossing 3 A=5:8 B=7:1 orient=+ over=A
crossing 4 A=8:3 B=6:2 orient=+ over=B
end
)";

constexpr std::string_view kKnot51 = R"(diagram knot_5_1
crossing 1 A=1:3 B=2:4 orient=+ over=A
crossing 2 A=4:5 B=3:6 orient=+ over=A
crossing 3 A=6:7 B=5:8 orient=+ over=A
crossing 4 A=8:9 B=7:10 orient=+ over=A
crossing 5 A=10:2 B=9:1 orient=+ over=A
end
)";

constexpr std::string_view kKnot52 = R"(diagram knot_5_2
crossing 1 A=1:4 B=2:5 orient=+ over=A
crossing 2 A=5:6 B=4:7 orient=+ over=A
crossing 3 A=6:8 B=3:9 orient=+ over=A
crossing 4 A=9:10 B=8:11 orient=+ over=A
crossing 5 A=7:12 B=11:1 orient=+ over=A
crossing 6 A=12:3 B=10:2 orient=+ over=B
end
)";

// closure of a 10-crossing braid; the connected sum of two (2,5) torus knots
constexpr std::string_view kPerf10 = R"(diagram perf_10
crossing 1 A=1:4 B=2:5 orient=+ over=A
crossing 2 A=5:6 B=4:7 orient=+ over=A
crossing 3 A=7:8 B=6:9 orient=+ over=A
crossing 4 A=9:10 B=8:11 orient=+ over=A
crossing 5 A=11:12 B=10:1 orient=+ over=A
crossing 6 A=12:13 B=3:14 orient=+ over=A
crossing 7 A=14:15 B=13:16 orient=+ over=A
crossing 8 A=16:17 B=15:18 orient=+ over=A
crossing 9 A=18:19 B=17:20 orient=+ over=A
crossing 10 A=20:3 B=19:2 orient=+ over=A
end
)";

// Two overlapping quadrilaterals; ingests to the Hopf shadow (crossing
// frames -1, +1 along contour order).
constexpr std::string_view kHopfContours = R"(contour K1
point -5 -2
point 2 -3
point 5 0
point 3 8
end
contour K2
point 0 1
point 9 -2
point 13 7
point 3 6
end
)";

// Single self-overlapping 12-gon; ingests to a 3-crossing trefoil shadow
// (frames +1, -1, +1).
constexpr std::string_view kTrefoilContour = R"(contour T
point 1 -2
point 8 12
point -1 19
point 12 35
point 14 33
point 15 -2
point 7 3
point -1 10
point 11 23
point 3 33
point -8 29
point -9 1
end
)";

constexpr std::string_view kTriangles = R"(contour T1
point 0 0
point 4 1
point 1 3
end
contour T2
point 10 0
point 14 2
point 11 3
end
)";

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> table = {
      {"unknot", kUnknot, {{0, 1}}, true},
      {"unlink_2", kUnlink2, {}, true},
      {"hopf_plus", kHopfPlus, {{1, 1}}, true},
      {"hopf_minus", kHopfMinus, {{1, -1}}, true},
      {"trefoil_right", kTrefoilRight, {{0, 1}, {2, 1}}, true},
      {"trefoil_left", kTrefoilLeft, {{0, 1}, {2, 1}}, true},
      {"figure_eight", kFigureEight, {{0, 1}, {2, -1}}, true},
      {"knot_5_1", kKnot51, {{0, 1}, {2, 3}, {4, 1}}, true},
      {"knot_5_2", kKnot52, {{0, 1}, {2, 2}}, true},
      {"kink_plus", kKinkPlus, {{0, 1}}, false},
      {"kink_minus", kKinkMinus, {{0, 1}}, false},
      {"perf_10", kPerf10, {{0, 1}, {2, 6}, {4, 11}, {6, 6}, {8, 1}}, false},
  };
  return table;
}

const Fixture& fixture(std::string_view name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

std::string_view contour_fixture(std::string_view name) {
  if (name == "hopf") return kHopfContours;
  if (name == "trefoil") return kTrefoilContour;
  if (name == "triangles") return kTriangles;
  throw std::invalid_argument("unknown contour fixture '" + std::string(name) + "'");
}

}  // namespace conway
