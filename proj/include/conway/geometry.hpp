#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "conway/diagram.hpp"

namespace conway {

// Exact arithmetic throughout: predicates on polygonal contours must never
// see rounding.
using Rational = boost::multiprecision::cpp_rational;

struct Point {
  Rational x;
  Rational y;
  bool operator==(const Point&) const = default;
  bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

// Closed oriented polygonal curve; orientation follows vertex order and the
// last vertex connects back to the first.
struct Contour {
  std::string name;
  std::vector<Point> vertices;
};

// The ordered tuple of contours; order is the component order of the
// resulting diagram.
struct ContourSet {
  std::vector<Contour> contours;
};

// Sign of det(q - p, r - p): +1 for a counterclockwise triangle p,q,r,
// -1 clockwise, 0 collinear.
int orientation_determinant(const Point& p, const Point& q, const Point& r);

// Empty result iff the contour set is in general position: no repeated or
// collinear vertex triples, all segment intersections transversal and
// interior, no vertex on a non-incident segment, no point on three segments.
std::vector<std::string> validate_general_position(const ContourSet& s);

struct ShadowResult {
  Diagram diagram;                       // over bits unset (placeholder A)
  std::map<CrossingId, Point> positions; // crossing -> intersection point
};

// One crossing per transversal segment intersection, arcs split along each
// contour, orient_ab from the exact orientation determinant of the two
// segment directions. Contours without intersections become free loops.
// Throws std::invalid_argument on a general-position violation.
ShadowResult compute_shadow(const ContourSet& s);

}  // namespace conway
