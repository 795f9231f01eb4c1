#pragma once

#include <map>
#include <string_view>
#include <vector>

namespace conway {

// Embedded ground-truth diagrams. Expected Conway coefficients come from the
// standard knot tables; every table entry is re-derived by the brute-force
// oracle before tests compare against it.
struct Fixture {
  std::string_view name;
  std::string_view document;                  // DiagramDocument text
  std::vector<std::pair<int, long long>> expected;  // nonzero coefficients
  bool in_table = true;                       // part of the table-check set
};

const std::vector<Fixture>& fixtures();
const Fixture& fixture(std::string_view name);  // throws on unknown name

// Contour documents: "hopf", "trefoil", "triangles".
std::string_view contour_fixture(std::string_view name);

}  // namespace conway
