#pragma once

#include <stdexcept>
#include <string>

#include "conway/diagram.hpp"
#include "conway/geometry.hpp"

namespace conway {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + " at line " + std::to_string(line)), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct DiagramDocument {
  std::string name;
  Diagram diagram;
};

// Line-oriented block format, `#` comments and blank lines ignored:
//   diagram <name>
//   loops <k>                                    (optional, default 0)
//   crossing <id> A=<in>:<out> B=<in>:<out> orient=<+|-> over=<A|B>
//   order <edge>[,<edge>...]                     (optional)
//   end
// The parsed diagram must pass validate(); violations are reported with the
// line of the offending crossing.
DiagramDocument parse_diagram(const std::string& text);

// Canonical form: loops line only when nonzero, crossings in ascending id
// order, order line only when present. parse(serialize(d)) == d and
// serialize(parse(t)) == t for canonically formatted t.
std::string serialize_diagram(const DiagramDocument& doc);

// Blocks of
//   contour <name>
//   point <x> <y>            (integers or p/q rationals)
//   end
// Each contour needs at least 3 points. General position is checked on
// ingestion, not here.
ContourSet parse_contours(const std::string& text);

}  // namespace conway
