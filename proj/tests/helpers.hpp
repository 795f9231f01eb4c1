#pragma once

#include <string>
#include <string_view>

#include "conway/fixtures.hpp"
#include "conway/io.hpp"

namespace conway::test {

inline Diagram fx(std::string_view name) {
  return parse_diagram(std::string(fixture(name).document)).diagram;
}

}  // namespace conway::test
