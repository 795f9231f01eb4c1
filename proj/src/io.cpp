#include "conway/io.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace conway {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

int parse_int(const std::string& s, const char* what, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + " '" + s + "'", line);
  }
}

// A=<in>:<out>
std::pair<EdgeId, EdgeId> parse_passage(const std::string& tok, char letter, int line) {
  std::string prefix;
  prefix += letter;
  prefix += '=';
  if (tok.rfind(prefix, 0) != 0)
    throw ParseError("expected " + prefix + "<in>:<out>, got '" + tok + "'", line);
  std::string rest = tok.substr(2);
  auto colon = rest.find(':');
  if (colon == std::string::npos)
    throw ParseError("expected " + prefix + "<in>:<out>, got '" + tok + "'", line);
  EdgeId in = parse_int(rest.substr(0, colon), "edge id", line);
  EdgeId out = parse_int(rest.substr(colon + 1), "edge id", line);
  return {in, out};
}

Rational parse_rational(const std::string& s, int line) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos)
      return Rational(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw ParseError("bad coordinate '" + s + "'", line);
  }
}

}  // namespace

DiagramDocument parse_diagram(const std::string& text) {
  DiagramDocument doc;
  bool in_block = false, closed = false;
  std::map<EdgeId, int> edge_line;      // first line mentioning each edge
  std::map<CrossingId, int> cross_line;
  int lineno = 0, end_line = 0;

  std::istringstream is(text);
  std::string raw;
  while (std::getline(is, raw)) {
    ++lineno;
    auto toks = split_ws(strip_comment(raw));
    if (toks.empty()) continue;

    if (!in_block) {
      if (toks[0] != "diagram")
        throw ParseError("expected 'diagram <name>', got '" + toks[0] + "'", lineno);
      if (toks.size() != 2) throw ParseError("diagram header needs exactly one name", lineno);
      doc.name = toks[1];
      in_block = true;
      continue;
    }
    if (closed) throw ParseError("content after 'end'", lineno);

    if (toks[0] == "end") {
      if (toks.size() != 1) throw ParseError("'end' takes no arguments", lineno);
      closed = true;
      end_line = lineno;
    } else if (toks[0] == "loops") {
      if (toks.size() != 2) throw ParseError("'loops' needs one count", lineno);
      int k = parse_int(toks[1], "loop count", lineno);
      if (k < 0) throw ParseError("loop count must be nonnegative", lineno);
      doc.diagram.free_loops = k;
    } else if (toks[0] == "crossing") {
      if (toks.size() != 6)
        throw ParseError("crossing line needs id, A=, B=, orient=, over=", lineno);
      Crossing c;
      c.id = parse_int(toks[1], "crossing id", lineno);
      std::tie(c.a_in, c.a_out) = parse_passage(toks[2], 'A', lineno);
      std::tie(c.b_in, c.b_out) = parse_passage(toks[3], 'B', lineno);
      if (toks[4] == "orient=+")
        c.orient_ab = +1;
      else if (toks[4] == "orient=-")
        c.orient_ab = -1;
      else
        throw ParseError("expected orient=+ or orient=-, got '" + toks[4] + "'", lineno);
      if (toks[5] == "over=A")
        c.over = Strand::A;
      else if (toks[5] == "over=B")
        c.over = Strand::B;
      else
        throw ParseError("expected over=A or over=B, got '" + toks[5] + "'", lineno);
      doc.diagram.crossings.push_back(c);
      cross_line.emplace(c.id, lineno);
      for (EdgeId e : {c.a_in, c.a_out, c.b_in, c.b_out}) edge_line.emplace(e, lineno);
    } else if (toks[0] == "order") {
      if (toks.size() != 2) throw ParseError("'order' needs a comma-separated edge list", lineno);
      std::vector<EdgeId> reps;
      std::string item;
      std::istringstream items(toks[1]);
      while (std::getline(items, item, ','))
        reps.push_back(parse_int(item, "edge id", lineno));
      doc.diagram.component_order = std::move(reps);
    } else {
      throw ParseError("unknown directive '" + toks[0] + "'", lineno);
    }
  }
  if (!in_block) throw ParseError("empty document", lineno == 0 ? 1 : lineno);
  if (!closed) throw ParseError("missing 'end'", lineno);

  doc.diagram.sort_crossings();
  auto bad = validate(doc.diagram);
  if (!bad.empty()) {
    // attribute the violation to the line of the edge or crossing it names
    int line = end_line;
    for (const auto& [e, ln] : edge_line)
      if (bad.front().find("edge " + std::to_string(e)) != std::string::npos) line = ln;
    for (const auto& [c, ln] : cross_line)
      if (bad.front().find("crossing " + std::to_string(c)) != std::string::npos) line = ln;
    throw ParseError(bad.front(), line);
  }
  return doc;
}

std::string serialize_diagram(const DiagramDocument& doc) {
  std::ostringstream os;
  os << "diagram " << doc.name << "\n";
  if (doc.diagram.free_loops > 0) os << "loops " << doc.diagram.free_loops << "\n";
  Diagram sorted = doc.diagram;
  sorted.sort_crossings();
  for (const auto& c : sorted.crossings) {
    os << "crossing " << c.id << " A=" << c.a_in << ":" << c.a_out << " B=" << c.b_in << ":"
       << c.b_out << " orient=" << (c.orient_ab > 0 ? '+' : '-') << " over="
       << strand_letter(c.over) << "\n";
  }
  if (sorted.component_order && !sorted.component_order->empty()) {
    os << "order ";
    for (std::size_t i = 0; i < sorted.component_order->size(); ++i) {
      if (i) os << ",";
      os << (*sorted.component_order)[i];
    }
    os << "\n";
  }
  os << "end\n";
  return os.str();
}

ContourSet parse_contours(const std::string& text) {
  ContourSet set;
  Contour cur;
  bool in_block = false;
  int lineno = 0;

  std::istringstream is(text);
  std::string raw;
  while (std::getline(is, raw)) {
    ++lineno;
    auto toks = split_ws(strip_comment(raw));
    if (toks.empty()) continue;

    if (!in_block) {
      if (toks[0] != "contour")
        throw ParseError("expected 'contour <name>', got '" + toks[0] + "'", lineno);
      if (toks.size() != 2) throw ParseError("contour header needs exactly one name", lineno);
      cur = Contour{toks[1], {}};
      in_block = true;
    } else if (toks[0] == "end") {
      if (cur.vertices.size() < 3)
        throw ParseError("contour " + cur.name + " needs at least 3 points", lineno);
      set.contours.push_back(std::move(cur));
      in_block = false;
    } else if (toks[0] == "point") {
      if (toks.size() != 3) throw ParseError("'point' needs two coordinates", lineno);
      cur.vertices.push_back({parse_rational(toks[1], lineno), parse_rational(toks[2], lineno)});
    } else {
      throw ParseError("unknown directive '" + toks[0] + "'", lineno);
    }
  }
  if (in_block) throw ParseError("missing 'end'", lineno);
  if (set.contours.empty()) throw ParseError("no contours in document", lineno ? lineno : 1);
  return set;
}

}  // namespace conway
