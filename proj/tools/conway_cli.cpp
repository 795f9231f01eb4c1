#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "conway/descending.hpp"
#include "conway/engine.hpp"
#include "conway/fixtures.hpp"
#include "conway/geometry.hpp"
#include "conway/io.hpp"
#include "conway/moves.hpp"
#include "conway/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string series_text(const conway::ConwaySeries& s) {
  if (s.coefficients.empty()) return "0\n";
  std::ostringstream os;
  bool first = true;
  for (auto [deg, c] : s.coefficients) {
    if (!first) os << ' ';
    os << 'c' << deg << '=' << c;
    first = false;
  }
  os << '\n';
  return os.str();
}

json series_json(const conway::ConwaySeries& s) {
  json o = json::object();
  for (auto [deg, c] : s.coefficients) o[std::to_string(deg)] = c;
  return o;
}

json report_json(const conway::VerificationReport& rep) {
  json o;
  o["property"] = rep.property;
  o["instances"] = rep.instances;
  o["failures"] = json::array();
  for (const auto& f : rep.failures) o["failures"].push_back(f.context);
  o["limits"] = rep.limits;
  return o;
}

std::string report_text(const conway::VerificationReport& rep) {
  std::ostringstream os;
  os << "property: " << rep.property << "\n";
  os << "instances: " << rep.instances << "\n";
  for (const auto& l : rep.limits) os << "limit: " << l << "\n";
  os << "failures: " << rep.failures.size() << "\n";
  for (const auto& f : rep.failures) os << "  " << f.context << "\n";
  return os.str();
}

void merge(conway::VerificationReport& into, const conway::VerificationReport& part) {
  into.instances += part.instances;
  for (const auto& f : part.failures) into.failures.push_back(f);
}

conway::VerificationReport run_property(const std::string& property,
                                        const std::vector<conway::Diagram>& corpus,
                                        std::uint64_t seed, int max_degree) {
  using namespace conway;
  VerificationReport rep;
  rep.property = property;
  rep.limits.push_back("max_degree=" + std::to_string(max_degree));
  rep.limits.push_back("seed=" + std::to_string(seed));

  std::uint64_t walk_seed = seed;
  for (const Diagram& d : corpus) {
    if (property == "skein") {
      for (const auto& c : d.crossings) {
        for (int n = 0; n <= max_degree; ++n) {
          ++rep.instances;
          if (!check_skein(d, c.id, n))
            rep.failures.push_back({"skein fails at crossing " + std::to_string(c.id) +
                                    ", degree " + std::to_string(n)});
        }
      }
    } else if (property == "ordering") {
      for (int n = 0; n <= max_degree; ++n) {
        ++rep.instances;
        try {
          long long oracle = brute_force_coefficient(d, n, 5, 1);
          long long engine = coefficient(d, n);
          if (oracle != engine)
            rep.failures.push_back({"ordering: oracle " + std::to_string(oracle) +
                                    " != engine " + std::to_string(engine) + " at degree " +
                                    std::to_string(n)});
        } catch (const OracleDisagreement& e) {
          rep.failures.push_back({e.what()});
        }
      }
    } else if (property == "marking") {
      MemoTable memo;
      auto markings = enumerate_markings(d, 10);
      for (int n = 1; n <= max_degree; ++n) {
        long long engine = coefficient(d, n, memo);
        for (const Marking& m : markings) {
          ++rep.instances;
          long long got = evaluate_gamma(
              d, m, [&](const Diagram& x) { return coefficient(x, n - 1, memo); });
          if (got != engine)
            rep.failures.push_back({"marking dependence at degree " + std::to_string(n)});
        }
      }
    } else if (property == "moves") {
      merge(rep, check_move_invariance(d, walk_seed++, 10, max_degree));
    } else {
      throw std::runtime_error("unknown property '" + property + "'");
    }
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conway polynomial toolkit for oriented link diagrams"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "Conway coefficients of a diagram file");
  std::string compute_input;
  std::optional<int> compute_degree;
  bool compute_json = false;
  compute->add_option("--input", compute_input, "DiagramDocument file")->required();
  compute->add_option("--max-degree", compute_degree, "highest degree to report");
  compute->add_flag("--json", compute_json, "emit a degree->coefficient object");

  // verify
  auto* verify = app.add_subcommand("verify", "run a property suite");
  std::string verify_property, verify_input;
  bool verify_random = false, verify_json = false;
  int verify_trials = 50;
  std::uint64_t verify_seed = 1;
  int verify_degree = 4;
  verify->add_option("--property", verify_property, "skein|ordering|marking|moves")->required();
  verify->add_option("--input", verify_input, "DiagramDocument file");
  verify->add_flag("--random", verify_random, "test random diagrams");
  verify->add_option("--trials", verify_trials, "random diagrams to test");
  verify->add_option("--seed", verify_seed, "random seed");
  verify->add_option("--max-degree", verify_degree, "highest degree to test");
  verify->add_flag("--json", verify_json, "emit a report object");

  // tables
  auto* tables = app.add_subcommand("tables", "check embedded fixtures against the oracle");
  bool tables_json = false;
  tables->add_flag("--json", tables_json, "emit a report object");

  // ingest
  auto* ingest = app.add_subcommand("ingest", "contours -> descending diagram document");
  std::string ingest_contours, ingest_out, ingest_name = "ingested";
  ingest->add_option("--contours", ingest_contours, "contour file")->required();
  ingest->add_option("--out", ingest_out, "output file (default stdout)");
  ingest->add_option("--name", ingest_name, "name for the emitted diagram");

  // switch / smooth
  auto* switch_cmd = app.add_subcommand("switch", "flip the over strand at one crossing");
  auto* smooth_cmd = app.add_subcommand("smooth", "oriented smoothing at one crossing");
  std::string tf_input, tf_out;
  int tf_crossing = 0;
  for (auto* cmd : {switch_cmd, smooth_cmd}) {
    cmd->add_option("--input", tf_input, "DiagramDocument file")->required();
    cmd->add_option("--crossing", tf_crossing, "crossing id")->required();
    cmd->add_option("--out", tf_out, "output file (default stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (compute->parsed()) {
      auto doc = conway::parse_diagram(read_file(compute_input));
      auto series = conway::conway_polynomial(doc.diagram, compute_degree);
      if (compute_json)
        std::cout << series_json(series).dump() << "\n";
      else
        std::cout << series_text(series);
      return kExitOk;
    }

    if (verify->parsed()) {
      if (verify_random == !verify_input.empty())
        throw std::runtime_error("give exactly one of --input or --random");
      std::vector<conway::Diagram> corpus;
      if (verify_random) {
        for (int t = 0; t < verify_trials; ++t)
          corpus.push_back(conway::random_diagram(verify_seed + std::uint64_t(t), 8));
      } else {
        corpus.push_back(conway::parse_diagram(read_file(verify_input)).diagram);
      }
      auto rep = run_property(verify_property, corpus, verify_seed, verify_degree);
      if (verify_json)
        std::cout << report_json(rep).dump() << "\n";
      else
        std::cout << report_text(rep);
      return rep.ok() ? kExitOk : kExitPropertyFailure;
    }

    if (tables->parsed()) {
      auto rep = conway::table_check();
      if (tables_json)
        std::cout << report_json(rep).dump() << "\n";
      else
        std::cout << report_text(rep);
      return rep.ok() ? kExitOk : kExitPropertyFailure;
    }

    if (ingest->parsed()) {
      auto contours = conway::parse_contours(read_file(ingest_contours));
      auto shadow = conway::compute_shadow(contours);
      conway::Diagram d =
          conway::descending_diagram(shadow.diagram, conway::default_marking(shadow.diagram));
      write_output(ingest_out, conway::serialize_diagram({ingest_name, d}));
      return kExitOk;
    }

    if (switch_cmd->parsed() || smooth_cmd->parsed()) {
      auto doc = conway::parse_diagram(read_file(tf_input));
      doc.diagram = switch_cmd->parsed()
                        ? conway::change_crossing(doc.diagram, tf_crossing)
                        : conway::smooth_crossing(doc.diagram, tf_crossing);
      write_output(tf_out, conway::serialize_diagram(doc));
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
