#include <doctest.h>

#include <array>
#include <thread>

#include "conway/engine.hpp"
#include "helpers.hpp"

using namespace conway;
using test::fx;

TEST_CASE("degree zero counts components") {
  CHECK(coefficient(fx("unknot"), 0) == 1);
  CHECK(coefficient(fx("kink_plus"), 0) == 1);
  CHECK(coefficient(fx("unlink_2"), 0) == 0);
  CHECK(coefficient(fx("hopf_plus"), 0) == 0);
}

TEST_CASE("negative degrees vanish") {
  CHECK(coefficient(fx("trefoil_right"), -1) == 0);
  CHECK(coefficient(fx("unknot"), -3) == 0);
}

TEST_CASE("hand skein values") {
  // c_1(hopf+) - c_1(unlink_2) = c_0(unknot) = 1
  CHECK(coefficient(fx("hopf_plus"), 1) == 1);
  CHECK(coefficient(fx("hopf_minus"), 1) == -1);
  // c_2(trefoil) - c_2(unknot) = c_1(hopf+) = 1
  CHECK(coefficient(fx("trefoil_right"), 2) == 1);
  CHECK(coefficient(fx("trefoil_left"), 2) == 1);
  CHECK(coefficient(mirror(fx("trefoil_right")), 2) == 1);
  CHECK(coefficient(fx("figure_eight"), 2) == -1);
}

TEST_CASE("full series match the fixture table") {
  for (const auto& f : fixtures()) {
    CAPTURE(f.name);
    ConwaySeries s = conway_polynomial(fx(f.name));
    std::map<int, long long> expect(f.expected.begin(), f.expected.end());
    CHECK(s.coefficients == expect);
  }
}

TEST_CASE("changing any trefoil crossing unknots it") {
  Diagram d = fx("trefoil_right");
  for (const auto& c : d.crossings) {
    Diagram u = change_crossing(d, c.id);
    for (int n = 1; n <= 3; ++n) CHECK(coefficient(u, n) == 0);
    CHECK(coefficient(u, 0) == 1);
  }
}

TEST_CASE("skein relation on every fixture crossing") {
  for (const auto& f : fixtures()) {
    Diagram d = fx(f.name);
    MemoTable memo;
    for (const auto& c : d.crossings) {
      SkeinTriple t = skein_triple(d, c.id);
      for (int n = 0; n <= 5; ++n) {
        CAPTURE(f.name);
        CAPTURE(c.id);
        CAPTURE(n);
        CHECK(coefficient(t.k_plus, n, memo) - coefficient(t.k_minus, n, memo) ==
              coefficient(t.k_zero, n - 1, memo));
      }
    }
  }
}

TEST_CASE("coefficients vanish above the crossing count and off parity") {
  for (const auto& f : fixtures()) {
    Diagram d = fx(f.name);
    int nc = int(d.crossings.size());
    MemoTable memo;
    for (int n = nc + 1; n <= nc + 3; ++n) {
      CAPTURE(f.name);
      CHECK(coefficient(d, n, memo) == 0);
    }
    int parity = (component_count(d) - 1) % 2;
    for (int n = 0; n <= nc; ++n)
      if (n % 2 != parity) CHECK(coefficient(d, n, memo) == 0);
  }
}

TEST_CASE("memoization does not change results") {
  for (const auto& name : {"trefoil_right", "figure_eight", "knot_5_2", "hopf_minus"}) {
    Diagram d = fx(name);
    CHECK(conway_polynomial(d) == conway_polynomial_unmemoized(d));
  }
}

TEST_CASE("series respect an explicit degree bound") {
  ConwaySeries s = conway_polynomial(fx("knot_5_1"), 2);
  CHECK(s.degree_bound == 2);
  CHECK(s.coefficients == std::map<int, long long>{{0, 1}, {2, 3}});
}

TEST_CASE("invalid diagrams are rejected") {
  Diagram broken;
  Crossing c;
  c.id = 1;
  c.a_in = 1;
  c.a_out = 2;
  c.b_in = 3;
  c.b_out = 4;
  broken.crossings.push_back(c);
  CHECK_THROWS_AS(coefficient(broken, 1), std::invalid_argument);
  CHECK_THROWS_AS(conway_polynomial(broken), std::invalid_argument);
}

TEST_CASE("one memo table can be shared across threads") {
  MemoTable memo;
  const char* names[4] = {"trefoil_right", "figure_eight", "knot_5_1", "knot_5_2"};
  std::array<long long, 4> out{};
  std::vector<std::thread> workers;
  for (int i = 0; i < 4; ++i)
    workers.emplace_back([&, i] { out[i] = coefficient(fx(names[i]), 2, memo); });
  for (auto& w : workers) w.join();
  CHECK(out == std::array<long long, 4>{1, -1, 3, 2});
  CHECK(memo.size() > 0);
}

TEST_CASE("evaluate_gamma") {
  Diagram hopf = fx("hopf_plus");
  auto beta_zero = [](const Diagram&) { return 0LL; };
  auto beta_c0 = [](const Diagram& x) { return component_count(x) == 1 ? 1LL : 0LL; };

  for (const Marking& m : enumerate_markings(hopf, 100)) {
    // descending with respect to m: empty difference set
    Diagram desc = descending_diagram(hopf, m);
    CHECK(evaluate_gamma(desc, m, beta_c0) == 0);
    CHECK(evaluate_gamma(hopf, m, beta_zero) == 0);
    CHECK(evaluate_gamma(hopf, m, beta_c0) == 1);  // every marking gives c_1 = 1
  }
}
