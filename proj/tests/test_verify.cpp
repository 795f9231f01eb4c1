#include <doctest.h>

#include <functional>

#include "conway/descending.hpp"
#include "conway/engine.hpp"
#include "conway/moves.hpp"
#include "conway/verify.hpp"
#include "helpers.hpp"

using namespace conway;
using test::fx;

TEST_CASE("oracle reproduces the hand values") {
  CHECK(brute_force_coefficient(fx("hopf_plus"), 1) == 1);
  CHECK(brute_force_coefficient(fx("hopf_minus"), 1) == -1);
  CHECK(brute_force_coefficient(fx("trefoil_right"), 2) == 1);
  CHECK(brute_force_coefficient(fx("figure_eight"), 2) == -1);
}

TEST_CASE("oracle on descending diagrams is zero at positive degrees") {
  Diagram d = fx("trefoil_right");
  Diagram desc = descending_diagram(d, default_marking(d));
  for (int n = 1; n <= 3; ++n) CHECK(brute_force_coefficient(desc, n) == 0);
}

TEST_CASE("oracle vanishes above the crossing count") {
  for (const auto& name : {"kink_plus", "hopf_plus", "trefoil_left"}) {
    Diagram d = fx(name);
    CHECK(brute_force_coefficient(d, int(d.crossings.size()) + 1) == 0);
    CHECK(brute_force_coefficient(d, int(d.crossings.size()) + 2) == 0);
  }
}

TEST_CASE("oracle agrees with the engine on fixtures and random diagrams") {
  for (const auto& f : fixtures()) {
    if (f.name == "perf_10") continue;  // exercised by the performance suite
    Diagram d = fx(f.name);
    MemoTable memo;
    for (int n = 0; n <= std::min<int>(4, int(d.crossings.size())); ++n) {
      CAPTURE(f.name);
      CAPTURE(n);
      CHECK(brute_force_coefficient(d, n, 5, 4) == coefficient(d, n, memo));
    }
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Diagram d = random_diagram(seed, 7);
    MemoTable memo;
    for (int n = 0; n <= 3; ++n) {
      CAPTURE(seed);
      CHECK(brute_force_coefficient(d, n, 5, 3) == coefficient(d, n, memo));
    }
  }
}

TEST_CASE("skein relation holds at every fixture site") {
  for (const auto& f : fixtures()) {
    if (f.name == "perf_10") continue;
    Diagram d = fx(f.name);
    for (const auto& c : d.crossings)
      for (int n = 0; n <= 5; ++n) {
        CAPTURE(f.name);
        CAPTURE(c.id);
        CHECK(check_skein(d, c.id, n));
      }
  }
}

TEST_CASE("a sign-flipped accumulation breaks the skein relation") {
  // mutation check: the same recursion with +sign instead of -sign must not
  // satisfy the skein identity on the hopf link
  std::function<long long(const Diagram&, int)> mutant = [&](const Diagram& d, int n) {
    if (n < 0) return 0LL;
    if (n == 0) return component_count(d) == 1 ? 1LL : 0LL;
    Marking m = default_marking(d);
    Diagram cur = descending_diagram(d, m);
    long long total = 0;
    for (CrossingId a : diff_set(d, m)) {
      total += sign(cur, a) * mutant(smooth_crossing(cur, a), n - 1);  // wrong sign
      cur = change_crossing(cur, a);
    }
    return total;
  };
  Diagram d = fx("hopf_plus");
  SkeinTriple t = skein_triple(d, 1);
  bool holds = mutant(t.k_plus, 1) - mutant(t.k_minus, 1) == mutant(t.k_zero, 0);
  CHECK_FALSE(holds);
}

TEST_CASE("move invariance reports") {
  VerificationReport none = check_move_invariance(fx("trefoil_right"), 5, 0, 4);
  CHECK(none.ok());

  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    VerificationReport rep = check_move_invariance(fx("trefoil_right"), seed, 15, 4);
    CAPTURE(seed);
    CHECK(rep.ok());
  }

  // the comparison is not vacuous: a crossing change after the walk is seen
  Diagram walked = random_equivalent(fx("trefoil_right"), 8, 3).diagram;
  Diagram corrupted = change_crossing(walked, walked.crossings.front().id);
  CHECK(!(conway_polynomial(fx("trefoil_right"), 4) == conway_polynomial(corrupted, 4)));
}

TEST_CASE("table check passes") {
  VerificationReport rep = table_check();
  for (const auto& f : rep.failures) MESSAGE(f.context);
  CHECK(rep.ok());
  CHECK(rep.instances == 9);
}

TEST_CASE("oracle agrees with the engine at higher degrees on small diagrams") {
  for (std::uint64_t seed = 100; seed < 112; ++seed) {
    Diagram d = random_diagram(seed, 6);
    MemoTable memo;
    for (int n = 4; n <= 6; ++n) {
      CAPTURE(seed);
      CAPTURE(n);
      CHECK(brute_force_coefficient(d, n, 5, 2) == coefficient(d, n, memo));
    }
  }
}

TEST_CASE("walks from table fixtures keep the full table series") {
  for (const auto& f : fixtures()) {
    if (!f.in_table) continue;
    Diagram d = test::fx(f.name);
    std::map<int, long long> expect(f.expected.begin(), f.expected.end());
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      Diagram walked = random_equivalent(d, 12, seed).diagram;
      CAPTURE(f.name);
      CAPTURE(seed);
      CHECK(conway_polynomial(walked, 6).coefficients == expect);
    }
  }
}

TEST_CASE("random diagrams are deterministic, valid and small") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Diagram a = random_diagram(seed, 8);
    Diagram b = random_diagram(seed, 8);
    CHECK(a == b);
    CHECK(validate(a).empty());
    CHECK(validate_planarity(a));
    CHECK(int(a.crossings.size()) <= 8);
  }
}
