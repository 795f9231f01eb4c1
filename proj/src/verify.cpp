#include "conway/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "conway/descending.hpp"
#include "conway/engine.hpp"
#include "conway/fixtures.hpp"
#include "conway/io.hpp"
#include "conway/moves.hpp"

namespace conway {

namespace {

std::string exact_bytes(const Diagram& d) {
  // representation-exact key (not canonical): only used to avoid evaluating
  // beta twice on the very same argument within one oracle call
  std::ostringstream os;
  os << d.free_loops << ';';
  for (const auto& c : d.crossings)
    os << c.id << ',' << c.a_in << ',' << c.a_out << ',' << c.b_in << ',' << c.b_out << ','
       << c.orient_ab << ',' << strand_letter(c.over) << ';';
  return os.str();
}

// plain recursion: default marking, ascending order, no memoization
long long plain_coefficient(const Diagram& d, int n) {
  if (n < 0) return 0;
  if (n == 0) return component_count(d) == 1 ? 1 : 0;
  Marking m = default_marking(d);
  Diagram cur = descending_diagram(d, m);
  long long total = 0;
  for (CrossingId a : diff_set(d, m)) {
    total -= sign(cur, a) * plain_coefficient(smooth_crossing(cur, a), n - 1);
    cur = change_crossing(cur, a);
  }
  return total;
}

long long factorial_capped(int k, long long cap) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) {
    f *= i;
    if (f >= cap) return cap;
  }
  return f;
}

}  // namespace

long long brute_force_coefficient(const Diagram& d, int n, int order_cap, int marking_cap) {
  if (n < 0) return 0;
  if (n == 0) return component_count(d) == 1 ? 1 : 0;

  std::map<std::string, long long> beta_cache;
  auto beta = [&](const Diagram& x) {
    std::string k = exact_bytes(x);
    auto it = beta_cache.find(k);
    if (it != beta_cache.end()) return it->second;
    long long v = plain_coefficient(x, n - 1);
    beta_cache.emplace(std::move(k), v);
    return v;
  };

  bool have = false;
  long long value = 0;
  std::string first_context;

  for (const Marking& m : enumerate_markings(d, std::size_t(std::max(marking_cap, 1)))) {
    std::vector<CrossingId> y = diff_set(d, m);
    std::sort(y.begin(), y.end());

    std::vector<std::vector<CrossingId>> orders;
    long long budget = factorial_capped(order_cap, 1000000);
    if (factorial_capped(int(y.size()), budget + 1) <= budget) {
      std::vector<CrossingId> p = y;
      do {
        orders.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
    } else {
      orders.push_back(y);
      std::mt19937_64 rng(0x5eed0000ull + std::uint64_t(n));
      std::vector<CrossingId> p = y;
      for (long long i = 1; i < budget; ++i) {
        std::shuffle(p.begin(), p.end(), rng);
        orders.push_back(p);
      }
    }

    for (const auto& ord : orders) {
      Diagram cur = descending_diagram(d, m);
      long long total = 0;
      for (CrossingId a : ord) {
        total -= sign(cur, a) * beta(smooth_crossing(cur, a));
        cur = change_crossing(cur, a);
      }
      std::ostringstream ctx;
      ctx << "marking(";
      for (EdgeId e : m.base_edges) ctx << e << ' ';
      ctx << ") order(";
      for (CrossingId a : ord) ctx << a << ' ';
      ctx << ") -> " << total;
      if (!have) {
        have = true;
        value = total;
        first_context = ctx.str();
      } else if (total != value) {
        throw OracleDisagreement("oracle disagreement at degree " + std::to_string(n) + ": " +
                                 first_context + " vs " + ctx.str());
      }
    }
  }
  return value;
}

bool check_skein(const Diagram& d, CrossingId c, int n) {
  SkeinTriple t = skein_triple(d, c);
  MemoTable memo;
  long long plus = coefficient(t.k_plus, n, memo);
  long long minus = coefficient(t.k_minus, n, memo);
  long long zero = coefficient(t.k_zero, n - 1, memo);
  return plus - minus == zero;
}

VerificationReport check_move_invariance(const Diagram& d, std::uint64_t seed, int steps,
                                         int n_max) {
  VerificationReport rep;
  rep.property = "moves";
  rep.limits.push_back("steps=" + std::to_string(steps));
  rep.limits.push_back("seed=" + std::to_string(seed));
  rep.limits.push_back("n_max=" + std::to_string(n_max));

  ConwaySeries before = conway_polynomial(d, n_max);
  WalkResult walk = random_equivalent(d, steps, seed);
  ConwaySeries after = conway_polynomial(walk.diagram, n_max);
  ++rep.instances;

  if (!(before == after)) {
    std::ostringstream ctx;
    ctx << "seed " << seed << ": series changed after moves [";
    for (std::size_t i = 0; i < walk.log.size(); ++i) {
      if (i) ctx << "; ";
      ctx << walk.log[i];
    }
    ctx << "]";
    rep.failures.push_back({ctx.str()});
  }
  if (!validate_planarity(walk.diagram))
    rep.failures.push_back({"seed " + std::to_string(seed) + ": walk left planarity"});
  return rep;
}

VerificationReport table_check() {
  VerificationReport rep;
  rep.property = "tables";
  rep.limits.push_back("order_cap=5");
  rep.limits.push_back("marking_cap=4");

  for (const Fixture& f : fixtures()) {
    if (!f.in_table) continue;
    Diagram d = parse_diagram(std::string(f.document)).diagram;
    ConwaySeries expected;
    expected.degree_bound = int(d.crossings.size());
    for (auto [deg, c] : f.expected) expected.coefficients[deg] = c;

    ++rep.instances;
    for (int deg = 0; deg <= expected.degree_bound; ++deg) {
      long long want = expected.at(deg);
      long long oracle = 0;
      try {
        oracle = brute_force_coefficient(d, deg, 5, 4);
      } catch (const OracleDisagreement& e) {
        rep.failures.push_back({std::string(f.name) + ": " + e.what()});
        continue;
      }
      if (oracle != want) {
        rep.failures.push_back({std::string(f.name) + ": oracle c_" + std::to_string(deg) +
                                " = " + std::to_string(oracle) + ", table says " +
                                std::to_string(want)});
      }
    }
    ConwaySeries engine = conway_polynomial(d);
    if (!(engine == expected)) {
      std::ostringstream ctx;
      ctx << f.name << ": engine series {";
      for (auto [deg, c] : engine.coefficients) ctx << deg << ":" << c << ' ';
      ctx << "} != table {";
      for (auto [deg, c] : expected.coefficients) ctx << deg << ":" << c << ' ';
      ctx << "}";
      rep.failures.push_back({ctx.str()});
    }
  }
  return rep;
}

Diagram random_diagram(std::uint64_t seed, int max_crossings) {
  std::mt19937_64 rng(seed);

  std::vector<const Fixture*> seeds;
  for (const Fixture& f : fixtures()) {
    Diagram d = parse_diagram(std::string(f.document)).diagram;
    if (int(d.crossings.size()) <= max_crossings && !d.crossings.empty())
      seeds.push_back(&f);
  }
  const Fixture& pick = *seeds[rng() % seeds.size()];
  Diagram d = parse_diagram(std::string(pick.document)).diagram;

  int walk_steps = int(rng() % 4);
  d = random_equivalent(d, walk_steps, rng(), max_crossings).diagram;

  // randomize the over/under state; the shadow stays planar
  for (auto& c : d.crossings)
    if (rng() % 2) c.over = other_strand(c.over);
  if (rng() % 2) d.component_order.reset();
  return d;
}

}  // namespace conway
