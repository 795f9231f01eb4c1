#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "conway/diagram.hpp"

namespace conway {

struct VerificationReport {
  std::string property;
  long long instances = 0;
  struct Failure {
    std::string context;
  };
  std::vector<Failure> failures;
  std::vector<std::string> limits;

  bool ok() const { return failures.empty(); }
};

// Two evaluations of the accumulation that must agree disagreed. Always an
// implementation bug, never a valid outcome.
class OracleDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Independent evaluation of c_n: every permutation of the difference set
// (all of them up to order_cap!, a seeded sample beyond) crossed with up to
// marking_cap distinct markings, each evaluated by plain recursion with no
// memo table and no canonical keys. Throws OracleDisagreement when two
// evaluations differ; otherwise returns the common value.
long long brute_force_coefficient(const Diagram& d, int n, int order_cap = 5,
                                  int marking_cap = 16);

// Skein relation at one site: c_n(K+) - c_n(K-) == c_{n-1}(K0), engine values.
bool check_skein(const Diagram& d, CrossingId c, int n);

// Conway polynomial up to n_max before and after a seeded random move walk.
VerificationReport check_move_invariance(const Diagram& d, std::uint64_t seed, int steps,
                                         int n_max);

// Every embedded table fixture against its expected series; each expected
// value is reproduced by brute_force_coefficient before the engine comparison.
VerificationReport table_check();

// Deterministic pseudo-random test diagram: a fixture shadow shuffled by a
// short move walk with randomized over bits, capped at max_crossings.
Diagram random_diagram(std::uint64_t seed, int max_crossings);

}  // namespace conway
