#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "conway/descending.hpp"
#include "conway/diagram.hpp"

namespace conway {

// Conway polynomial coefficients: nonzero entries only, zero above
// degree_bound.
struct ConwaySeries {
  std::map<int, long long> coefficients;
  int degree_bound = 0;

  long long at(int n) const {
    auto it = coefficients.find(n);
    return it == coefficients.end() ? 0 : it->second;
  }
  bool operator==(const ConwaySeries&) const = default;
};

// Shared cache keyed by (canonical diagram key, degree). Insert-if-absent is
// atomic; concurrent duplicate recomputation is harmless because values are
// functions of the key.
class MemoTable {
 public:
  std::optional<long long> lookup(const std::string& key, int degree) const;
  void store(const std::string& key, int degree, long long value);
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, long long> entries_;
};

// c_n(d). n < 0 gives 0; n = 0 gives [one component]; n >= 1 runs the
// descending-diagram accumulation with beta = c_{n-1}. Throws on an invalid
// diagram.
long long coefficient(const Diagram& d, int n);
long long coefficient(const Diagram& d, int n, MemoTable& memo);
long long coefficient_unmemoized(const Diagram& d, int n);

// Coefficients 0..max_degree (default: crossing count), one shared memo.
ConwaySeries conway_polynomial(const Diagram& d, std::optional<int> max_degree = std::nullopt);
ConwaySeries conway_polynomial(const Diagram& d, std::optional<int> max_degree, MemoTable& memo);
ConwaySeries conway_polynomial_unmemoized(const Diagram& d,
                                          std::optional<int> max_degree = std::nullopt);

// One level of the accumulation with a caller-chosen marking and beta:
//   sum over a in diff_set(d, m) of -sign(cur, a) * beta(smooth(cur, a)),
// cur stepping through the partially changed descending diagram.
long long evaluate_gamma(const Diagram& d, const Marking& m,
                         const std::function<long long(const Diagram&)>& beta);

}  // namespace conway
