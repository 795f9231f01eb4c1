#include "conway/engine.hpp"

#include "conway/canonical.hpp"

namespace conway {

namespace {

long long coeff_impl(const Diagram& d, int n, MemoTable* memo) {
  if (n < 0) return 0;
  if (n == 0) return component_count(d) == 1 ? 1 : 0;

  std::string key;
  if (memo) {
    key = canonical_key(d);
    if (auto hit = memo->lookup(key, n)) return *hit;
  }

  Marking m = default_marking(d);
  Diagram cur = descending_diagram(d, m);
  long long total = 0;
  for (CrossingId a : diff_set(d, m)) {
    total -= sign(cur, a) * coeff_impl(smooth_crossing(cur, a), n - 1, memo);
    cur = change_crossing(cur, a);
  }

  if (memo) memo->store(key, n, total);
  return total;
}

void require_valid(const Diagram& d) {
  auto bad = validate(d);
  if (!bad.empty()) throw std::invalid_argument("invalid diagram: " + bad.front());
}

}  // namespace

namespace {

std::string degree_key(const std::string& key, int degree) {
  std::string k = key;
  k.push_back(char(degree & 0xff));
  k.push_back(char((degree >> 8) & 0xff));
  return k;
}

}  // namespace

std::optional<long long> MemoTable::lookup(const std::string& key, int degree) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(degree_key(key, degree));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void MemoTable::store(const std::string& key, int degree, long long value) {
  std::lock_guard<std::mutex> lock(mu_);
  entries_.emplace(degree_key(key, degree), value);
}

std::size_t MemoTable::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

long long coefficient(const Diagram& d, int n) {
  MemoTable memo;
  return coefficient(d, n, memo);
}

long long coefficient(const Diagram& d, int n, MemoTable& memo) {
  require_valid(d);
  return coeff_impl(d, n, &memo);
}

long long coefficient_unmemoized(const Diagram& d, int n) {
  require_valid(d);
  return coeff_impl(d, n, nullptr);
}

namespace {

ConwaySeries series_impl(const Diagram& d, std::optional<int> max_degree, MemoTable* memo) {
  require_valid(d);
  ConwaySeries s;
  s.degree_bound = max_degree.value_or(int(d.crossings.size()));
  for (int n = 0; n <= s.degree_bound; ++n) {
    long long c = coeff_impl(d, n, memo);
    if (c != 0) s.coefficients[n] = c;
  }
  return s;
}

}  // namespace

ConwaySeries conway_polynomial(const Diagram& d, std::optional<int> max_degree) {
  MemoTable memo;
  return series_impl(d, max_degree, &memo);
}

ConwaySeries conway_polynomial(const Diagram& d, std::optional<int> max_degree, MemoTable& memo) {
  return series_impl(d, max_degree, &memo);
}

ConwaySeries conway_polynomial_unmemoized(const Diagram& d, std::optional<int> max_degree) {
  return series_impl(d, max_degree, nullptr);
}

long long evaluate_gamma(const Diagram& d, const Marking& m,
                         const std::function<long long(const Diagram&)>& beta) {
  Diagram cur = descending_diagram(d, m);
  long long total = 0;
  for (CrossingId a : diff_set(d, m)) {
    total -= sign(cur, a) * beta(smooth_crossing(cur, a));
    cur = change_crossing(cur, a);
  }
  return total;
}

}  // namespace conway
