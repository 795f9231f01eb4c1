#include "conway/canonical.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

namespace conway {

namespace {

// Traversal words are streams of small ints:
//   0                  component separator
//   1, code            first arrival at a crossing; code packs the frame
//                      orientation and over bit relative to the arriving
//                      passage (2*[orient>0] + [arriving passage is over])
//   2, label           second arrival, referencing the first-visit label
// The stream, read left to right, reconstructs the diagram up to
// relabeling, so equal minimal words mean isomorphic diagrams.
struct Walker {
  const Diagram* d;
  std::unordered_map<EdgeId, std::pair<int, Strand>> arrive;  // edge -> (crossing pos, passage)
  std::vector<std::vector<EdgeId>> cycles;

  explicit Walker(const Diagram& diagram) : d(&diagram) {
    std::unordered_map<CrossingId, int> pos;
    for (std::size_t i = 0; i < d->crossings.size(); ++i) pos[d->crossings[i].id] = int(i);
    for (const auto& c : d->crossings) {
      arrive[c.a_in] = {pos[c.id], Strand::A};
      arrive[c.b_in] = {pos[c.id], Strand::B};
    }
    cycles = components(*d);
  }

  // Appends the word segment for one component, updating labels.
  void extend(std::vector<std::int32_t>& word, std::vector<int>& label, int& next_label,
              int cycle_index, std::size_t start_pos) const {
    const auto& cyc = cycles[cycle_index];
    word.push_back(0);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      EdgeId e = cyc[(start_pos + k) % cyc.size()];
      auto [cpos, strand] = arrive.at(e);
      const Crossing& x = d->crossings[cpos];
      if (label[cpos] == 0) {
        label[cpos] = next_label++;
        int orient_rel = strand == Strand::A ? x.orient_ab : -x.orient_ab;
        int code = (orient_rel > 0 ? 2 : 0) + (x.over == strand ? 1 : 0);
        word.push_back(1);
        word.push_back(code);
      } else {
        word.push_back(2);
        word.push_back(label[cpos]);
      }
    }
  }
};

// true if a < b on their common prefix length
bool prefix_less(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool prefix_greater(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

void search(const Walker& w, std::vector<bool>& used, std::vector<std::int32_t>& word,
            std::vector<int>& label, int next_label, std::size_t depth,
            std::vector<std::int32_t>& best) {
  if (depth == w.cycles.size()) {
    if (best.empty() || prefix_less(word, best)) best = word;
    return;
  }
  for (std::size_t ci = 0; ci < w.cycles.size(); ++ci) {
    if (used[ci]) continue;
    for (std::size_t start = 0; start < w.cycles[ci].size(); ++start) {
      std::vector<std::int32_t> nw = word;
      std::vector<int> nl = label;
      int nn = next_label;
      w.extend(nw, nl, nn, int(ci), start);
      if (!best.empty() && prefix_greater(nw, best)) continue;
      used[ci] = true;
      search(w, used, nw, nl, nn, depth + 1, best);
      used[ci] = false;
    }
  }
}

void append_u32(std::string& s, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) s.push_back(char((v >> shift) & 0xff));
}

}  // namespace

std::string canonical_key(const Diagram& d) {
  Walker w(d);
  std::vector<std::int32_t> best;
  std::vector<bool> used(w.cycles.size(), false);
  std::vector<std::int32_t> word;
  std::vector<int> label(d.crossings.size(), 0);
  search(w, used, word, label, 1, 0, best);

  std::string key;
  append_u32(key, std::uint32_t(d.free_loops));
  append_u32(key, std::uint32_t(d.crossings.size()));
  for (std::int32_t t : best) append_u32(key, std::uint32_t(t));
  return key;
}

std::uint64_t fingerprint(const Diagram& d) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(std::uint64_t(d.free_loops));
  for (const auto& c : d.crossings) {
    mix(std::uint64_t(c.id));
    mix(std::uint64_t(c.a_in) << 32 | std::uint32_t(c.a_out));
    mix(std::uint64_t(c.b_in) << 32 | std::uint32_t(c.b_out));
    mix(std::uint64_t(c.orient_ab == 1 ? 1 : 2) << 1 | (c.over == Strand::A ? 0 : 1));
  }
  if (d.component_order) {
    mix(0x9e3779b97f4a7c15ull);
    for (EdgeId e : *d.component_order) mix(std::uint64_t(e));
  }
  return h;
}

}  // namespace conway
