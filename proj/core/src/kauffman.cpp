#include "braid3/kauffman.hpp"

#include <algorithm>

#include "braid3/alexander.hpp"
#include "braid3/errors.hpp"

namespace braid3 {

namespace {

// Segment ids of one pinched channel, base..base+k-1 for k pinch heights.
// Segment j < k-1 lies between heights H[j] and H[j+1]; segment k-1 is the
// wrap segment (above the top pinch, around the closure, below the bottom).
int segment_above(const std::vector<int>& heights, int base, int index) {
  (void)heights;
  return base + index;
}

int segment_below(const std::vector<int>& heights, int base, int index) {
  const int k = static_cast<int>(heights.size());
  return base + (index + k - 1) % k;
}

int segment_spanning(const std::vector<int>& heights, int base, int h) {
  const int k = static_cast<int>(heights.size());
  if (h < heights.front() || h > heights.back()) return base + k - 1;  // wrap
  const auto it = std::upper_bound(heights.begin(), heights.end(), h);
  return base + static_cast<int>(it - heights.begin()) - 1;
}

Diagram build_diagram_impl(const BraidWord& w, std::optional<int> marked_segment) {
  if (w.empty()) {
    throw Error("empty_word", "cannot build a diagram for the empty word");
  }
  if (!is_knot(w)) {
    throw Error("not_a_knot", "closure has " +
                                  std::to_string(component_count(w)) +
                                  " components");
  }

  std::vector<int> h1, h2;  // crossing heights per strand pair
  for (int h = 0; h < static_cast<int>(w.size()); ++h) {
    (w.letters[h].index == 1 ? h1 : h2).push_back(h);
  }
  // A 3-cycle closure needs crossings on both strand pairs.
  if (h1.empty() || h2.empty()) {
    throw Error("internal_error", "knot closure without both crossing types");
  }

  const int base1 = 2;
  const int base2 = 2 + static_cast<int>(h1.size());

  Diagram d;
  d.region_count = static_cast<int>(w.size()) + 2;
  int index1 = 0, index2 = 0;
  for (int h = 0; h < static_cast<int>(w.size()); ++h) {
    const auto& letter = w.letters[h];
    Crossing c;
    c.strand_pair = letter.index;
    c.sign = letter.sign;
    if (letter.index == 1) {
      c.corner_region[0] = segment_above(h1, base1, index1);
      c.corner_region[2] = segment_below(h1, base1, index1);
      c.corner_region[3] = 0;  // unbounded region, left of the crossing
      c.corner_region[1] = segment_spanning(h2, base2, h);
      ++index1;
    } else {
      c.corner_region[0] = segment_above(h2, base2, index2);
      c.corner_region[2] = segment_below(h2, base2, index2);
      c.corner_region[1] = 1;  // region right of strand 3
      c.corner_region[3] = segment_spanning(h1, base1, h);
      ++index2;
    }
    (letter.sign > 0 ? d.n_plus : d.n_minus) += 1;
    d.crossings.push_back(c);
  }

  int marked = static_cast<int>(h1.size()) - 1;  // wrap segment of channel 1
  if (marked_segment) {
    if (*marked_segment < 0 || *marked_segment >= static_cast<int>(h1.size())) {
      throw Error("internal_error", "marked segment index out of range");
    }
    marked = *marked_segment;
  }
  d.distinguished = {0, base1 + marked};
  return d;
}

}  // namespace

std::string Diagram::region_name(int id) const {
  if (id == 0) return "O";  // outer, unbounded
  if (id == 1) return "I";  // inner, right of strand 3
  int channel1_count = 0;
  for (const auto& c : crossings) channel1_count += c.strand_pair == 1 ? 1 : 0;
  if (id < 2 + channel1_count) return "A" + std::to_string(id - 2);
  return "B" + std::to_string(id - 2 - channel1_count);
}

std::string Diagram::dump() const {
  std::string out = "crossings=" + std::to_string(crossings.size()) +
                    " regions=" + std::to_string(region_count) +
                    " n+=" + std::to_string(n_plus) +
                    " n-=" + std::to_string(n_minus) + " distinguished=" +
                    region_name(distinguished[0]) + "," +
                    region_name(distinguished[1]) + "\n";
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const auto& c = crossings[i];
    out += std::to_string(i);
    out += c.sign > 0 ? " + " : " - ";
    out += c.strand_pair == 1 ? "s12" : "s23";
    out += " N=" + region_name(c.corner_region[0]);
    out += " E=" + region_name(c.corner_region[1]);
    out += " S=" + region_name(c.corner_region[2]);
    out += " W=" + region_name(c.corner_region[3]);
    out += "\n";
  }
  return out;
}

const GradingTable& GradingTable::standard() {
  static const GradingTable table = [] {
    GradingTable t;
    // Corner order N, E, S, W; half-integer values stored doubled.
    t.twice_alexander_pos = {-1, 0, 1, 0};
    t.twice_alexander_neg = {1, 0, -1, 0};
    t.twice_maslov_pos = {-2, 0, 0, 0};
    t.twice_maslov_neg = {2, 0, 0, 0};
    t.validate();
    return t;
  }();
  return table;
}

int GradingTable::twice_alexander(int sign, Corner c) const {
  const auto& row = sign > 0 ? twice_alexander_pos : twice_alexander_neg;
  return row[static_cast<int>(c)];
}

int GradingTable::twice_maslov(int sign, Corner c) const {
  const auto& row = sign > 0 ? twice_maslov_pos : twice_maslov_neg;
  return row[static_cast<int>(c)];
}

int GradingTable::twice_delta(int sign, Corner c) const {
  return twice_alexander(sign, c) - twice_maslov(sign, c);
}

void GradingTable::validate() const {
  for (int k = 0; k < 4; ++k) {
    const Corner c = static_cast<Corner>(k);
    const int dp = twice_delta(1, c);
    const int dn = twice_delta(-1, c);
    if (dp < 0 || dp > 1 || dn < -1 || dn > 0) {
      throw Error("internal_error", "grading table delta range violated");
    }
  }
}

Diagram build_diagram(const BraidWord& w) { return build_diagram_impl(w, std::nullopt); }

Diagram build_diagram_with_marking(const BraidWord& w, int seg_index) {
  return build_diagram_impl(w, seg_index);
}

namespace {

// Depth-first exact cover; returns false when the cap is exceeded.
bool enumerate_impl(const Diagram& d, std::optional<std::size_t> cap,
                    std::vector<KauffmanState>& out) {
  const std::size_t n = d.crossings.size();
  std::vector<char> used(static_cast<std::size_t>(d.region_count), 0);
  used[static_cast<std::size_t>(d.distinguished[0])] = 1;
  used[static_cast<std::size_t>(d.distinguished[1])] = 1;
  std::vector<Corner> choice(n, Corner::North);

  // Explicit stack of next-corner indices, crossings in word order.
  std::vector<int> next(n + 1, 0);
  std::size_t level = 0;
  while (true) {
    if (level == n) {
      out.push_back(KauffmanState{choice});
      if (cap && out.size() > *cap) return false;
      // Backtrack.
      if (level == 0) break;
      --level;
      used[static_cast<std::size_t>(
          d.crossings[level].corner_region[static_cast<int>(choice[level])])] = 0;
      continue;
    }
    int& corner = next[level];
    bool advanced = false;
    while (corner < 4) {
      const int region = d.crossings[level].corner_region[corner];
      ++corner;
      if (used[static_cast<std::size_t>(region)]) continue;
      used[static_cast<std::size_t>(region)] = 1;
      choice[level] = static_cast<Corner>(corner - 1);
      ++level;
      next[level] = 0;
      advanced = true;
      break;
    }
    if (advanced) continue;
    if (level == 0) break;
    --level;
    used[static_cast<std::size_t>(
        d.crossings[level].corner_region[static_cast<int>(choice[level])])] = 0;
  }
  return true;
}

}  // namespace

std::vector<KauffmanState> enumerate_states(const Diagram& d) {
  std::vector<KauffmanState> out;
  enumerate_impl(d, std::nullopt, out);
  return out;
}

std::optional<std::vector<KauffmanState>> enumerate_states(const Diagram& d,
                                                           std::size_t max_states) {
  std::vector<KauffmanState> out;
  if (!enumerate_impl(d, max_states, out)) return std::nullopt;
  return out;
}

StateGrading grade_state(const Diagram& d, const KauffmanState& s,
                         const GradingTable& table) {
  if (s.choice.size() != d.crossings.size()) {
    throw Error("internal_error", "state size does not match the diagram");
  }
  StateGrading g;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& c = d.crossings[i];
    g.twice_alexander += table.twice_alexander(c.sign, s.choice[i]);
    g.twice_maslov += table.twice_maslov(c.sign, s.choice[i]);
  }
  return g;
}

namespace {

DeltaSpan span_of(const Diagram& d, const std::vector<KauffmanState>& states) {
  if (states.empty()) {
    throw Error("internal_error", "diagram has no Kauffman states");
  }
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& s : states) {
    const int twice_delta = grade_state(d, s).twice_delta();
    if (first) {
      lo = hi = twice_delta;
      first = false;
    } else {
      lo = std::min(lo, twice_delta);
      hi = std::max(hi, twice_delta);
    }
  }
  if (hi - lo > d.n_plus + d.n_minus) {
    throw Error("internal_error", "delta span exceeds half the crossing number");
  }
  DeltaSpan span;
  span.delta_min = Rational(lo, 2);
  span.delta_max = Rational(hi, 2);
  span.thickness_upper = Rational(hi - lo, 2);
  span.state_count = states.size();
  return span;
}

}  // namespace

DeltaSpan delta_span(const Diagram& d) { return span_of(d, enumerate_states(d)); }

std::optional<DeltaSpan> delta_span(const Diagram& d, std::size_t max_states) {
  auto states = enumerate_states(d, max_states);
  if (!states) return std::nullopt;
  return span_of(d, *states);
}

LaurentPoly state_sum_alexander(const Diagram& d) {
  const auto states = enumerate_states(d);
  if (states.empty()) {
    throw Error("internal_error", "diagram has no Kauffman states");
  }

  std::map<int, BigInt> doubled;  // keyed by 2A
  for (const auto& s : states) {
    const StateGrading g = grade_state(d, s);
    if (g.twice_maslov % 2 != 0) {
      throw Error("internal_error", "non-integral Maslov grading");
    }
    const int maslov = g.twice_maslov / 2;
    doubled[g.twice_alexander] += (maslov % 2 == 0) ? 1 : -1;
  }

  LaurentPoly on_half_lattice = LaurentPoly::from_coefficients(std::move(doubled));
  if (on_half_lattice.is_zero()) {
    throw Error("normalization_error", "state sum vanished");
  }
  // All doubled exponents must share a parity; rescale to integers.
  const int parity = ((on_half_lattice.min_exponent() % 2) + 2) % 2;
  std::map<int, BigInt> integral;
  for (const auto& [e, c] : on_half_lattice.coefficients()) {
    if (((e % 2) + 2) % 2 != parity) {
      throw Error("normalization_error", "state sum exponents have mixed parity");
    }
    integral.emplace((e - parity) / 2, c);
  }
  return normalize_symmetric(LaurentPoly::from_coefficients(std::move(integral)));
}

}  // namespace braid3
