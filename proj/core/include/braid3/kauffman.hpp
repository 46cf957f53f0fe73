#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braid3/laurent.hpp"
#include "braid3/numeric.hpp"
#include "braid3/word.hpp"

namespace braid3 {

// Planar model of a closed 3-braid diagram.
//
// The braid is drawn vertically on strand positions 1,2,3 with one crossing
// per letter, stacked bottom to top; the closure arcs pass to the right,
// nested so that position 1's arc is outermost. The complement then has
// exactly c+2 regions for c crossings:
//   - the unbounded region (left gap plus everything outside the arcs),
//   - the region right of position 3 (inside the innermost arc),
//   - one region per segment of the channel between positions 1 and 2
//     (the channel closes up through the band between arcs 1 and 2 and is
//     pinched once per sigma_1-type crossing),
//   - likewise for the channel between positions 2 and 3.
// A crossing's four corners in rotational order N,E,S,W: for a crossing on
// strands 1-2, N/S are the channel-1 segments above/below it, W is the
// unbounded region, E is the channel-2 segment spanning its height; the
// mirror statement holds for crossings on strands 2-3.
//
// The two distinguished regions sit on either side of a marked edge on the
// outermost closure arc: the unbounded region and the wrap segment of
// channel 1.

enum class Corner : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

struct Crossing {
  int strand_pair = 1;  // 1: strands 1-2, 2: strands 2-3
  int sign = 1;
  std::array<int, 4> corner_region{};  // region id per corner, N E S W
};

struct Diagram {
  std::vector<Crossing> crossings;
  int region_count = 0;
  std::array<int, 2> distinguished{};  // never-marked region pair
  int n_plus = 0;
  int n_minus = 0;

  std::string region_name(int id) const;
  // One crossing per line: index, sign, strand pair, corner regions.
  std::string dump() const;
};

// Local grading contributions at a marked corner, transcribed for both
// crossing signs; values are half-integers stored doubled. The local delta
// values are forced into [0, 1/2] at positive crossings and [-1/2, 0] at
// negative ones (checked on construction), and the whole table is certified
// by the state-sum tests against the Burau Alexander polynomial.
struct GradingTable {
  std::array<int, 4> twice_alexander_pos;  // indexed by Corner
  std::array<int, 4> twice_alexander_neg;
  std::array<int, 4> twice_maslov_pos;
  std::array<int, 4> twice_maslov_neg;

  static const GradingTable& standard();

  int twice_alexander(int sign, Corner c) const;
  int twice_maslov(int sign, Corner c) const;
  int twice_delta(int sign, Corner c) const;
  void validate() const;  // throws Error("internal_error") on range violation
};

// One marked corner per crossing; the induced crossing -> region map is a
// bijection onto the non-distinguished regions.
struct KauffmanState {
  std::vector<Corner> choice;
};

// Gradings are defined up to one global additive constant per diagram; only
// differences and the symmetrized state sum are meaningful.
struct StateGrading {
  int twice_alexander = 0;
  int twice_maslov = 0;
  int twice_delta() const { return twice_alexander - twice_maslov; }
};

struct DeltaSpan {
  Rational delta_min;
  Rational delta_max;
  Rational thickness_upper;  // delta_max - delta_min >= th(K)
  std::size_t state_count = 0;
};

// Requires a nonempty knot word. Throws Error("empty_word") or
// Error("not_a_knot").
Diagram build_diagram(const BraidWord& w);

// Same diagram with the marked edge moved along the outer strand: the
// distinguished pair becomes {unbounded, channel-1 segment seg_index}.
// seg_index counts the segments of channel 1 (the wrap segment is the last
// one and is the default marking). Used to test that the delta span does
// not depend on the choice.
Diagram build_diagram_with_marking(const BraidWord& w, int seg_index);

// Backtracking exact cover, crossings in word order, corners in N,E,S,W
// order; deterministic. The capped overload returns nullopt when the
// diagram has more than max_states states.
std::vector<KauffmanState> enumerate_states(const Diagram& d);
std::optional<std::vector<KauffmanState>> enumerate_states(
    const Diagram& d, std::size_t max_states);

StateGrading grade_state(const Diagram& d, const KauffmanState& s,
                         const GradingTable& table = GradingTable::standard());

// Extremes of the delta grading over all states. thickness_upper is always
// <= (n_plus + n_minus) / 2.
DeltaSpan delta_span(const Diagram& d);
std::optional<DeltaSpan> delta_span(const Diagram& d, std::size_t max_states);

// sum over states of (-1)^M * t^A, exponents rescaled off the half-integer
// lattice, then normalized symmetric. Equals alexander_poly(w).delta for
// every knot word; a normalization failure signals a grading-table bug.
LaurentPoly state_sum_alexander(const Diagram& d);

}  // namespace braid3
