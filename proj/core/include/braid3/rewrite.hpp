#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "braid3/numeric.hpp"
#include "braid3/word.hpp"

namespace braid3 {

struct RewriteBudget {
  std::int64_t max_states_explored = 200'000;
  int max_depth = 64;
};

struct MinimizationResult {
  BandWord best_word;        // canonical cyclic rotation of the best word found
  std::size_t length = 0;
  Rational genus_upper;      // (length - 2) / 2, valid for knot closures
  bool certified_minimal = false;
  std::int64_t states_explored = 0;
  bool budget_exhausted = false;
};

// Deletes adjacent a_j^e a_j^-e pairs until none remain.
BandWord free_reduce(const BandWord& w);

// All words one move away from w: an adjacent pair replaced using one of the
// length-preserving consequences of a2 a1 = a3 a2 = a1 a3 (the positive
// family, its inverse family a1' a2' = a2' a3' = a3' a1', and the six mixed
// two-letter identities obtained by solving the relation), or a single
// cyclic shift in either direction; every result is freely reduced. All
// neighbors share w's exponent sum and closure conjugacy class.
std::vector<BandWord> rewrite_neighbors(const BandWord& w);

// Lexicographically minimal cyclic rotation under the letter order
// a1 < a1^-1 < a2 < a2^-1 < a3 < a3^-1.
BandWord canonical_cyclic_form(const BandWord& w);

// Breadth-first search over rewrite_neighbors from free_reduce(w), memoized
// on canonical cyclic forms. Returns the shortest word found (ties broken by
// canonical form). Requires a knot closure. Exhausting the budget is not an
// error: the result is still a sound upper bound, flagged uncertified.
// certified_minimal is true only when genus_lower_hint is given and equals
// (best length - 2) / 2.
MinimizationResult minimize_band_length(
    const BandWord& w, const RewriteBudget& budget = {},
    std::optional<Rational> genus_lower_hint = std::nullopt);

// Among w, rotate_band(w), rotate_band^2(w): the first rotation minimizing
// (A3, A1 + A2 + 3*A3). Guarantees A3 <= length/3.
BandWord best_rotation(const BandWord& w);

// A1 + A2 + 3*A3 of best_rotation(w) = crossing count of the closed-braid
// diagram obtained from the rotated word.
int crossing_bound(const BandWord& w);

}  // namespace braid3
