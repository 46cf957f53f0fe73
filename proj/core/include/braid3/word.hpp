#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace braid3 {

enum class Alphabet { Artin, Band };

// sigma_1 or sigma_2, with sign +1 / -1.
struct ArtinLetter {
  int index = 1;  // 1 or 2
  int sign = 1;   // +1 or -1
  friend auto operator<=>(const ArtinLetter&, const ArtinLetter&) = default;
};

// a_1, a_2 or a_3 of the band presentation, with sign +1 / -1.
struct BandLetter {
  int index = 1;  // 1, 2 or 3
  int sign = 1;
  friend auto operator<=>(const BandLetter&, const BandLetter&) = default;
};

// Words may be empty; the closure of the empty braid is the 3-component
// unlink, which is rejected by the knot check rather than by parsing.
struct BraidWord {
  std::vector<ArtinLetter> letters;
  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;
};

struct BandWord {
  std::vector<BandLetter> letters;
  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  friend auto operator<=>(const BandWord&, const BandWord&) = default;
};

using AnyWord = std::variant<BraidWord, BandWord>;

// Strand permutation of the closed braid. image[i] is the 0-based final
// position of the strand entering at position i.
struct Permutation3 {
  std::array<int, 3> image{0, 1, 2};
  bool is_three_cycle() const;
  int cycle_count() const;  // = number of closure components
  friend bool operator==(const Permutation3&, const Permutation3&) = default;
};

// Grammar: whitespace-separated tokens; token := ("s1"|"s2"|"a1"|"a2"|"a3")
// optionally followed by "^" and a signed integer exponent. Exponents expand
// eagerly into repeated letters ("a1^-2" -> a1' a1'); "^0" expands to
// nothing. Mixing "s" and "a" tokens in one word is an error. The empty
// input parses to an empty Artin word.
AnyWord parse_word(std::string_view text);

// Canonical printer, one token per letter: "s1 s2^-1". parse_word(render(w))
// returns w for every word.
std::string render(const BraidWord& w);
std::string render(const BandWord& w);
std::string render(const AnyWord& w);

Alphabet alphabet_of(const AnyWord& w);

// sigma_1 <-> a_1, sigma_2 <-> a_2 (definitional relabeling).
BandWord artin_to_band(const BraidWord& w);

// a_3^s expands to sigma_2 sigma_1^s sigma_2^-1; preserves the closure
// permutation and the exponent sum.
BraidWord band_to_artin(const BandWord& w);

// Product of transpositions, first letter acting first:
// sigma_1/a_1 -> (1 2), sigma_2/a_2 -> (2 3), a_3 -> (1 3); signs ignored.
Permutation3 closure_permutation(const BraidWord& w);
Permutation3 closure_permutation(const BandWord& w);
Permutation3 closure_permutation(const AnyWord& w);

// True iff the closure has one component (the permutation is a 3-cycle).
bool is_knot(const BraidWord& w);
bool is_knot(const BandWord& w);
bool is_knot(const AnyWord& w);

int component_count(const BraidWord& w);
int component_count(const BandWord& w);
int component_count(const AnyWord& w);

// Cyclic generator rotation a_1 -> a_2 -> a_3 -> a_1, signs unchanged.
// The closure is isotopic to the original.
BandWord rotate_band(const BandWord& w);

// Unsigned occurrence counts (A1, A2, A3).
std::array<int, 3> letter_counts(const BandWord& w);

int exponent_sum(const BraidWord& w);
int exponent_sum(const BandWord& w);
int exponent_sum(const AnyWord& w);

}  // namespace braid3
