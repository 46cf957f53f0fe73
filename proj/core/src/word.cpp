#include "braid3/word.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "braid3/errors.hpp"

namespace braid3 {

namespace {

template <class Word>
void apply_transposition(std::array<int, 3>& image, const Word& letter_pos) {
  for (int& v : image) {
    if (v == letter_pos.first) {
      v = letter_pos.second;
    } else if (v == letter_pos.second) {
      v = letter_pos.first;
    }
  }
}

std::pair<int, int> strand_positions(const ArtinLetter& l) {
  return {l.index - 1, l.index};  // (0,1) or (1,2)
}

std::pair<int, int> strand_positions(const BandLetter& l) {
  if (l.index == 3) return {0, 2};
  return {l.index - 1, l.index};
}

template <class Word>
Permutation3 permutation_of(const Word& w) {
  Permutation3 p;
  for (const auto& l : w.letters) {
    apply_transposition(p.image, strand_positions(l));
  }
  return p;
}

template <class Word>
int exponent_sum_of(const Word& w) {
  int s = 0;
  for (const auto& l : w.letters) s += l.sign;
  return s;
}

template <class Letter>
std::string render_letters(char family, const std::vector<Letter>& letters) {
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += family;
    out += static_cast<char>('0' + l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace

bool Permutation3::is_three_cycle() const {
  // In S3 the 3-cycles are exactly the fixed-point-free permutations.
  return image[0] != 0 && image[1] != 1 && image[2] != 2;
}

int Permutation3::cycle_count() const {
  std::array<bool, 3> seen{false, false, false};
  int cycles = 0;
  for (int i = 0; i < 3; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = image[j]) seen[j] = true;
  }
  return cycles;
}

AnyWord parse_word(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::vector<ArtinLetter> artin;
  std::vector<BandLetter> band;

  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::string_view tok = text.substr(start, i - start);
    const std::size_t pos = start + 1;  // 1-based

    const auto bad = [&](const std::string& why) -> Error {
      return Error("syntax_error",
                   "bad token '" + std::string(tok) + "' at position " +
                       std::to_string(pos) + ": " + why,
                   pos);
    };

    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'a')) {
      throw bad("expected s1, s2, a1, a2 or a3");
    }
    const Alphabet tok_alphabet = tok[0] == 's' ? Alphabet::Artin : Alphabet::Band;
    const int index = tok[1] - '0';
    const int max_index = tok_alphabet == Alphabet::Artin ? 2 : 3;
    if (index < 1 || index > max_index) {
      throw bad("generator index out of range");
    }

    long long exponent = 1;
    if (tok.size() > 2) {
      if (tok[2] != '^') throw bad("expected '^' before the exponent");
      std::string_view digits = tok.substr(3);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      const char* first = digits.data();
      const char* last = digits.data() + digits.size();
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (ec != std::errc{} || ptr != last || digits.empty()) {
        throw bad("malformed exponent");
      }
    }

    if (alphabet && *alphabet != tok_alphabet) {
      throw Error("mixed_alphabet",
                  "token '" + std::string(tok) + "' at position " +
                      std::to_string(pos) +
                      " mixes alphabets within one word",
                  pos);
    }
    alphabet = tok_alphabet;

    const int sign = exponent >= 0 ? 1 : -1;
    const long long count = exponent >= 0 ? exponent : -exponent;
    for (long long k = 0; k < count; ++k) {
      if (tok_alphabet == Alphabet::Artin) {
        artin.push_back(ArtinLetter{index, sign});
      } else {
        band.push_back(BandLetter{index, sign});
      }
    }
  }

  if (alphabet && *alphabet == Alphabet::Band) return BandWord{std::move(band)};
  return BraidWord{std::move(artin)};  // empty input parses as an Artin word
}

std::string render(const BraidWord& w) { return render_letters('s', w.letters); }
std::string render(const BandWord& w) { return render_letters('a', w.letters); }
std::string render(const AnyWord& w) {
  return std::visit([](const auto& v) { return render(v); }, w);
}

Alphabet alphabet_of(const AnyWord& w) {
  return std::holds_alternative<BraidWord>(w) ? Alphabet::Artin : Alphabet::Band;
}

BandWord artin_to_band(const BraidWord& w) {
  BandWord out;
  out.letters.reserve(w.size());
  for (const auto& l : w.letters) out.letters.push_back(BandLetter{l.index, l.sign});
  return out;
}

BraidWord band_to_artin(const BandWord& w) {
  BraidWord out;
  out.letters.reserve(w.size());
  for (const auto& l : w.letters) {
    if (l.index == 3) {
      out.letters.push_back(ArtinLetter{2, 1});
      out.letters.push_back(ArtinLetter{1, l.sign});
      out.letters.push_back(ArtinLetter{2, -1});
    } else {
      out.letters.push_back(ArtinLetter{l.index, l.sign});
    }
  }
  return out;
}

Permutation3 closure_permutation(const BraidWord& w) { return permutation_of(w); }
Permutation3 closure_permutation(const BandWord& w) { return permutation_of(w); }
Permutation3 closure_permutation(const AnyWord& w) {
  return std::visit([](const auto& v) { return closure_permutation(v); }, w);
}

bool is_knot(const BraidWord& w) { return closure_permutation(w).is_three_cycle(); }
bool is_knot(const BandWord& w) { return closure_permutation(w).is_three_cycle(); }
bool is_knot(const AnyWord& w) { return closure_permutation(w).is_three_cycle(); }

int component_count(const BraidWord& w) { return closure_permutation(w).cycle_count(); }
int component_count(const BandWord& w) { return closure_permutation(w).cycle_count(); }
int component_count(const AnyWord& w) { return closure_permutation(w).cycle_count(); }

BandWord rotate_band(const BandWord& w) {
  BandWord out;
  out.letters.reserve(w.size());
  for (const auto& l : w.letters) {
    out.letters.push_back(BandLetter{l.index % 3 + 1, l.sign});
  }
  return out;
}

std::array<int, 3> letter_counts(const BandWord& w) {
  std::array<int, 3> counts{0, 0, 0};
  for (const auto& l : w.letters) ++counts[l.index - 1];
  return counts;
}

int exponent_sum(const BraidWord& w) { return exponent_sum_of(w); }
int exponent_sum(const BandWord& w) { return exponent_sum_of(w); }
int exponent_sum(const AnyWord& w) {
  return std::visit([](const auto& v) { return exponent_sum(v); }, w);
}

}  // namespace braid3
