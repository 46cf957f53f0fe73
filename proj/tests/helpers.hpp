#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "braid3/word.hpp"

namespace braid3::testing {

// Letter codes: index = code/2 + 1, negative sign when code is odd.
inline ArtinLetter artin_letter(int code) {
  return ArtinLetter{code / 2 + 1, (code % 2) ? -1 : 1};
}

inline BandLetter band_letter(int code) {
  return BandLetter{code / 2 + 1, (code % 2) ? -1 : 1};
}

// The k-th Artin word of a given length, k < 4^length (base-4 digits).
inline BraidWord artin_word_at(std::uint64_t k, int length) {
  BraidWord w;
  w.letters.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    w.letters.push_back(artin_letter(static_cast<int>(k % 4)));
    k /= 4;
  }
  return w;
}

// The k-th band word of a given length, k < 6^length (base-6 digits).
inline BandWord band_word_at(std::uint64_t k, int length) {
  BandWord w;
  w.letters.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    w.letters.push_back(band_letter(static_cast<int>(k % 6)));
    k /= 6;
  }
  return w;
}

template <class Fn>
void for_each_artin_word(int max_length, Fn&& fn) {
  for (int len = 1; len <= max_length; ++len) {
    std::uint64_t total = 1;
    for (int i = 0; i < len; ++i) total *= 4;
    for (std::uint64_t k = 0; k < total; ++k) fn(artin_word_at(k, len));
  }
}

template <class Fn>
void for_each_band_word(int max_length, Fn&& fn) {
  for (int len = 0; len <= max_length; ++len) {
    std::uint64_t total = 1;
    for (int i = 0; i < len; ++i) total *= 6;
    for (std::uint64_t k = 0; k < total; ++k) fn(band_word_at(k, len));
  }
}

inline BraidWord random_artin_word(std::mt19937& rng, int length) {
  std::uniform_int_distribution<int> dist(0, 3);
  BraidWord w;
  for (int i = 0; i < length; ++i) w.letters.push_back(artin_letter(dist(rng)));
  return w;
}

inline BandWord random_band_word(std::mt19937& rng, int length) {
  std::uniform_int_distribution<int> dist(0, 5);
  BandWord w;
  for (int i = 0; i < length; ++i) w.letters.push_back(band_letter(dist(rng)));
  return w;
}

inline BandWord random_band_knot(std::mt19937& rng, int length) {
  for (;;) {
    BandWord w = random_band_word(rng, length);
    if (is_knot(w)) return w;
  }
}

inline BraidWord random_artin_knot(std::mt19937& rng, int length) {
  for (;;) {
    BraidWord w = random_artin_word(rng, length);
    if (is_knot(w)) return w;
  }
}

}  // namespace braid3::testing
