#include "braid3/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "braid3/errors.hpp"

namespace braid3 {

namespace {

// Letter codes 0..5 in the canonical order a1 < a1^-1 < a2 < a2^-1 < a3 < a3^-1.
using Code = std::uint8_t;
using CodeWord = std::vector<Code>;

Code encode(const BandLetter& l) {
  return static_cast<Code>((l.index - 1) * 2 + (l.sign < 0 ? 1 : 0));
}

BandLetter decode(Code c) { return BandLetter{c / 2 + 1, (c % 2) ? -1 : 1}; }

CodeWord encode_word(const BandWord& w) {
  CodeWord out;
  out.reserve(w.size());
  for (const auto& l : w.letters) out.push_back(encode(l));
  return out;
}

BandWord decode_word(const CodeWord& w) {
  BandWord out;
  out.letters.reserve(w.size());
  for (Code c : w) out.letters.push_back(decode(c));
  return out;
}

bool inverse_pair(Code a, Code b) { return (a >> 1) == (b >> 1) && a != b; }

CodeWord reduce(CodeWord w) {
  CodeWord out;
  out.reserve(w.size());
  for (Code c : w) {
    if (!out.empty() && inverse_pair(out.back(), c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

// Directed pair rewrites generated by a2 a1 = a3 a2 = a1 a3. Codes:
// a1=0 a1'=1 a2=2 a2'=3 a3=4 a3'=5.
struct PairRule {
  Code from[2];
  Code to[2];
};

const std::vector<PairRule>& pair_rules() {
  static const std::vector<PairRule> rules = [] {
    std::vector<PairRule> r;
    const auto family = [&r](std::initializer_list<std::array<Code, 2>> eq) {
      for (const auto& x : eq) {
        for (const auto& y : eq) {
          if (x != y) r.push_back(PairRule{{x[0], x[1]}, {y[0], y[1]}});
        }
      }
    };
    family({{2, 0}, {4, 2}, {0, 4}});  // a2 a1 = a3 a2 = a1 a3
    family({{1, 3}, {3, 5}, {5, 1}});  // inverses
    family({{5, 2}, {2, 1}});          // a3' a2 = a2 a1'
    family({{3, 4}, {0, 3}});          // a2' a3 = a1 a2'
    family({{1, 4}, {4, 3}});          // a1' a3 = a3 a2'
    family({{5, 0}, {2, 5}});          // a3' a1 = a2 a3'
    family({{1, 2}, {4, 1}});          // a1' a2 = a3 a1'
    family({{3, 0}, {0, 5}});          // a2' a1 = a1 a3'
    return r;
  }();
  return rules;
}

CodeWord rotated_left(const CodeWord& w) {
  if (w.size() < 2) return w;
  CodeWord out(w.begin() + 1, w.end());
  out.push_back(w.front());
  return out;
}

CodeWord rotated_right(const CodeWord& w) {
  if (w.size() < 2) return w;
  CodeWord out;
  out.reserve(w.size());
  out.push_back(w.back());
  out.insert(out.end(), w.begin(), w.end() - 1);
  return out;
}

std::vector<CodeWord> neighbors_of(const CodeWord& w) {
  std::vector<CodeWord> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    for (const auto& rule : pair_rules()) {
      if (w[i] == rule.from[0] && w[i + 1] == rule.from[1]) {
        CodeWord next = w;
        next[i] = rule.to[0];
        next[i + 1] = rule.to[1];
        out.push_back(reduce(std::move(next)));
      }
    }
  }
  out.push_back(reduce(rotated_left(w)));
  out.push_back(reduce(rotated_right(w)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CodeWord canonical(const CodeWord& w) {
  if (w.size() < 2) return w;
  CodeWord best = w;
  CodeWord cur = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    cur = rotated_left(cur);
    if (cur < best) best = cur;
  }
  return best;
}

// Free reduction of the closure: linear reduction plus cancellation across
// the wrap, since the word is only defined up to rotation.
CodeWord cyclic_reduce(CodeWord w) {
  w = reduce(std::move(w));
  while (w.size() >= 2 && inverse_pair(w.front(), w.back())) {
    w.pop_back();
    w.erase(w.begin());
    w = reduce(std::move(w));
  }
  return w;
}

// Search expansion: pair rewrites at every cyclic position (wrap included),
// cyclically reduced. Rotation-invariant, so memoizing visited words under
// canonical rotations never hides a move.
std::vector<CodeWord> cyclic_neighbors(const CodeWord& w) {
  std::vector<CodeWord> out;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (j == i) break;  // single-letter word
    for (const auto& rule : pair_rules()) {
      if (w[i] == rule.from[0] && w[j] == rule.from[1]) {
        CodeWord next = w;
        next[i] = rule.to[0];
        next[j] = rule.to[1];
        out.push_back(cyclic_reduce(std::move(next)));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

BandWord free_reduce(const BandWord& w) { return decode_word(reduce(encode_word(w))); }

std::vector<BandWord> rewrite_neighbors(const BandWord& w) {
  std::vector<BandWord> out;
  for (const auto& cw : neighbors_of(encode_word(w))) out.push_back(decode_word(cw));
  return out;
}

BandWord canonical_cyclic_form(const BandWord& w) {
  return decode_word(canonical(encode_word(w)));
}

MinimizationResult minimize_band_length(const BandWord& w,
                                        const RewriteBudget& budget,
                                        std::optional<Rational> genus_lower_hint) {
  if (budget.max_states_explored <= 0 || budget.max_depth <= 0) {
    throw Error("internal_error", "rewrite budget must be positive");
  }
  if (!is_knot(w)) {
    throw Error("not_a_knot", "closure has " +
                                  std::to_string(component_count(w)) +
                                  " components");
  }

  const CodeWord start = canonical(cyclic_reduce(encode_word(w)));
  CodeWord best = start;

  std::set<CodeWord> visited;
  visited.insert(start);
  std::deque<std::pair<CodeWord, int>> queue;
  queue.emplace_back(start, 0);

  std::int64_t explored = 0;
  while (!queue.empty() && explored < budget.max_states_explored) {
    auto [cur, depth] = std::move(queue.front());
    queue.pop_front();
    ++explored;
    if (depth >= budget.max_depth) continue;
    for (const auto& next : cyclic_neighbors(cur)) {
      CodeWord key = canonical(next);
      if (!visited.insert(key).second) continue;
      if (key.size() < best.size() || (key.size() == best.size() && key < best)) {
        best = key;
      }
      queue.emplace_back(std::move(key), depth + 1);
    }
  }

  MinimizationResult result;
  result.best_word = decode_word(best);
  result.length = best.size();
  // Knot closures always keep an even length >= 2 under these moves.
  result.genus_upper = Rational(BigInt(static_cast<long long>(best.size())) - 2, 2);
  result.states_explored = explored;
  result.budget_exhausted = !queue.empty();
  result.certified_minimal =
      genus_lower_hint.has_value() && result.genus_upper == *genus_lower_hint;
  return result;
}

BandWord best_rotation(const BandWord& w) {
  BandWord best = w;
  auto counts = letter_counts(w);
  auto key = [](const std::array<int, 3>& c) {
    return std::pair<int, int>(c[2], c[0] + c[1] + 3 * c[2]);
  };
  auto best_key = key(counts);
  BandWord cur = w;
  for (int k = 1; k < 3; ++k) {
    cur = rotate_band(cur);
    const auto cur_key = key(letter_counts(cur));
    if (cur_key < best_key) {
      best = cur;
      best_key = cur_key;
    }
  }
  return best;
}

int crossing_bound(const BandWord& w) {
  const auto counts = letter_counts(best_rotation(w));
  return counts[0] + counts[1] + 3 * counts[2];
}

}  // namespace braid3
