#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "braid3/alexander.hpp"
#include "braid3/errors.hpp"
#include "braid3/kauffman.hpp"
#include "braid3/obstruction.hpp"
#include "braid3/rewrite.hpp"
#include "braid3/word.hpp"

namespace braid3 {

struct PipelineOptions {
  RewriteBudget search_budget{};
  std::int64_t max_kauffman_states = 250'000;
  bool with_verdict = true;
};

struct ThicknessBlock {
  std::optional<Rational> delta_span;  // absent when the state cap was hit
  std::optional<std::int64_t> state_count;
  bool state_cap_exceeded = false;
  Rational lemma_bound;  // (5/3)(genus upper + 1)
  Rational upper;        // min of the available bounds
  std::string active;    // "delta_span" or "genus_lemma"
};

// Archived result of one pipeline run. All numeric fields are exact;
// rationals render as "p/q" strings in the JSON form. The JSON schema is
// stable across runs of the same tool version.
struct Certificate {
  std::string input_word;  // canonical rendering
  Alphabet alphabet = Alphabet::Artin;
  std::optional<std::string> label;
  bool knot = false;
  std::string band_word;
  std::size_t band_length = 0;
  MinimizationResult minimization;
  GenusBounds genus;
  int crossing_bound_value = 0;
  AlexanderData alexander;
  ThicknessBlock thickness;
  std::optional<ObstructionReport> report;  // absent for invariants-only runs
  PipelineOptions options;

  std::string to_json() const;       // pretty, 2-space indent
  std::string to_json_line() const;  // compact single line (batch output)
  std::string to_text() const;
};

// Full pipeline: word checks -> band minimization -> Alexander invariants ->
// Kauffman thickness bound -> (optionally) the surgery verdict. Throws
// Error for invalid input (parse failure, non-knot closure).
Certificate analyze(const AnyWord& word, const PipelineOptions& opts = {});
Certificate analyze_text(std::string_view text, const PipelineOptions& opts = {});

// Structured error object, one line, schema-stable.
std::string error_json(const Error& e, std::string_view word_text,
                       const std::optional<std::string>& label = std::nullopt);

}  // namespace braid3
