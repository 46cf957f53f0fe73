// Command-line front end: parse a 3-braid word, run the obstruction
// pipeline, emit a certificate (text or JSON), or process a batch file as
// JSON lines. Exit codes for `check`: 0 NO_PCS, 10 RESIDUAL,
// 11 INCONCLUSIVE, 2 invalid input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "braid3/certificate.hpp"
#include "braid3/version.hpp"

namespace {

using braid3::Alphabet;
using braid3::AnyWord;
using braid3::Certificate;
using braid3::Error;
using braid3::PipelineOptions;
using braid3::VerdictResult;

struct CommonFlags {
  std::string format = "text";
  std::int64_t search_budget = braid3::RewriteBudget{}.max_states_explored;
  int search_depth = braid3::RewriteBudget{}.max_depth;
  std::int64_t max_states = PipelineOptions{}.max_kauffman_states;
  bool dump_diagram = false;
  bool quiet = false;
};

void add_common_flags(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--format", flags->format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--search-budget", flags->search_budget,
                  "Max states explored by the band-word minimizer")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--search-depth", flags->search_depth,
                  "Max depth of the band-word minimizer search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-states", flags->max_states,
                  "Kauffman state enumeration cap; past it the thickness "
                  "bound falls back to the genus bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--dump-diagram", flags->dump_diagram,
                "Write the diagram serialization to stderr");
  cmd->add_flag("--quiet", flags->quiet, "Suppress normal output");
}

PipelineOptions pipeline_options(const CommonFlags& flags, bool with_verdict) {
  PipelineOptions opts;
  opts.search_budget.max_states_explored = flags.search_budget;
  opts.search_budget.max_depth = flags.search_depth;
  opts.max_kauffman_states = flags.max_states;
  opts.with_verdict = with_verdict;
  return opts;
}

int exit_code_for(VerdictResult result) {
  switch (result) {
    case VerdictResult::NoPcs:
      return 0;
    case VerdictResult::Residual:
      return 10;
    case VerdictResult::Inconclusive:
      return 11;
  }
  return 1;
}

void maybe_dump_diagram(const AnyWord& word, const CommonFlags& flags) {
  if (!flags.dump_diagram) return;
  const braid3::BraidWord artin =
      braid3::alphabet_of(word) == Alphabet::Artin
          ? std::get<braid3::BraidWord>(word)
          : braid3::band_to_artin(std::get<braid3::BandWord>(word));
  std::cerr << braid3::build_diagram(artin).dump();
}

int run_word_command(const std::string& word_text, const CommonFlags& flags,
                     bool with_verdict) {
  try {
    const AnyWord word = braid3::parse_word(word_text);
    const Certificate cert = braid3::analyze(word, pipeline_options(flags, with_verdict));
    maybe_dump_diagram(word, flags);
    if (!flags.quiet) {
      std::cout << (flags.format == "json" ? cert.to_json() : cert.to_text())
                << (flags.format == "json" ? "\n" : "");
    }
    return with_verdict ? exit_code_for(cert.report->result) : 0;
  } catch (const Error& e) {
    if (!flags.quiet) std::cout << braid3::error_json(e, word_text) << "\n";
    return 2;
  }
}

struct BatchJob {
  std::optional<std::string> label;
  std::string word_text;
};

struct BatchLineResult {
  std::string line;
  int category = 0;  // 0 no_pcs, 1 residual, 2 inconclusive, 3 error
};

BatchLineResult run_batch_job(const BatchJob& job, const PipelineOptions& opts) {
  try {
    Certificate cert = braid3::analyze_text(job.word_text, opts);
    cert.label = job.label;
    BatchLineResult r;
    r.line = cert.to_json_line();
    switch (cert.report->result) {
      case VerdictResult::NoPcs:
        r.category = 0;
        break;
      case VerdictResult::Residual:
        r.category = 1;
        break;
      case VerdictResult::Inconclusive:
        r.category = 2;
        break;
    }
    return r;
  } catch (const Error& e) {
    return BatchLineResult{braid3::error_json(e, job.word_text, job.label), 3};
  }
}

// "label: word" when the prefix before the first ':' is nonempty and
// whitespace-free; otherwise the whole line is the word.
BatchJob parse_batch_line(const std::string& line) {
  const auto colon = line.find(':');
  if (colon != std::string::npos && colon > 0) {
    const std::string prefix = line.substr(0, colon);
    const bool clean = !prefix.empty() &&
                       prefix.find_first_of(" \t") == std::string::npos;
    if (clean) {
      return BatchJob{prefix, line.substr(colon + 1)};
    }
  }
  return BatchJob{std::nullopt, line};
}

int run_batch(const std::string& path, const CommonFlags& flags) {
  std::ifstream in(path);
  if (!in) {
    std::cout << braid3::error_json(
                     Error("io_error", "cannot open batch file: " + path), path)
              << "\n";
    return 2;
  }

  std::vector<BatchJob> jobs;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::size_t last = line.find_last_not_of(" \t\r");
    jobs.push_back(parse_batch_line(line.substr(first, last - first + 1)));
  }

  const PipelineOptions opts = pipeline_options(flags, true);
  std::array<std::int64_t, 4> counts{0, 0, 0, 0};

  // Lines are independent; run them concurrently in windows but print in
  // input order.
  const std::size_t window =
      std::max<std::size_t>(1, std::thread::hardware_concurrency()) * 4;
  for (std::size_t begin = 0; begin < jobs.size(); begin += window) {
    const std::size_t end = std::min(jobs.size(), begin + window);
    std::vector<std::future<BatchLineResult>> futures;
    futures.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
      futures.push_back(std::async(std::launch::async, run_batch_job,
                                   std::cref(jobs[i]), std::cref(opts)));
    }
    for (auto& f : futures) {
      BatchLineResult r = f.get();
      ++counts[static_cast<std::size_t>(r.category)];
      if (!flags.quiet) std::cout << r.line << "\n";
    }
  }

  nlohmann::ordered_json summary;
  summary["summary"]["total"] = jobs.size();
  summary["summary"]["no_pcs"] = counts[0];
  summary["summary"]["residual"] = counts[1];
  summary["summary"]["inconclusive"] = counts[2];
  summary["summary"]["errors"] = counts[3];
  std::cout << summary.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Purely cosmetic surgery obstructions for 3-braid knots"};
  app.set_version_flag("--version", std::string(braid3::kToolName) + " " +
                                        std::string(braid3::kVersion));
  app.require_subcommand(1);

  std::string word_text;
  std::string batch_path;
  CommonFlags check_flags, inv_flags, batch_flags;

  CLI::App* check = app.add_subcommand(
      "check", "Run the full pipeline and report the surgery verdict");
  check->add_option("word", word_text, "Braid word, e.g. \"s1 s2^-1 s1 s2^-1\"")
      ->required();
  add_common_flags(check, &check_flags);

  CLI::App* invariants = app.add_subcommand(
      "invariants", "Compute the invariants without the verdict stage");
  invariants->add_option("word", word_text, "Braid word")->required();
  add_common_flags(invariants, &inv_flags);

  CLI::App* batch = app.add_subcommand(
      "batch", "Process a file of words, one JSON certificate per line");
  batch->add_option("file", batch_path, "Batch file: `[label:] word` per line")
      ->required();
  add_common_flags(batch, &batch_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_word_command(word_text, check_flags, true);
    if (invariants->parsed()) return run_word_command(word_text, inv_flags, false);
    return run_batch(batch_path, batch_flags);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
