// Process-level tests: run the installed CLI binary and check exit codes,
// output structure and the JSON-lines batch contract.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string command = std::string(BRAID3_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("check exit codes follow the verdict") {
  CHECK(run("check \"s1 s2 s1 s2\" --quiet").exit_code == 0);
  CHECK(run("check \"s1 s2^-1 s1 s2^-1\" --quiet").exit_code == 0);
  CHECK(run("check \"s1 s1 s1 s2 s1^-1 s1^-1 s2 s2\" --quiet").exit_code == 10);
  CHECK(run("check \"s1 s2\" --quiet").exit_code == 11);
  CHECK(run("check \"s1 s1\" --quiet").exit_code == 2);
  CHECK(run("check \"s1 xq\" --quiet").exit_code == 2);
}

TEST_CASE("check emits a parseable certificate") {
  const RunResult r = run("check \"s1 s2 s1 s2\" --format json");
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["verdict"]["result"] == "NO_PCS");
  CHECK(j["verdict"]["reason"] == "BOYER_LINES");
  CHECK(j["alexander"]["a2"] == 1);
  CHECK(j["genus"]["certified"] == true);
}

TEST_CASE("errors surface as structured JSON on stdout") {
  const RunResult r = run("check \"s1 s1\"");
  CHECK(r.exit_code == 2);
  const Json j = Json::parse(r.out);
  CHECK(j["error"]["code"] == "not_a_knot");
  CHECK(j["error"]["message"] == "closure has 3 components");
}

TEST_CASE("invariants leaves the verdict out") {
  const RunResult r = run("invariants \"s1 s2 s1 s2\" --format json");
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK_FALSE(j.contains("verdict"));
  CHECK(j["alexander"]["delta"] == "t^-1 - 1 + t");

  CHECK(run("invariants \"\" --quiet").exit_code == 2);
}

TEST_CASE("batch processes files line by line in order") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / "braid3_cli_test_batch.txt";
  {
    std::ofstream out(path);
    out << "# census sample\n";
    out << "trefoil: s1 s2 s1 s2\n";
    out << "\n";
    out << "fig8: s1 s2^-1 s1 s2^-1\n";
    out << "bad: s1 xq\n";
    out << "s1 s2\n";
  }
  const RunResult r = run("batch " + path.string());
  std::filesystem::remove(path);
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);  // four jobs + summary

  const Json first = Json::parse(lines[0]);
  CHECK(first["input"]["label"] == "trefoil");
  CHECK(first["verdict"]["result"] == "NO_PCS");
  const Json second = Json::parse(lines[1]);
  CHECK(second["input"]["label"] == "fig8");
  const Json third = Json::parse(lines[2]);
  CHECK(third["input"]["label"] == "bad");
  CHECK(third["error"]["code"] == "syntax_error");
  const Json fourth = Json::parse(lines[3]);
  CHECK(fourth["input"]["label"].is_null());
  CHECK(fourth["verdict"]["result"] == "INCONCLUSIVE");

  const Json summary = Json::parse(lines[4]);
  CHECK(summary["summary"]["total"] == 4);
  CHECK(summary["summary"]["no_pcs"] == 2);
  CHECK(summary["summary"]["inconclusive"] == 1);
  CHECK(summary["summary"]["errors"] == 1);
  CHECK(summary["summary"]["residual"] == 0);
}

TEST_CASE("batch output order equals input order under concurrency") {
  const auto path = std::filesystem::temp_directory_path() / "braid3_cli_order.txt";
  const int jobs = 30;
  {
    std::ofstream out(path);
    for (int i = 0; i < jobs; ++i) {
      out << "w" << i << ": " << (i % 2 ? "s1 s2 s1 s2" : "s1 s2^-1 s1 s2^-1")
          << "\n";
    }
  }
  const RunResult r = run("batch " + path.string());
  std::filesystem::remove(path);
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == jobs + 1);
  for (int i = 0; i < jobs; ++i) {
    const Json j = Json::parse(lines[static_cast<std::size_t>(i)]);
    CHECK(j["input"]["label"] == "w" + std::to_string(i));
  }
  const Json summary = Json::parse(lines.back());
  CHECK(summary["summary"]["no_pcs"] == jobs);
}

TEST_CASE("empty batch file yields a zero-count summary") {
  const auto path = std::filesystem::temp_directory_path() / "braid3_cli_empty.txt";
  { std::ofstream out(path); }
  const RunResult r = run("batch " + path.string());
  std::filesystem::remove(path);
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1);
  const Json summary = Json::parse(lines[0]);
  CHECK(summary["summary"]["total"] == 0);
  CHECK(summary["summary"]["errors"] == 0);
}

TEST_CASE("missing batch file exits with code 2") {
  CHECK(run("batch /nonexistent/braid3.txt").exit_code == 2);
}

TEST_CASE("dump-diagram goes to stderr") {
  const std::string command = std::string(BRAID3_CLI_PATH) +
                              " check \"s1 s2\" --dump-diagram --quiet"
                              " 2>&1 1>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string err;
  std::array<char, 4096> buffer;
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    err.append(buffer.data(), n);
  }
  pclose(pipe);
  CHECK(err.find("crossings=2 regions=4") != std::string::npos);
  CHECK(err.find("0 + s12") != std::string::npos);
}

TEST_CASE("search flags are accepted") {
  CHECK(run("check \"s1 s2 s1 s2\" --quiet --search-budget 1000 "
            "--search-depth 16 --max-states 1000").exit_code == 0);
}

TEST_CASE("version flag") {
  const RunResult r = run("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("braid3-cosmetic 1.0.0") != std::string::npos);
}

TEST_CASE("golden certificates are byte-stable") {
  const std::filesystem::path golden_dir(BRAID3_GOLDEN_DIR);
  const RunResult trefoil = run("check \"s1 s2 s1 s2\" --format json");
  CHECK(trefoil.out == read_file(golden_dir / "trefoil_check.json"));
  const RunResult fig8 = run("check \"s1 s2^-1 s1 s2^-1\" --format json");
  CHECK(fig8.out == read_file(golden_dir / "figure8_check.json"));
}
