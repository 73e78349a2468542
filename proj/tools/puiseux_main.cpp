// Command line front end over the C API.
//
//   puiseux run <file> [--max-terms K] [--max-branches B] [--no-positive-only] [--json|--plain]
//   puiseux check <file> <solution-file> [--json|--plain]
//
// Exit status: 0 when at least one solution is found (or every checked
// solution is consistent), 2 when there are none, 1 on usage or input errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "puiseux.h"

namespace {

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int report_error(puiseux_status s) {
  std::cerr << "error: " << puiseux_status_string(s);
  if (*puiseux_last_error()) std::cerr << ": " << puiseux_last_error();
  std::cerr << '\n';
  return 1;
}

puiseux_problem* load_problem(const std::string& path, int& code) {
  auto text = slurp(path);
  if (!text) {
    std::cerr << "error: cannot read " << path << '\n';
    code = 1;
    return nullptr;
  }
  puiseux_problem* p = nullptr;
  if (auto s = puiseux_problem_parse(text->c_str(), &p); s != PUISEUX_OK) {
    code = report_error(s);
    return nullptr;
  }
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multivariate Puiseux series solutions of polynomial systems"};
  app.require_subcommand(1);

  std::string file, solution_file;
  std::size_t max_terms = 0, max_branches = 0;
  bool no_positive = false, json = false, plain = false;

  auto* run = app.add_subcommand("run", "expand the solutions of a problem file");
  run->add_option("file", file, "problem file")->required();
  run->add_option("--max-terms", max_terms, "number of expansion steps")->check(CLI::PositiveNumber);
  run->add_option("--max-branches", max_branches, "frontier size limit")->check(CLI::PositiveNumber);
  run->add_flag("--no-positive-only", no_positive, "allow non-positive first exponents");
  auto* rj = run->add_flag("--json", json, "JSON output (default)");
  auto* rp = run->add_flag("--plain", plain, "plain text output");
  rj->excludes(rp);

  auto* check = app.add_subcommand("check", "re-verify solutions against a problem file");
  check->add_option("file", file, "problem file")->required();
  check->add_option("solution-file", solution_file, "solutions as JSON")->required();
  auto* cj = check->add_flag("--json", json, "JSON output");
  auto* cp = check->add_flag("--plain", plain, "plain text output (default)");
  cj->excludes(cp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  int code = 0;
  puiseux_problem* problem = load_problem(file, code);
  if (!problem) return code;

  if (run->parsed()) {
    puiseux_status s = PUISEUX_OK;
    if (max_terms) s = puiseux_problem_set_max_terms(problem, max_terms);
    if (s == PUISEUX_OK && max_branches) s = puiseux_problem_set_max_branches(problem, max_branches);
    if (s == PUISEUX_OK && no_positive) s = puiseux_problem_set_positive_only(problem, 0);
    puiseux_result* result = nullptr;
    if (s == PUISEUX_OK) s = puiseux_run(problem, &result);
    char* text = nullptr;
    if (s == PUISEUX_OK) s = puiseux_result_render(result, plain ? PUISEUX_FORMAT_PLAIN : PUISEUX_FORMAT_JSON, &text);
    if (s != PUISEUX_OK) {
      code = report_error(s);
    } else {
      std::fputs(text, stdout);
      code = puiseux_result_solution_count(result) > 0 ? 0 : 2;
    }
    puiseux_string_free(text);
    puiseux_result_free(result);
  } else {
    auto sols = slurp(solution_file);
    if (!sols) {
      std::cerr << "error: cannot read " << solution_file << '\n';
      code = 1;
    } else {
      char* text = nullptr;
      int ok = 0;
      auto s = puiseux_check(problem, sols->c_str(), json ? PUISEUX_FORMAT_JSON : PUISEUX_FORMAT_PLAIN, &text, &ok);
      if (s != PUISEUX_OK) {
        code = report_error(s);
      } else {
        std::fputs(text, stdout);
        code = ok ? 0 : 2;
      }
      puiseux_string_free(text);
    }
  }
  puiseux_problem_free(problem);
  return code;
}
