#include "puiseux.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "puiseux/error.hpp"
#include "puiseux/problem.hpp"
#include "puiseux/report.hpp"

struct puiseux_problem {
  puiseux::ProblemSpec spec;
};

struct puiseux_result {
  const puiseux::ProblemSpec spec;
  puiseux::ExpansionResult result;
};

namespace {

thread_local std::string last_error;

puiseux_status status_of(puiseux::ErrorCode code) {
  using puiseux::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return PUISEUX_ERR_PARSE;
    case ErrorCode::RankDeficient: return PUISEUX_ERR_RANK_DEFICIENT;
    case ErrorCode::DimensionMismatch: return PUISEUX_ERR_DIMENSION;
    case ErrorCode::NotInImage: return PUISEUX_ERR_NOT_IN_IMAGE;
    case ErrorCode::BudgetExceeded: return PUISEUX_ERR_BUDGET;
    case ErrorCode::BranchBudgetExceeded: return PUISEUX_ERR_BRANCH_BUDGET;
    case ErrorCode::InvalidOmegaSet:
    case ErrorCode::InvalidArgument: return PUISEUX_ERR_INVALID_ARGUMENT;
  }
  return PUISEUX_ERR_INTERNAL;
}

puiseux_status fail(puiseux_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

template <class F>
puiseux_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const puiseux::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(PUISEUX_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PUISEUX_ERR_INTERNAL, "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

puiseux_status puiseux_problem_parse(const char* text, puiseux_problem** out) {
  if (!text || !out) return fail(PUISEUX_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new puiseux_problem{puiseux::parse_problem(text)};
    return PUISEUX_OK;
  });
}

void puiseux_problem_free(puiseux_problem* problem) { delete problem; }

puiseux_status puiseux_problem_set_max_terms(puiseux_problem* problem, size_t k) {
  if (!problem || k == 0) return fail(PUISEUX_ERR_INVALID_ARGUMENT, "max_terms must be positive");
  problem->spec.options.max_terms = k;
  return PUISEUX_OK;
}

puiseux_status puiseux_problem_set_max_branches(puiseux_problem* problem, size_t b) {
  if (!problem || b == 0) return fail(PUISEUX_ERR_INVALID_ARGUMENT, "max_branches must be positive");
  problem->spec.options.max_branches = b;
  return PUISEUX_OK;
}

puiseux_status puiseux_problem_set_positive_only(puiseux_problem* problem, int on) {
  if (!problem) return fail(PUISEUX_ERR_INVALID_ARGUMENT, "null problem");
  problem->spec.options.positive_only = on != 0;
  return PUISEUX_OK;
}

puiseux_status puiseux_run(const puiseux_problem* problem, puiseux_result** out) {
  if (!problem || !out) return fail(PUISEUX_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto& spec = problem->spec;
    *out = new puiseux_result{spec, puiseux::expand(spec.gens, spec.weight, spec.options)};
    return PUISEUX_OK;
  });
}

void puiseux_result_free(puiseux_result* result) { delete result; }

size_t puiseux_result_solution_count(const puiseux_result* result) {
  return result ? result->result.solutions.size() : 0;
}

size_t puiseux_result_dead_count(const puiseux_result* result) {
  return result ? result->result.dead.size() : 0;
}

puiseux_status puiseux_result_render(const puiseux_result* result, puiseux_format format, char** out) {
  if (!result || !out) return fail(PUISEUX_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::string s = format == PUISEUX_FORMAT_PLAIN ? puiseux::report_plain(result->spec, result->result)
                                                   : puiseux::report_json(result->spec, result->result);
    *out = dup_string(s);
    return *out ? PUISEUX_OK : fail(PUISEUX_ERR_INTERNAL, "out of memory");
  });
}

puiseux_status puiseux_check(const puiseux_problem* problem, const char* solutions_text, puiseux_format format,
                             char** report, int* all_ok) {
  if (!problem || !solutions_text || !report) return fail(PUISEUX_ERR_INVALID_ARGUMENT, "null argument");
  *report = nullptr;
  return guarded([&] {
    auto sols = puiseux::parse_solutions(problem->spec, solutions_text);
    auto entries = puiseux::check_solutions(problem->spec, sols);
    bool ok = true;
    for (const auto& e : entries)
      if (e.claimed_exact && e.residual_order.is_finite()) ok = false;
    if (all_ok) *all_ok = ok ? 1 : 0;
    std::string s = format == PUISEUX_FORMAT_PLAIN ? puiseux::check_report_plain(entries)
                                                   : puiseux::check_report_json(entries);
    *report = dup_string(s);
    return *report ? PUISEUX_OK : fail(PUISEUX_ERR_INTERNAL, "out of memory");
  });
}

void puiseux_string_free(char* s) { std::free(s); }

const char* puiseux_last_error(void) { return last_error.c_str(); }

const char* puiseux_status_string(puiseux_status status) {
  switch (status) {
    case PUISEUX_OK: return "ok";
    case PUISEUX_ERR_PARSE: return "parse error";
    case PUISEUX_ERR_RANK_DEFICIENT: return "rank deficient weight matrix";
    case PUISEUX_ERR_DIMENSION: return "dimension mismatch";
    case PUISEUX_ERR_NOT_IN_IMAGE: return "value not in the image of the weight matrix";
    case PUISEUX_ERR_BUDGET: return "budget exceeded";
    case PUISEUX_ERR_BRANCH_BUDGET: return "branch budget exceeded";
    case PUISEUX_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PUISEUX_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

}  // extern "C"
