#include "nlie.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "nlie/algebra.hpp"
#include "nlie/report.hpp"

struct nlie_algebra {
  nlie::NLieAlgebra value;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_message(char** slot, const std::string& message) {
  if (slot) *slot = dup_string(message);
}

template <typename Fn>
int make_algebra(nlie_algebra** out, char** error_message, Fn&& fn) {
  if (!out) return NLIE_ERROR;
  *out = nullptr;
  try {
    *out = new nlie_algebra{fn()};
    return NLIE_OK;
  } catch (const std::exception& e) {
    set_message(error_message, e.what());
    return NLIE_ERROR;
  }
}

template <typename Fn>
int make_report(char** report, Fn&& fn) {
  try {
    nlie::Report rep = fn();
    set_message(report, rep.text);
    return rep.exit_code;
  } catch (const std::exception& e) {
    set_message(report, std::string("error: ") + e.what() + "\n");
    return NLIE_ERROR;
  }
}

}  // namespace

extern "C" {

const char* nlie_version(void) { return "0.1.0"; }

int nlie_algebra_from_file(const char* path, nlie_algebra** out,
                           char** error_message) {
  if (!path) return NLIE_ERROR;
  return make_algebra(out, error_message,
                      [&] { return nlie::load_algebra_file(path); });
}

int nlie_algebra_from_json(const char* json_text, nlie_algebra** out,
                           char** error_message) {
  if (!json_text) return NLIE_ERROR;
  return make_algebra(out, error_message,
                      [&] { return nlie::algebra_from_json(json_text); });
}

int nlie_algebra_builtin(const char* name, nlie_algebra** out,
                         char** error_message) {
  if (!name) return NLIE_ERROR;
  return make_algebra(out, error_message, [&] { return nlie::builtin(name); });
}

void nlie_algebra_free(nlie_algebra* algebra) { delete algebra; }

void nlie_string_free(char* s) { delete[] s; }

size_t nlie_algebra_arity(const nlie_algebra* algebra) {
  return algebra ? algebra->value.arity() : 0;
}

size_t nlie_algebra_dim(const nlie_algebra* algebra) {
  return algebra ? algebra->value.dim() : 0;
}

int nlie_report_check(const nlie_algebra* algebra, int json, char** report) {
  if (!algebra) return NLIE_ERROR;
  return make_report(report,
                     [&] { return nlie::report_check(algebra->value, json); });
}

int nlie_report_lie(const nlie_algebra* algebra, int json, char** report) {
  if (!algebra) return NLIE_ERROR;
  return make_report(report,
                     [&] { return nlie::report_lie(algebra->value, json); });
}

int nlie_report_cohomology(const nlie_algebra* algebra, int max_degree,
                           int json, char** report) {
  if (!algebra || max_degree < 0) return NLIE_ERROR;
  return make_report(report, [&] {
    return nlie::report_cohomology(algebra->value,
                                   static_cast<std::size_t>(max_degree), json);
  });
}

int nlie_report_subspace(const nlie_algebra* algebra, const char* subspace_json,
                         const char* query, int json, char** report) {
  if (!algebra || !subspace_json || !query) return NLIE_ERROR;
  return make_report(report, [&] {
    nlie::Subspace s = nlie::subspace_from_json(subspace_json);
    return nlie::report_subspace(algebra->value, s, query, json);
  });
}

}  // extern "C"
