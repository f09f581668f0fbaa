// Command-line front end; talks to the library through the C API only.
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nlie.h"

namespace {

struct AlgebraHandle {
  nlie_algebra* ptr = nullptr;
  ~AlgebraHandle() { nlie_algebra_free(ptr); }
};

int load_algebra(const std::string& file, const std::string& builtin,
                 AlgebraHandle& handle) {
  char* error = nullptr;
  int rc;
  if (!builtin.empty())
    rc = nlie_algebra_builtin(builtin.c_str(), &handle.ptr, &error);
  else
    rc = nlie_algebra_from_file(file.c_str(), &handle.ptr, &error);
  if (rc != NLIE_OK) {
    std::fprintf(stderr, "error: %s\n", error ? error : "failed to load algebra");
    nlie_string_free(error);
  }
  return rc;
}

int emit(int rc, char* report) {
  if (report) {
    std::fputs(report, stdout);
    nlie_string_free(report);
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie algebra and cohomology of an n-Lie algebra"};
  app.require_subcommand(1);
  app.failure_message([](const CLI::App* a, const CLI::Error& e) {
    return CLI::FailureMessage::simple(a, e);
  });

  std::string file, builtin, subspace_file, query = "stable";
  bool json = false;
  int max_degree = 3;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", file, "algebra JSON file");
    cmd->add_option("--builtin", builtin,
                    "builtin name: sl2, heisenberg3, abelian:n,d, simple:n");
    cmd->add_flag("--json", json, "emit a machine-readable JSON report");
  };

  CLI::App* check = app.add_subcommand("check", "validate the Filippov identity");
  add_input(check);
  CLI::App* lie = app.add_subcommand(
      "lie", "build the quotient Lie algebra and run its checks");
  add_input(lie);
  CLI::App* cohomology =
      app.add_subcommand("cohomology", "cohomology table of the algebra");
  add_input(cohomology);
  cohomology->add_option("--max-degree", max_degree, "highest degree to compute")
      ->check(CLI::NonNegativeNumber);
  CLI::App* subspace =
      app.add_subcommand("subspace", "evaluate a predicate on a subspace");
  add_input(subspace);
  subspace->add_option("--subspace", subspace_file, "subspace JSON file")
      ->required();
  subspace->add_option("--query", query, "stable | ideal | cartan | invariant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : NLIE_ERROR;
  }

  if (file.empty() == builtin.empty()) {
    std::fprintf(stderr, "error: give exactly one of an input file or --builtin\n");
    return NLIE_ERROR;
  }

  AlgebraHandle handle;
  if (int rc = load_algebra(file, builtin, handle); rc != NLIE_OK) return rc;

  char* report = nullptr;
  if (check->parsed()) {
    int rc = nlie_report_check(handle.ptr, json, &report);
    return emit(rc, report);
  }
  if (lie->parsed()) {
    int rc = nlie_report_lie(handle.ptr, json, &report);
    return emit(rc, report);
  }
  if (cohomology->parsed()) {
    int rc = nlie_report_cohomology(handle.ptr, max_degree, json, &report);
    return emit(rc, report);
  }
  if (subspace->parsed()) {
    std::ifstream in(subspace_file);
    if (!in) {
      std::fprintf(stderr, "error: cannot open subspace file: %s\n",
                   subspace_file.c_str());
      return NLIE_ERROR;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    int rc = nlie_report_subspace(handle.ptr, buf.str().c_str(), query.c_str(),
                                  json, &report);
    if (rc == NLIE_ERROR && report) {
      std::fputs(report, stderr);
      nlie_string_free(report);
      return rc;
    }
    return emit(rc, report);
  }
  return NLIE_ERROR;
}
