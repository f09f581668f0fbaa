#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "nlie.h"

namespace {

struct Handle {
  nlie_algebra* ptr = nullptr;
  ~Handle() { nlie_algebra_free(ptr); }
};

struct Str {
  char* ptr = nullptr;
  ~Str() { nlie_string_free(ptr); }
  std::string view() const { return ptr ? ptr : ""; }
};

}  // namespace

TEST_CASE("builtin load and basic accessors") {
  Handle h;
  Str err;
  REQUIRE(nlie_algebra_builtin("simple:3", &h.ptr, &err.ptr) == NLIE_OK);
  CHECK(nlie_algebra_arity(h.ptr) == 3);
  CHECK(nlie_algebra_dim(h.ptr) == 4);
}

TEST_CASE("unknown builtin yields NLIE_ERROR with a message") {
  Handle h;
  Str err;
  CHECK(nlie_algebra_builtin("bogus", &h.ptr, &err.ptr) == NLIE_ERROR);
  CHECK(h.ptr == nullptr);
  CHECK(err.view().find("bogus") != std::string::npos);
}

TEST_CASE("json parse and check round trip") {
  const char* text = R"({
    "arity": 2, "dim": 3, "basis": ["e", "f", "h"],
    "brackets": [
      {"args": [0, 1], "value": {"2": "1"}},
      {"args": [0, 2], "value": {"0": "-2"}},
      {"args": [1, 2], "value": {"1": "2"}}
    ]
  })";
  Handle h;
  Str err;
  REQUIRE(nlie_algebra_from_json(text, &h.ptr, &err.ptr) == NLIE_OK);
  Str report;
  CHECK(nlie_report_check(h.ptr, 1, &report.ptr) == NLIE_OK);
  auto doc = nlohmann::json::parse(report.view());
  CHECK(doc.at("valid").get<bool>());
}

TEST_CASE("malformed json is NLIE_ERROR") {
  Handle h;
  Str err;
  CHECK(nlie_algebra_from_json("{not json", &h.ptr, &err.ptr) == NLIE_ERROR);
  Str err2;
  Handle h2;
  // duplicate args entries are an input error
  const char* dup = R"({"arity":2,"dim":2,"brackets":[
    {"args":[0,1],"value":{"0":"1"}},
    {"args":[0,1],"value":{"1":"1"}}]})";
  CHECK(nlie_algebra_from_json(dup, &h2.ptr, &err2.ptr) == NLIE_ERROR);
  CHECK(err2.view().find("duplicate") != std::string::npos);
}

TEST_CASE("invalid algebra reports NLIE_FAIL from check") {
  const char* text = R"({"arity":2,"dim":3,"brackets":[
    {"args":[0,1],"value":{"0":"1"}},
    {"args":[0,2],"value":{"0":"-2"}},
    {"args":[1,2],"value":{"1":"2"}}]})";
  Handle h;
  Str err;
  REQUIRE(nlie_algebra_from_json(text, &h.ptr, &err.ptr) == NLIE_OK);
  Str report;
  CHECK(nlie_report_check(h.ptr, 0, &report.ptr) == NLIE_FAIL);
  CHECK(report.view().find("FAIL") != std::string::npos);
}

TEST_CASE("lie report carries dimensions and flags") {
  Handle h;
  Str err;
  REQUIRE(nlie_algebra_builtin("sl2", &h.ptr, &err.ptr) == NLIE_OK);
  Str report;
  CHECK(nlie_report_lie(h.ptr, 1, &report.ptr) == NLIE_OK);
  auto doc = nlohmann::json::parse(report.view());
  CHECK(doc.at("lie_dim") == 3);
  CHECK(doc.at("relations_dim") == 0);
  CHECK(doc.at("analysis").at("semisimple").get<bool>());
  CHECK(doc.at("checks").at("ad_morphism").get<bool>());
}

TEST_CASE("cohomology report") {
  Handle h;
  Str err;
  REQUIRE(nlie_algebra_builtin("heisenberg3", &h.ptr, &err.ptr) == NLIE_OK);
  Str report;
  CHECK(nlie_report_cohomology(h.ptr, 2, 1, &report.ptr) == NLIE_OK);
  auto doc = nlohmann::json::parse(report.view());
  CHECK(doc.at("d_squared_zero").get<bool>());
  CHECK(doc.at("table")[0].at("h_dim") == 1);
}

TEST_CASE("subspace queries through the C surface") {
  Handle h;
  Str err;
  REQUIRE(nlie_algebra_builtin("heisenberg3", &h.ptr, &err.ptr) == NLIE_OK);
  const char* z = R"({"ambient": 3, "rows": [["0", "0", "1"]]})";
  Str report;
  CHECK(nlie_report_subspace(h.ptr, z, "stable", 1, &report.ptr) == NLIE_OK);
  Str report2;
  CHECK(nlie_report_subspace(h.ptr, z, "ideal", 1, &report2.ptr) == NLIE_OK);
  Str report3;
  const char* x = R"({"ambient": 3, "rows": [["1", "0", "0"]]})";
  CHECK(nlie_report_subspace(h.ptr, x, "invariant", 1, &report3.ptr) ==
        NLIE_FAIL);
  Str report4;
  CHECK(nlie_report_subspace(h.ptr, z, "bogus", 1, &report4.ptr) == NLIE_ERROR);
  Str report5;
  const char* wrong_dim = R"({"ambient": 2, "rows": [["1", "0"]]})";
  CHECK(nlie_report_subspace(h.ptr, wrong_dim, "stable", 1, &report5.ptr) ==
        NLIE_ERROR);
}

TEST_CASE("null arguments are rejected") {
  CHECK(nlie_algebra_builtin(nullptr, nullptr, nullptr) == NLIE_ERROR);
  CHECK(nlie_report_check(nullptr, 0, nullptr) == NLIE_ERROR);
  CHECK(nlie_algebra_dim(nullptr) == 0);
  nlie_algebra_free(nullptr);
  nlie_string_free(nullptr);
  CHECK(std::string(nlie_version()).size() > 0);
}
