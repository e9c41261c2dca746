#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hybrid/graded_count.hpp"

using Json = nlohmann::json;
using Args = std::vector<std::string>;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(const Args& args) {
  std::ostringstream out, err;
  const int status = hybrid::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hybridsd_test_" + name);
}

}  // namespace

TEST_CASE("info document") {
  const auto r = run({"info", "--n", "5", "--degrees", "2,3"});
  REQUIRE(r.status == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["schema"] == hybrid::cli::kSchemaVersion);
  CHECK(doc["serre_functor"] == Json{{"twist", 1}, {"shift", 3}});
  CHECK(doc["serre_functor_y_plus"] == Json{{"twist", -1}, {"shift", 3}});
  CHECK(doc["canonical_bundle"] == Json{{"twist", 1}, {"shift", -4}});
  CHECK(doc["sdim_upper"] == "7/3");
  CHECK(doc["sdim_lower"] == "2");
  CHECK(doc["power_identity"]["serre_power"] == 3);
  CHECK(doc["power_identity"]["y_extra_shift"] == 7);
  CHECK(doc["power_identity"]["z_extra_shift"] == 12);
  CHECK_FALSE(doc.contains("fractional_cy"));
  CHECK(r.out.find('.') == std::string::npos);
}

TEST_CASE("info for a hypersurface reports the fractional CY pair") {
  const auto r = run({"info", "--n", "4", "--degrees", "3"});
  REQUIRE(r.status == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["fractional_cy"]["p"] == 3);
  CHECK(doc["fractional_cy"]["q"] == 5);
  CHECK(doc["fractional_cy"]["cy_dimension"] == "5/3");
}

TEST_CASE("info reduces linear equations") {
  const auto r = run({"info", "--n", "6", "--degrees", "1,3,2"});
  REQUIRE(r.status == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["model"]["n"] == 5);
  CHECK(doc["model"]["degrees"] == Json{2, 3});
  CHECK(doc["input"]["degrees"] == Json{1, 3, 2});
}

TEST_CASE("float rendering is opt-in") {
  const auto r = run({"info", "--n", "5", "--degrees", "2,3", "--float", "4"});
  REQUIRE(r.status == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["sdim_upper"] == "7/3");
  CHECK(doc["sdim_upper_float"].get<double>() == doctest::Approx(2.3333).epsilon(1e-9));
}

TEST_CASE("hilbert CSV") {
  const auto r = run({"hilbert", "--n", "5", "--degrees", "3,2", "--from", "0", "--to", "7"});
  REQUIRE(r.status == 0);
  CHECK(r.out ==
        "j,dim,min_r,max_r\n"
        "0,1,0,0\n"
        "1,0,,\n"
        "2,1,2,2\n"
        "3,1,2,2\n"
        "4,1,4,4\n"
        "5,1,4,4\n"
        "6,2,4,6\n"
        "7,1,6,6\n");
}

TEST_CASE("ext CSV") {
  const auto r = run({"ext", "--n", "5", "--degrees", "2,3", "--a", "0", "--b", "6"});
  REQUIRE(r.status == 0);
  CHECK(r.out == "t,dim\n4,1\n5,26\n6,32\n");
  CHECK(run({"ext", "--n", "5", "--degrees", "2,3", "--a", "2", "--m", "6"}).out == r.out);
  CHECK(run({"ext", "--n", "5", "--degrees", "2,3", "--m", "0"}).out == "t,dim\n0,1\n2,6\n");
  CHECK(run({"ext", "--n", "5", "--degrees", "2,3"}).status == 1);
}

TEST_CASE("sdim summary and CSV") {
  const auto csv = temp_file("sdim.csv");
  const auto r = run({"sdim", "--n", "4", "--degrees", "3", "--horizon", "600", "--csv", csv.string()});
  REQUIRE(r.status == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["upper_closed"] == "5/3");
  CHECK(doc["lower_closed"] == "5/3");
  hybrid::Rational upper(doc["upper_estimate"].get<std::string>());
  hybrid::Rational lower(doc["lower_estimate"].get<std::string>());
  const auto tol = hybrid::make_rational(6, 300);
  CHECK(abs(upper - hybrid::make_rational(5, 3)) <= tol);
  CHECK(abs(lower - hybrid::make_rational(5, 3)) <= tol);

  const std::string text = slurp(csv);
  CHECK(text.rfind("m,e_minus,e_plus,upper_sample,lower_sample\n301,", 0) == 0);
  std::size_t rows = 0;
  for (char ch : text) rows += ch == '\n';
  CHECK(rows == 301);
  std::filesystem::remove(csv);
}

TEST_CASE("sdim output is identical across thread counts and kernels") {
  const Args base{"sdim", "--n", "10", "--degrees", "2,3,4", "--horizon", "200"};
  auto with = [&](Args extra) {
    Args a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return run(a).out;
  };
  const auto one = with({"--threads", "1"});
  CHECK(one == with({"--threads", "3"}));
  CHECK(one == with({"--serial"}));
  CHECK(one == with({"--threads", "3"}));
}

TEST_CASE("--output writes the primary document") {
  const auto path = temp_file("info.json");
  const auto r = run({"info", "--n", "5", "--degrees", "2,3", "--output", path.string()});
  REQUIRE(r.status == 0);
  CHECK(r.out.empty());
  CHECK(Json::parse(slurp(path))["sdim_upper"] == "7/3");
  std::filesystem::remove(path);
}

TEST_CASE("validation errors are structured") {
  const auto r = run({"info", "--n", "5", "--degrees", "3,3"});
  CHECK(r.status == 1);
  CHECK(r.out.empty());
  const auto err = Json::parse(r.err);
  CHECK(err["error"]["code"] == "not_fano");

  CHECK(Json::parse(run({"info", "--n", "4", "--degrees", "1,1,1"}).err)["error"]["code"] ==
        "all_linear");
  CHECK(Json::parse(run({"sdim", "--n", "5", "--degrees", "2,3", "--horizon", "10"}).err)
            ["error"]["code"] == "horizon_too_small");
}

TEST_CASE("unknown flags are usage errors") {
  const auto r = run({"info", "--n", "5", "--degrees", "2,3", "--bogus", "1"});
  CHECK(r.status == 1);
  CHECK(Json::parse(r.err)["error"]["code"] == "usage");
  CHECK(run({}).status == 1);
  CHECK(run({"frobnicate"}).status == 1);
}

TEST_CASE("check passes on a green model") {
  const auto r = run({"check", "--n", "6", "--degrees", "2,2"});
  CHECK(r.status == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["checks"].size() >= 10);
  for (const auto& c : doc["checks"]) {
    CAPTURE(c.dump());
    CHECK(c["passed"] == true);
  }
}

TEST_CASE("check on a hypersurface") {
  const auto r = run({"check", "--n", "5", "--degrees", "3"});
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["passed"] == true);
}
