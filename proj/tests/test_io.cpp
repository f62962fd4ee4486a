#include "support.hpp"

#include "udw/error.hpp"
#include "udw/io.hpp"

#include <doctest.h>

using namespace udw;

namespace {

std::string data_file(const std::string& name) { return std::string(UDW_TEST_DATA) + "/" + name; }

ErrorKind load_kind(const std::string& group, const std::string& cocycle = "") {
  try {
    auto g = load_group(read_json_file(data_file(group)));
    if (!cocycle.empty()) load_cocycle(read_json_file(data_file(cocycle)), g);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::BadInput;
}

}  // namespace

TEST_CASE("group files") {
  const auto c4 = load_group(read_json_file(data_file("c4_group.json")));
  CHECK(c4->hat().order() == 4);
  CHECK(c4->kernel().order() == 2);
  CHECK(c4->name(1) == "s");

  const auto d8 = load_group(read_json_file(data_file("d8_perm.json")));
  CHECK(d8->hat().order() == 8);
  CHECK(d8->kernel().order() == 4);
  CHECK(d8->odd_elements().size() == 4);

  CHECK(load_kind("malformed.json") == ErrorKind::BadInput);
  CHECK(load_kind("missing.json") == ErrorKind::BadInput);
  CHECK_THROWS_AS(load_group(nlohmann::json::parse(R"({"cayley": [[0,1],[1,0]], "grading": [1,1]})")), Error);
  CHECK_THROWS_AS(load_group(nlohmann::json::parse(R"({"permutation_generators": [[1,0]], "generator_signs": []})")), Error);
  CHECK_THROWS_AS(load_group(nlohmann::json::parse(R"({"order": 3})")), Error);
}

TEST_CASE("cocycle and character files") {
  const auto g = load_group(read_json_file(data_file("c4_group.json")));
  const auto theta = load_cocycle(read_json_file(data_file("c4_delta.json")), g);
  const auto delta = delta_cocycle(g);
  CHECK(theta.cochain().values() == delta.cochain().values());
  CHECK(load_kind("c4_group.json", "c4_corrupt.json") == ErrorKind::NotCocycle);

  const auto lambda = load_lambda(read_json_file(data_file("c4_lambda_pi.json")), *g);
  CHECK(lambda.values() == UCharacter::grading(*g).values());
  CHECK_THROWS_AS(load_lambda(nlohmann::json::parse(R"({"values": [{"element": 1, "q": "1/4"}]})"), *g), Error);
  CHECK_THROWS_AS(load_lambda(nlohmann::json::parse(R"({"values": [{"element": 9, "q": "1/2"}]})"), *g), Error);

  // Round trip through the writers.
  const auto again = load_cocycle(cocycle_to_json(theta), load_group(group_to_json(*g)));
  CHECK(again.cochain().values() == theta.cochain().values());
}

TEST_CASE("number rendering") {
  CHECK(round12(-0.0) == 0.0);
  CHECK(!std::signbit(round12(-1e-17)));
  CHECK(round12(0.1 + 0.2) == 0.3);
  CHECK(round12(2.0 / 3.0) == 0.666666666667);
  CHECK(complex_json(cplx(1.0, -1e-16)).dump() == "[1.0,0.0]");
}
