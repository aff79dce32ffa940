#include "degcrit/criterion.hpp"
#include "degcrit/errors.hpp"
#include "degcrit/fixtures.hpp"
#include "degcrit/serialize.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

#include <string>

using namespace degcrit;

namespace {

std::string replace_first(std::string text, const std::string& from,
                          const std::string& to) {
  const std::size_t at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("criterion reports survive the JSON round trip unchanged") {
  for (const std::string& name :
       {"theorem1-r4", "p1xp1-4lines", "product-curve-s3", "abelian-r4-e1"}) {
    const CriterionReport report = check_degeneracy(builtin_instance(name));
    const std::string doc = report_to_json(report);
    const CriterionReport back = report_from_json(doc);
    CHECK(back == report);
    CHECK(report_to_json(back) == doc);
  }

  // Irrational pivots keep their three exact components through the trip.
  const auto inst = make_surface_instance(
      {}, {1, 1, 1, 1},
      {{1, 2, 2, 2}, {2, 1, 2, 2}, {2, 2, 1, 2}, {2, 2, 2, 1}}, true, true);
  const CriterionReport report = check_degeneracy(inst);
  const CriterionReport back = report_from_json(report_to_json(report));
  CHECK(back == report);
  CHECK(back.divisors[0].xi == QuadNum(7, -1, 21));
  CHECK(back.divisors[0].margin == QuadNum(-182, 42, 21));
}

TEST_CASE("serialization is deterministic at the byte level") {
  const auto compute = [] {
    return report_to_json(check_degeneracy(builtin_instance("theorem1-r4")));
  };
  CHECK(compute() == compute());
  CHECK(instance_to_json(builtin_instance("abelian-r4-e1")) ==
        instance_to_json(builtin_instance("abelian-r4-e1")));
  // Documents end in exactly one newline so shell pipelines behave.
  const std::string doc = compute();
  REQUIRE(!doc.empty());
  CHECK(doc.back() == '\n');
  CHECK(doc[doc.size() - 2] != '\n');
}

TEST_CASE("report parsing rejects malformed documents") {
  CHECK_THROWS_AS(report_from_json("not json"), SyntaxError);
  CHECK_THROWS_AS(report_from_json("[]"), SyntaxError);
  CHECK_THROWS_AS(report_from_json("{}"), SyntaxError);

  const std::string good = report_to_json(check_degeneracy(builtin_instance("theorem1-r4")));
  CHECK_THROWS_AS(report_from_json(replace_first(good, "\"double\"", "\"tripled\"")),
                  SyntaxError);
  CHECK_THROWS_AS(report_from_json(replace_first(good, "\"a\": \"4\"", "\"a\": \"4x\"")),
                  SyntaxError);
  CHECK_THROWS_AS(report_from_json(replace_first(good, "\"criterion_holds\": true",
                                                 "\"criterion_holds\": 1")),
                  SyntaxError);
}

TEST_CASE("filtration documents: accepted forms") {
  const auto pair = parse_filtration_document(
      testutil::read_file(testutil::data_path("basis_d3.json")));
  CHECK(pair.a.ambient_dim() == 3);
  REQUIRE(pair.a.chain().size() == 2);
  CHECK(pair.a.chain()[1].dim() == 2);
  REQUIRE(pair.b.chain().size() == 2);
  CHECK(pair.b.chain()[1].dim() == 1);
  CHECK(pair.b.chain()[1].contains(Vec{Rational(0), Rational(1), Rational(1)}));

  // Integer entries and "num/den" strings mix freely; fractions reduce.
  const auto mixed = parse_filtration_document(R"({
    "ambient_dim": 2,
    "chain_a": [[[1, "2/4"]]],
    "chain_b": []
  })");
  CHECK(mixed.a.chain()[1].contains(Vec{Rational(2), Rational(1)}));
}

TEST_CASE("filtration documents: rejected forms") {
  CHECK_THROWS_AS(parse_filtration_document("nope"), SyntaxError);
  CHECK_THROWS_AS(parse_filtration_document(R"({"chain_a": [], "chain_b": []})"),
                  SyntaxError);  // missing ambient_dim
  CHECK_THROWS_AS(parse_filtration_document(
                      R"({"ambient_dim": 0, "chain_a": [], "chain_b": []})"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_filtration_document(
                      R"({"ambient_dim": 2.5, "chain_a": [], "chain_b": []})"),
                  SyntaxError);
  CHECK_THROWS_AS(parse_filtration_document(
                      R"({"ambient_dim": 2, "chain_a": [[[1, 0.5]]], "chain_b": []})"),
                  SyntaxError);  // float entry
  CHECK_THROWS_AS(parse_filtration_document(
                      R"({"ambient_dim": 2, "chain_a": [[[1]]], "chain_b": []})"),
                  MalformedFiltrationError);  // wrong vector length
  // Chain must descend: a line does not contain the plane above it.
  CHECK_THROWS_AS(parse_filtration_document(R"({
    "ambient_dim": 2,
    "chain_a": [[[1, 0]], [[1, 0], [0, 1]]],
    "chain_b": []
  })"),
                  MalformedFiltrationError);
}
