#include "degcrit/fixtures.hpp"

#include "degcrit/deskmodel.hpp"
#include "degcrit/errors.hpp"
#include "degcrit/serialize.hpp"

#include <algorithm>
#include <map>

namespace degcrit {

namespace {

SurfaceInstance build_fixture(const std::string& name) {
  if (name == "theorem1-r4") {
    // Same data as the r=4 symmetric-square configuration; kept under its own
    // name as the canonical "criterion holds" specimen.
    return build_symmetric_square_instance(4);
  }
  if (name == "p1xp1-4lines") return build_p1xp1_instance();
  if (name == "product-curve-s2") return build_product_curve_instance(2);
  if (name == "product-curve-s3") return build_product_curve_instance(3);
  if (name == "product-curve-s4") return build_product_curve_instance(4);
  if (name == "product-curve-s5") return build_product_curve_instance(5);
  if (name == "symsquare-r3") return build_symmetric_square_instance(3);
  if (name == "symsquare-r4") return build_symmetric_square_instance(4);
  if (name == "symsquare-r5") return build_symmetric_square_instance(5);
  if (name == "abelian-r4-e1") return build_abelian_isogeny_instance(4, 1);
  if (name == "hodge-violation") {
    // diag 2, off-diag 1: D^2 D_i^2 = 40 > 25 = (D.D_i)^2 — data no ample D
    // can produce; exists to exercise the rejection path.
    std::vector<std::vector<Integer>> matrix(4, std::vector<Integer>(4, Integer(1)));
    for (int i = 0; i < 4; ++i) matrix[i][i] = 2;
    return make_surface_instance({}, std::vector<Integer>(4, Integer(1)),
                                 std::move(matrix), true, true);
  }
  throw Error("unknown built-in instance \"" + name + "\"");
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "theorem1-r4",     "p1xp1-4lines",    "product-curve-s2",
      "product-curve-s3", "product-curve-s4", "product-curve-s5",
      "symsquare-r3",    "symsquare-r4",    "symsquare-r5",
      "abelian-r4-e1",   "hodge-violation"};
  return names;
}

bool is_builtin(const std::string& name) {
  const auto& names = builtin_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::string builtin_document(const std::string& name) {
  static const std::map<std::string, std::string> documents = [] {
    std::map<std::string, std::string> docs;
    for (const std::string& n : builtin_names()) {
      docs[n] = instance_to_json(build_fixture(n));
    }
    return docs;
  }();
  const auto it = documents.find(name);
  if (it == documents.end()) {
    throw Error("unknown built-in instance \"" + name + "\"");
  }
  return it->second;
}

SurfaceInstance builtin_instance(const std::string& name) {
  // Round through the document format so built-ins exercise the same parse
  // path as user files.
  return parse_instance(builtin_document(name));
}

const std::vector<ExpectedVerdict>& expected_examples() {
  static const std::vector<ExpectedVerdict> table = {
      // margins per divisor: product-curve family 4s^3 - s^3 - 6s^2 over 2s
      // divisors; all-ones family r^2 p (r - 3) with p = 1; constant-2e
      // family scales by c = 2e.
      {"p1xp1-4lines", false, false, std::nullopt, Integer(0)},
      {"product-curve-s2", false, false, std::nullopt, Integer(0)},
      {"product-curve-s3", true, false, std::nullopt, Integer(27)},
      {"product-curve-s4", true, false, std::nullopt, Integer(96)},
      {"product-curve-s5", true, false, std::nullopt, Integer(225)},
      {"symsquare-r3", false, false, Integer(1), Integer(0)},
      {"symsquare-r4", true, true, Integer(1), Integer(16)},
      {"symsquare-r5", true, true, Integer(1), Integer(50)},
      {"abelian-r4-e1", true, true, Integer(2), Integer(32)},
  };
  return table;
}

}  // namespace degcrit
