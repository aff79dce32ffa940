#include "degcrit/surface.hpp"

#include "degcrit/errors.hpp"

#include <nlohmann/json.hpp>

#include <set>
#include <utility>

namespace degcrit {

SurfaceInstance make_surface_instance(std::vector<std::string> labels,
                                      std::vector<Integer> p,
                                      std::vector<std::vector<Integer>> matrix,
                                      bool assert_no_triple_points,
                                      bool assert_ample) {
  const std::size_t r = p.size();
  if (r < 2) {
    throw ShapeError("instance needs at least 2 divisors, got " +
                     std::to_string(r));
  }
  if (matrix.size() != r) {
    throw ShapeError("matrix has " + std::to_string(matrix.size()) +
                     " rows for " + std::to_string(r) + " divisors");
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (matrix[i].size() != r) {
      throw ShapeError("matrix row " + std::to_string(i) + " has " +
                       std::to_string(matrix[i].size()) + " entries, expected " +
                       std::to_string(r));
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (matrix[i][j] != matrix[j][i]) {
        throw AsymmetricMatrixError("matrix[" + std::to_string(i) + "][" +
                                    std::to_string(j) + "] = " +
                                    to_string(matrix[i][j]) + " but matrix[" +
                                    std::to_string(j) + "][" + std::to_string(i) +
                                    "] = " + to_string(matrix[j][i]));
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (p[i] <= 0) {
      throw NonPositiveMultiplicityError("p[" + std::to_string(i) + "] = " +
                                         to_string(p[i]) +
                                         "; multiplicities must be positive");
    }
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < r; ++i) labels.push_back("D" + std::to_string(i + 1));
  } else if (labels.size() != r) {
    throw ShapeError("got " + std::to_string(labels.size()) + " labels for " +
                     std::to_string(r) + " divisors");
  }

  SurfaceInstance inst;
  inst.labels = std::move(labels);
  inst.p = std::move(p);
  inst.matrix = std::move(matrix);
  inst.assert_no_triple_points = assert_no_triple_points;
  inst.assert_ample = assert_ample;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (inst.matrix[i][j] < 0) {
        inst.warnings.push_back(
            "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
            to_string(inst.matrix[i][j]) +
            " is negative: distinct irreducible divisors meet non-negatively, "
            "so this entry can only describe non-effective class data");
      }
    }
  }
  return inst;
}

namespace {

using nlohmann::json;

Integer json_to_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) {
      return Integer(v.get<std::uint64_t>());
    }
    return Integer(v.get<std::int64_t>());
  }
  throw SyntaxError(where + " must be an integer (64-bit range in documents)");
}

}  // namespace

SurfaceInstance parse_instance(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("instance document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw SyntaxError("instance document must be a JSON object");
  }

  static const std::set<std::string> known_keys = {
      "labels", "p", "matrix", "assert_no_triple_points", "assert_ample"};
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!known_keys.contains(key)) {
      throw SyntaxError("unknown key \"" + key + "\" in instance document");
    }
  }
  if (!doc.contains("p")) throw SyntaxError("instance document is missing \"p\"");
  if (!doc.contains("matrix")) throw SyntaxError("instance document is missing \"matrix\"");

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const json& jl = doc["labels"];
    if (!jl.is_array()) throw SyntaxError("\"labels\" must be an array of strings");
    for (const json& v : jl) {
      if (!v.is_string()) throw SyntaxError("\"labels\" must be an array of strings");
      labels.push_back(v.get<std::string>());
    }
  }

  const json& jp = doc["p"];
  if (!jp.is_array()) throw SyntaxError("\"p\" must be an array of integers");
  std::vector<Integer> p;
  for (std::size_t i = 0; i < jp.size(); ++i) {
    p.push_back(json_to_integer(jp[i], "p[" + std::to_string(i) + "]"));
  }

  const json& jm = doc["matrix"];
  if (!jm.is_array()) throw SyntaxError("\"matrix\" must be an array of arrays of integers");
  std::vector<std::vector<Integer>> matrix;
  for (std::size_t i = 0; i < jm.size(); ++i) {
    const json& row = jm[i];
    if (!row.is_array()) {
      throw SyntaxError("\"matrix\" row " + std::to_string(i) + " must be an array");
    }
    std::vector<Integer> out_row;
    for (std::size_t j = 0; j < row.size(); ++j) {
      out_row.push_back(json_to_integer(
          row[j], "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }
    matrix.push_back(std::move(out_row));
  }

  bool no_triple = false;
  bool ample = false;
  if (doc.contains("assert_no_triple_points")) {
    const json& v = doc["assert_no_triple_points"];
    if (!v.is_boolean()) throw SyntaxError("\"assert_no_triple_points\" must be a boolean");
    no_triple = v.get<bool>();
  }
  if (doc.contains("assert_ample")) {
    const json& v = doc["assert_ample"];
    if (!v.is_boolean()) throw SyntaxError("\"assert_ample\" must be a boolean");
    ample = v.get<bool>();
  }

  return make_surface_instance(std::move(labels), std::move(p), std::move(matrix),
                               no_triple, ample);
}

DerivedIntersections derive(const SurfaceInstance& inst) {
  const std::size_t r = inst.size();
  DerivedIntersections out;
  out.d_dot.resize(r);
  out.self_int.resize(r);
  out.d_sq = 0;
  for (std::size_t i = 0; i < r; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < r; ++j) {
      acc += inst.p[j] * inst.matrix[j][i];
    }
    out.d_dot[i] = acc;
    out.d_sq += inst.p[i] * acc;
    out.self_int[i] = inst.matrix[i][i];
  }
  return out;
}

IndexScreenReport hodge_check(const SurfaceInstance& inst,
                              const DerivedIntersections& derived) {
  IndexScreenReport report;
  report.all_ok = true;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    IndexScreenEntry e;
    e.index = i;
    e.lhs = derived.d_sq * derived.self_int[i];
    e.rhs = derived.d_dot[i] * derived.d_dot[i];
    e.ok = e.lhs <= e.rhs;
    report.all_ok = report.all_ok && e.ok;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace degcrit
