#include "degcrit/serialize.hpp"

#include "degcrit/errors.hpp"

#include <nlohmann/json.hpp>

#include <limits>
#include <utility>

namespace degcrit {

namespace {

using nlohmann::json;

std::int64_t to_document_int(const Integer& value, const char* what) {
  if (value < std::numeric_limits<std::int64_t>::min() ||
      value > std::numeric_limits<std::int64_t>::max()) {
    throw SyntaxError(std::string(what) + " " + to_string(value) +
                      " exceeds the document integer range (64-bit)");
  }
  return static_cast<std::int64_t>(value);
}

json quadnum_to_json(const QuadNum& x) {
  json j;
  j["a"] = to_string(x.rational_part());
  j["b"] = to_string(x.radical_coeff());
  j["m"] = to_string(x.radicand());
  j["exact"] = to_exact_string(x);
  j["approx"] = to_decimal_string(x);
  return j;
}

QuadNum quadnum_from_json(const json& j) {
  const Rational a = parse_rational(j.at("a").get<std::string>());
  const Rational b = parse_rational(j.at("b").get<std::string>());
  const Rational m = parse_rational(j.at("m").get<std::string>());
  if (denominator(m) != 1) {
    throw SyntaxError("radicand must be an integer, got " + to_string(m));
  }
  return QuadNum(a, b, numerator(m));
}

constexpr const char* kRootKindNames[] = {"two-real", "double", "linear",
                                          "no-real", "degenerate-all-zero"};

std::string root_kind_to_string(RootKind kind) {
  return kRootKindNames[static_cast<int>(kind)];
}

RootKind root_kind_from_string(const std::string& name) {
  for (int i = 0; i < 5; ++i) {
    if (name == kRootKindNames[i]) return static_cast<RootKind>(i);
  }
  throw SyntaxError("unknown root kind \"" + name + "\"");
}

}  // namespace

std::string instance_to_json(const SurfaceInstance& inst) {
  json doc;
  doc["labels"] = inst.labels;
  json p = json::array();
  for (const Integer& v : inst.p) p.push_back(to_document_int(v, "multiplicity"));
  doc["p"] = std::move(p);
  json matrix = json::array();
  for (const auto& row : inst.matrix) {
    json jrow = json::array();
    for (const Integer& v : row) jrow.push_back(to_document_int(v, "matrix entry"));
    matrix.push_back(std::move(jrow));
  }
  doc["matrix"] = std::move(matrix);
  doc["assert_no_triple_points"] = inst.assert_no_triple_points;
  doc["assert_ample"] = inst.assert_ample;
  return doc.dump(2) + "\n";
}

std::string report_to_json(const CriterionReport& report) {
  json doc;
  json divisors = json::array();
  for (const DivisorCriterion& dc : report.divisors) {
    json j;
    j["index"] = dc.index;
    j["label"] = dc.label;
    j["xi"] = quadnum_to_json(dc.xi);
    j["root_kind"] = root_kind_to_string(dc.root_kind);
    j["margin"] = quadnum_to_json(dc.margin);
    j["holds"] = dc.holds;
    divisors.push_back(std::move(j));
  }
  doc["divisors"] = std::move(divisors);

  json uniform;
  const auto opt_integer = [](const std::optional<Integer>& v) {
    return v ? json(to_string(*v)) : json(nullptr);
  };
  uniform["off_diagonal_constant"] = opt_integer(report.uniform.off_diagonal_constant);
  uniform["diagonal_constant"] = opt_integer(report.uniform.diagonal_constant);
  uniform["constant"] = opt_integer(report.uniform.constant);
  uniform["applicable"] = report.uniform.applicable;
  uniform["notes"] = report.uniform.notes;
  if (report.uniform.inferred_p) {
    json arr = json::array();
    for (const Integer& v : *report.uniform.inferred_p) arr.push_back(to_string(v));
    uniform["inferred_p"] = std::move(arr);
  } else {
    uniform["inferred_p"] = nullptr;
  }
  doc["uniform"] = std::move(uniform);

  doc["assert_no_triple_points"] = report.assert_no_triple_points;
  doc["assert_ample"] = report.assert_ample;
  doc["all_margins_positive"] = report.all_margins_positive;
  doc["criterion_holds"] = report.criterion_holds;
  doc["warnings"] = report.warnings;
  return doc.dump(2) + "\n";
}

CriterionReport report_from_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("report document is not valid JSON: ") + e.what());
  }
  try {
    CriterionReport report;
    for (const json& j : doc.at("divisors")) {
      DivisorCriterion dc;
      dc.index = j.at("index").get<std::size_t>();
      dc.label = j.at("label").get<std::string>();
      dc.xi = quadnum_from_json(j.at("xi"));
      dc.root_kind = root_kind_from_string(j.at("root_kind").get<std::string>());
      dc.margin = quadnum_from_json(j.at("margin"));
      dc.holds = j.at("holds").get<bool>();
      report.divisors.push_back(std::move(dc));
    }

    const json& uniform = doc.at("uniform");
    const auto opt_integer = [](const json& v) -> std::optional<Integer> {
      if (v.is_null()) return std::nullopt;
      const Rational r = parse_rational(v.get<std::string>());
      if (denominator(r) != 1) {
        throw SyntaxError("expected an integer, got " + to_string(r));
      }
      return numerator(r);
    };
    report.uniform.off_diagonal_constant = opt_integer(uniform.at("off_diagonal_constant"));
    report.uniform.diagonal_constant = opt_integer(uniform.at("diagonal_constant"));
    report.uniform.constant = opt_integer(uniform.at("constant"));
    report.uniform.applicable = uniform.at("applicable").get<bool>();
    report.uniform.notes = uniform.at("notes").get<std::vector<std::string>>();
    const json& inferred = uniform.at("inferred_p");
    if (!inferred.is_null()) {
      std::vector<Integer> p;
      for (const json& v : inferred) {
        const std::optional<Integer> n = opt_integer(v);
        p.push_back(*n);
      }
      report.uniform.inferred_p = std::move(p);
    }

    report.assert_no_triple_points = doc.at("assert_no_triple_points").get<bool>();
    report.assert_ample = doc.at("assert_ample").get<bool>();
    report.all_margins_positive = doc.at("all_margins_positive").get<bool>();
    report.criterion_holds = doc.at("criterion_holds").get<bool>();
    report.warnings = doc.at("warnings").get<std::vector<std::string>>();
    return report;
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("report document has the wrong shape: ") + e.what());
  }
}

namespace {

Filtration parse_chain(const json& levels, std::size_t ambient_dim) {
  std::vector<Subspace> chain;
  for (const json& level : levels) {
    if (!level.is_array()) {
      throw SyntaxError("each chain level must be an array of vectors");
    }
    std::vector<Vec> gens;
    for (const json& vec : level) {
      if (!vec.is_array()) {
        throw SyntaxError("each vector must be an array of rationals");
      }
      Vec v;
      for (const json& entry : vec) {
        if (entry.is_string()) {
          v.push_back(parse_rational(entry.get<std::string>()));
        } else if (entry.is_number_integer()) {
          v.push_back(Rational(entry.get<std::int64_t>()));
        } else {
          throw SyntaxError("vector entries must be integers or \"num/den\" strings");
        }
      }
      gens.push_back(std::move(v));
    }
    chain.push_back(Subspace::span(ambient_dim, gens));
  }
  return Filtration::from_levels(ambient_dim, chain);
}

}  // namespace

FiltrationPair parse_filtration_document(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("filtration document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("ambient_dim") || !doc.contains("chain_a") ||
      !doc.contains("chain_b")) {
    throw SyntaxError(
        "filtration document needs \"ambient_dim\", \"chain_a\" and \"chain_b\"");
  }
  if (!doc["ambient_dim"].is_number_integer()) {
    throw SyntaxError("\"ambient_dim\" must be an integer");
  }
  const std::int64_t d = doc["ambient_dim"].get<std::int64_t>();
  if (d < 1) {
    throw SyntaxError("\"ambient_dim\" must be at least 1");
  }
  if (!doc["chain_a"].is_array() || !doc["chain_b"].is_array()) {
    throw SyntaxError("\"chain_a\" and \"chain_b\" must be arrays of levels");
  }
  FiltrationPair pair;
  pair.a = parse_chain(doc["chain_a"], static_cast<std::size_t>(d));
  pair.b = parse_chain(doc["chain_b"], static_cast<std::size_t>(d));
  return pair;
}

}  // namespace degcrit
