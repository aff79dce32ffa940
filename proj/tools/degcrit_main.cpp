// degcrit command-line tool: exact checks and demos over divisor
// configurations, with stable exit codes:
//   0  all checks passed / criterion holds
//   1  checks ran but the verdict is negative or a property was violated
//   2  input error (unreadable file, malformed document, bad parameters)
//   3  intersection data is geometrically inconsistent

#include "degcrit/criterion.hpp"
#include "degcrit/deskmodel.hpp"
#include "degcrit/errors.hpp"
#include "degcrit/filtration.hpp"
#include "degcrit/fixtures.hpp"
#include "degcrit/pellpoints.hpp"
#include "degcrit/quadnum.hpp"
#include "degcrit/serialize.hpp"
#include "degcrit/surface.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using degcrit::Integer;
using degcrit::QuadNum;
using degcrit::Rational;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitInconsistent = 3;
constexpr std::uint64_t kDefaultSeed = 12345;

struct RunConfig {
  std::string format = "text";  // "text" | "structured"
  bool structured() const { return format == "structured"; }
};

std::string quad_display(const QuadNum& q) {
  return degcrit::to_exact_string(q) + " [" + degcrit::to_decimal_string(q) + "]";
}

std::string read_input_text(const std::string& path_or_name) {
  if (degcrit::is_builtin(path_or_name)) {
    return degcrit::builtin_document(path_or_name);
  }
  std::ifstream in(path_or_name, std::ios::binary);
  if (!in) {
    throw degcrit::SyntaxError("cannot read \"" + path_or_name +
                               "\" (not a file, not a built-in instance)");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// --- check -------------------------------------------------------------------

void print_report_text(const degcrit::SurfaceInstance& inst,
                       const degcrit::CriterionReport& report) {
  const degcrit::DerivedIntersections derived = degcrit::derive(inst);
  std::cout << "instance: " << inst.size() << " divisors, D^2 = "
            << degcrit::to_string(derived.d_sq) << "\n";
  for (const degcrit::DivisorCriterion& dc : report.divisors) {
    std::cout << "  divisor " << dc.index << " (" << dc.label << "): "
              << "(D.D_i) = " << degcrit::to_string(derived.d_dot[dc.index])
              << ", D_i^2 = " << degcrit::to_string(derived.self_int[dc.index])
              << ", xi = " << quad_display(dc.xi)
              << ", margin = " << quad_display(dc.margin)
              << (dc.holds ? "  > 0: holds" : "  not > 0: fails") << "\n";
  }

  const degcrit::UniformProductCase& uni = report.uniform;
  if (uni.constant) {
    std::cout << "uniform products: constant c = " << degcrit::to_string(*uni.constant)
              << (uni.applicable ? ", shortcut applicable"
                                 : ", shortcut not applicable") << "\n";
  } else {
    std::cout << "uniform products: no common constant\n";
  }
  if (uni.inferred_p) {
    std::cout << "  multiplicities inferred from matrix:";
    for (const Integer& v : *uni.inferred_p) std::cout << " " << degcrit::to_string(v);
    std::cout << "\n";
  }
  for (const std::string& note : uni.notes) {
    std::cout << "  note: " << note << "\n";
  }

  // Certified parameter windows for the divisors whose margin is positive.
  for (const degcrit::DivisorCriterion& dc : report.divisors) {
    if (!dc.holds) continue;
    const degcrit::LambdaWindow win = degcrit::lambda_window(inst, derived, dc.index);
    std::cout << "  window for divisor " << win.index << ": lambda = "
              << degcrit::to_string(win.lambda) << " (dyadic exponent "
              << win.dyadic_exponent << "), cubic value = "
              << degcrit::to_string(win.cubic_value) << " > 0, budget check "
              << (win.budget_ok ? "ok" : "FAILED") << "\n";
  }

  std::cout << "assertions: no_triple_points = "
            << (report.assert_no_triple_points ? "yes" : "no")
            << ", ample = " << (report.assert_ample ? "yes" : "no") << "\n";
  for (const std::string& w : report.warnings) {
    std::cout << "warning: " << w << "\n";
  }
  std::cout << "verdict: "
            << (report.criterion_holds
                    ? "criterion holds — integral points are degenerate"
                    : "criterion does not hold")
            << "\n";
}

int run_check(const std::string& path, const RunConfig& cfg) {
  const degcrit::SurfaceInstance inst =
      degcrit::parse_instance(read_input_text(path));
  degcrit::CriterionReport report;
  try {
    report = degcrit::check_degeneracy(inst);
  } catch (const degcrit::InconsistentDataError& e) {
    if (cfg.structured()) {
      json doc;
      doc["error"] = {{"type", "inconsistent-data"}, {"message", e.what()}};
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "inconsistent data: " << e.what() << "\n";
    }
    return kExitInconsistent;
  }
  if (cfg.structured()) {
    std::cout << degcrit::report_to_json(report);
  } else {
    print_report_text(inst, report);
  }
  return report.criterion_holds ? kExitPass : kExitFail;
}

// --- examples ----------------------------------------------------------------

int run_examples(const RunConfig& cfg) {
  bool all_match = true;
  json rows = json::array();
  std::ostringstream text;
  text << "built-in example verdicts (expected vs computed):\n";
  for (const degcrit::ExpectedVerdict& expected : degcrit::expected_examples()) {
    const degcrit::SurfaceInstance inst = degcrit::builtin_instance(expected.name);
    const degcrit::CriterionReport report = degcrit::check_degeneracy(inst);

    bool match = report.all_margins_positive == expected.margins_positive &&
                 report.uniform.applicable == expected.uniform_applicable &&
                 report.uniform.constant == expected.uniform_constant;
    for (const degcrit::DivisorCriterion& dc : report.divisors) {
      if (dc.margin != QuadNum(Rational(expected.margin))) match = false;
    }
    all_match = all_match && match;

    const std::string xi_str = degcrit::to_exact_string(report.divisors[0].xi);
    text << "  " << expected.name << ": margins "
         << (report.all_margins_positive ? "positive" : "not positive")
         << " (margin " << degcrit::to_string(expected.margin) << ", xi " << xi_str
         << "), uniform "
         << (report.uniform.applicable
                 ? "applicable (c = " + degcrit::to_string(*report.uniform.constant) + ")"
                 : "not applicable")
         << (match ? "  [as expected]" : "  [MISMATCH]") << "\n";

    json row;
    row["name"] = expected.name;
    row["margins_positive"] = report.all_margins_positive;
    row["uniform_applicable"] = report.uniform.applicable;
    row["constant"] = report.uniform.constant
                          ? json(degcrit::to_string(*report.uniform.constant))
                          : json(nullptr);
    row["margin"] = degcrit::to_string(expected.margin);
    row["xi"] = xi_str;
    row["matches_expected"] = match;
    rows.push_back(std::move(row));
  }
  if (cfg.structured()) {
    json doc;
    doc["examples"] = std::move(rows);
    doc["all_match"] = all_match;
    std::cout << doc.dump(2) << "\n";
  } else {
    text << (all_match ? "all example verdicts match\n"
                       : "some example verdicts MISMATCH\n");
    std::cout << text.str();
  }
  return all_match ? kExitPass : kExitFail;
}

// --- lemma31 -----------------------------------------------------------------

// Exhaustive integer minimum of sum j*x_j with 0 <= x_j <= caps[j-1],
// sum x_j = demand; only called for small cap totals.
Integer brute_force_min(const std::vector<Integer>& caps, const Integer& demand) {
  Integer best = -1;
  std::vector<Integer> x(caps.size(), Integer(0));
  const std::function<void(std::size_t, Integer, Integer)> walk =
      [&](std::size_t level, Integer used, Integer weight) {
        if (level == caps.size()) {
          if (used == demand && (best < 0 || weight < best)) best = weight;
          return;
        }
        for (Integer take = 0; take <= caps[level]; ++take) {
          if (used + take > demand) break;
          walk(level + 1, used + take, weight + Integer(level + 1) * take);
        }
      };
  walk(0, 0, 0);
  return best;
}

int run_lemma31(std::uint64_t trials, std::uint64_t seed, const RunConfig& cfg) {
  std::mt19937_64 rng(seed);
  std::uint64_t violations = 0;
  std::uint64_t brute_checked = 0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const std::size_t h = 1 + static_cast<std::size_t>(rng() % 8);
    std::vector<Integer> caps;
    Integer total = 0;
    for (std::size_t j = 0; j < h; ++j) {
      caps.push_back(Integer(rng() % 7));
      total += caps.back();
    }
    const Integer demand =
        Integer(rng() % (static_cast<std::uint64_t>(total) + 1));
    std::vector<std::size_t> valid_cutoffs;
    Integer prefix = 0;
    for (std::size_t r = 0; r <= h; ++r) {
      if (r > 0) prefix += caps[r - 1];
      if (prefix <= demand) valid_cutoffs.push_back(r);
    }
    const std::size_t cutoff = valid_cutoffs[rng() % valid_cutoffs.size()];

    const Integer bound = degcrit::weighted_sum_lower_bound(caps, demand, cutoff);
    const Rational minimum = degcrit::min_weighted_sum(caps, demand);
    if (minimum < Rational(bound)) ++violations;
    if (total <= 12) {
      ++brute_checked;
      if (Rational(brute_force_min(caps, demand)) != minimum) ++violations;
    }
  }
  if (cfg.structured()) {
    json doc;
    doc["trials"] = trials;
    doc["seed"] = seed;
    doc["violations"] = violations;
    doc["brute_force_checked"] = brute_checked;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "weighted-sum bound suite: " << trials << " trials (seed " << seed
              << "), " << violations << " violations, " << brute_checked
              << " brute-force cross-checks\n";
  }
  return violations == 0 ? kExitPass : kExitFail;
}

// --- basis -------------------------------------------------------------------

std::string vec_to_text(const degcrit::Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += degcrit::to_string(v[i]);
  }
  return out + ")";
}

int run_basis(const std::string& path, const RunConfig& cfg) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw degcrit::SyntaxError("cannot read \"" + path + "\"");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const degcrit::FiltrationPair pair =
      degcrit::parse_filtration_document(buffer.str());
  const degcrit::AdaptedBasis basis =
      degcrit::common_adapted_basis(pair.a, pair.b);
  const bool verified = degcrit::verify_adapted(basis.vectors, pair.a, pair.b);

  if (cfg.structured()) {
    json doc;
    doc["ambient_dim"] = pair.a.ambient_dim();
    json vectors = json::array();
    for (const degcrit::Vec& v : basis.vectors) {
      json jv = json::array();
      for (const Rational& x : v) jv.push_back(degcrit::to_string(x));
      vectors.push_back(std::move(jv));
    }
    doc["vectors"] = std::move(vectors);
    doc["per_level_counts_a"] = basis.per_level_counts_a;
    doc["per_level_counts_b"] = basis.per_level_counts_b;
    doc["verified"] = verified;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "ambient dimension " << pair.a.ambient_dim() << "\n";
    std::cout << "adapted basis:\n";
    for (const degcrit::Vec& v : basis.vectors) {
      std::cout << "  " << vec_to_text(v) << "\n";
    }
    const auto print_counts = [](const char* tag, const std::vector<std::size_t>& c) {
      std::cout << tag;
      for (const std::size_t n : c) std::cout << " " << n;
      std::cout << "\n";
    };
    print_counts("vectors per level, first chain: ", basis.per_level_counts_a);
    print_counts("vectors per level, second chain:", basis.per_level_counts_b);
    std::cout << "independent verification: " << (verified ? "passed" : "FAILED")
              << "\n";
  }
  return verified ? kExitPass : kExitFail;
}

// --- deskmodel ---------------------------------------------------------------

int run_deskmodel(std::int64_t s, std::int64_t n, const RunConfig& cfg) {
  namespace desk = degcrit::desk;
  const desk::DeskInstance inst = desk::DeskInstance::make(s, n);
  const Integer dim = desk::vn_dimension(inst);
  const std::vector<Integer> dims = desk::filtration_dims(inst);
  const std::vector<Integer> dims_h = desk::filtration_dims_horizontal(inst);
  const std::vector<desk::LevelBound> bounds = desk::level_bound_report(inst);
  const desk::OrderSumCheck osc = desk::order_sum_check(inst);

  const degcrit::SurfaceInstance surf = degcrit::build_product_curve_instance(s);
  const degcrit::CriterionReport report = degcrit::check_degeneracy(surf);

  // Internal cross-checks: the model must agree with itself and with the
  // abstract criterion on this configuration.
  Integer dim_sum = 0;
  for (const Integer& x : dims) dim_sum += x;
  const Integer closed_form =
      Integer(n) * Integer(s) * Integer(n) * Integer(s);  // N^2 s^2
  const Integer expected_sum =
      (Integer(n) * s + 1) * (Integer(n) * s + 1) * n * (Integer(s) - 2) / 2;
  bool ok = dim_sum == dim;
  ok = ok && dims == dims_h;
  for (const desk::LevelBound& row : bounds) ok = ok && row.within;
  ok = ok && osc.sum == expected_sum;
  ok = ok && (osc.positive == report.all_margins_positive);
  ok = ok && (dim - closed_form == 2 * Integer(n) * s + 1);

  if (cfg.structured()) {
    json doc;
    doc["s"] = s;
    doc["n"] = n;
    doc["dimension"] = degcrit::to_string(dim);
    json jd = json::array();
    for (const Integer& x : dims) jd.push_back(degcrit::to_string(x));
    doc["level_dims"] = std::move(jd);
    json jb = json::array();
    for (const desk::LevelBound& row : bounds) {
      json j;
      j["level"] = degcrit::to_string(row.level);
      if (row.zero_space) {
        j["zero_space"] = true;
      } else {
        j["dim"] = degcrit::to_string(row.dim);
        j["cap"] = degcrit::to_string(row.cap);
        j["within"] = row.within;
        j["tight"] = row.tight;
      }
      jb.push_back(std::move(j));
    }
    doc["level_bounds"] = std::move(jb);
    doc["order_sum"] = degcrit::to_string(osc.sum);
    doc["order_sum_positive"] = osc.positive;
    doc["criterion_margins_positive"] = report.all_margins_positive;
    doc["cross_checks_ok"] = ok;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "desk model s = " << s << ", N = " << n << "\n";
    std::cout << "  function space dimension d = " << degcrit::to_string(dim)
              << " = (Ns+1)^2\n";
    std::cout << "  level dimensions x_j:";
    for (const Integer& x : dims) std::cout << " " << degcrit::to_string(x);
    std::cout << "\n  level caps:\n";
    for (const desk::LevelBound& row : bounds) {
      if (row.zero_space) {
        std::cout << "    level " << degcrit::to_string(row.level)
                  << ": zero space from here on\n";
      } else {
        std::cout << "    level " << degcrit::to_string(row.level) << ": dim "
                  << degcrit::to_string(row.dim) << " <= cap "
                  << degcrit::to_string(row.cap)
                  << (row.tight ? " (tight)" : "") << "\n";
      }
    }
    std::cout << "  order sum = " << degcrit::to_string(osc.sum) << " ("
              << (osc.positive ? "positive" : "not positive") << ")\n";
    std::cout << "  criterion on the matching configuration: margins "
              << (report.all_margins_positive ? "positive" : "not positive")
              << "\n";
    std::cout << "  cross-checks: " << (ok ? "all passed" : "FAILED") << "\n";
  }
  return ok ? kExitPass : kExitFail;
}

// --- pell --------------------------------------------------------------------

int run_pell(std::uint64_t count, const RunConfig& cfg) {
  namespace pell = degcrit::pell;
  const pell::TwoPellResult result =
      pell::two_pell_points(static_cast<std::size_t>(count));
  if (cfg.structured()) {
    json doc;
    json points = json::array();
    for (const pell::QuadIntegralPoint& pt : result.points) {
      json j;
      j["trace"] = degcrit::to_string(pt.trace);
      j["norm"] = degcrit::to_string(pt.norm);
      j["radicand"] = degcrit::to_string(pt.radicand);
      json comps;
      for (const auto& [name, value] : pt.companions) {
        comps[name] = {{"exact", degcrit::to_exact_string(value)},
                       {"approx", degcrit::to_decimal_string(value)}};
      }
      j["companions"] = std::move(comps);
      points.push_back(std::move(j));
    }
    doc["points"] = std::move(points);
    doc["skipped_rational"] = result.skipped_rational;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "simultaneous Pell points (t^2 - 2v^2 = 1, u^2 - 3v^2 = 1):\n";
    for (const pell::QuadIntegralPoint& pt : result.points) {
      std::cout << "  ";
      for (const auto& [name, value] : pt.companions) {
        std::cout << name << " = " << quad_display(value) << "  ";
      }
      std::cout << "\n";
    }
    std::cout << "skipped rational solutions: " << result.skipped_rational << "\n";
  }
  return kExitPass;
}

// --- ex13 --------------------------------------------------------------------

int run_ex13(std::int64_t max_exp, const RunConfig& cfg) {
  namespace pell = degcrit::pell;
  const std::vector<Integer> primes = {Integer(2), Integer(3)};

  // The unit box: all +-2^a 3^b with |a|, |b| <= max_exp, in a fixed order.
  std::vector<Rational> units;
  for (int sign = 0; sign < 2; ++sign) {
    for (std::int64_t a = -max_exp; a <= max_exp; ++a) {
      for (std::int64_t b = -max_exp; b <= max_exp; ++b) {
        Rational u = 1;
        for (std::int64_t i = 0; i < (a >= 0 ? a : -a); ++i) {
          if (a >= 0) {
            u *= 2;
          } else {
            u /= 2;
          }
        }
        for (std::int64_t i = 0; i < (b >= 0 ? b : -b); ++i) {
          if (b >= 0) {
            u *= 3;
          } else {
            u /= 3;
          }
        }
        units.push_back(sign == 0 ? u : Rational(-u));
      }
    }
  }

  std::uint64_t emitted = 0;
  std::uint64_t skipped = 0;
  json points = json::array();
  std::ostringstream sample;
  for (const Rational& r : units) {
    for (const Rational& s : units) {
      const std::optional<pell::QuadIntegralPoint> point =
          pell::ex13_point(r, s, primes);
      if (!point) {
        ++skipped;
        continue;
      }
      ++emitted;
      if (cfg.structured()) {
        json j;
        j["r"] = degcrit::to_string(r);
        j["s"] = degcrit::to_string(s);
        j["trace"] = degcrit::to_string(point->trace);
        j["norm"] = degcrit::to_string(point->norm);
        j["radicand"] = degcrit::to_string(point->radicand);
        points.push_back(std::move(j));
      } else if (emitted <= 10) {
        sample << "  r = " << degcrit::to_string(r) << ", s = "
               << degcrit::to_string(s) << ": x has trace "
               << degcrit::to_string(point->trace) << ", norm "
               << degcrit::to_string(point->norm) << ", radicand "
               << degcrit::to_string(point->radicand) << "\n";
      }
    }
  }
  if (cfg.structured()) {
    json doc;
    doc["max_exp"] = max_exp;
    doc["emitted"] = emitted;
    doc["skipped_rational"] = skipped;
    doc["points"] = std::move(points);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "unit-box points on X(X+1)Y = 1 over primes {2, 3}, exponents up to "
              << max_exp << ":\n";
    std::cout << sample.str();
    std::cout << "emitted " << emitted << " quadratic points (every one verified), "
              << "skipped " << skipped << " rational cases\n";
  }
  return kExitPass;
}

// --- addendum ----------------------------------------------------------------

degcrit::pell::ProjValue parse_proj(const std::string& token) {
  if (token == "inf") return degcrit::pell::ProjValue::inf();
  return degcrit::pell::ProjValue::of(degcrit::parse_rational(token));
}

std::string proj_to_string(const degcrit::pell::ProjValue& v) {
  return v.infinite ? "inf" : degcrit::to_string(v.value);
}

int run_addendum(const std::vector<std::string>& tokens, const RunConfig& cfg) {
  std::array<degcrit::pell::ProjValue, 4> images;
  for (std::size_t i = 0; i < 4; ++i) images[i] = parse_proj(tokens[i]);
  const degcrit::pell::AddendumVerdict verdict = degcrit::pell::addendum_check(images);

  if (cfg.structured()) {
    json doc;
    json imgs = json::array();
    for (const auto& v : verdict.images) imgs.push_back(proj_to_string(v));
    doc["images"] = std::move(imgs);
    doc["distinct_count"] = verdict.distinct_count;
    doc["groups"] = verdict.groups;
    doc["has_pairing"] = verdict.has_pairing;
    doc["unbalanced"] = verdict.unbalanced;
    doc["epsilons"] = verdict.epsilons;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "images:";
    for (const auto& v : verdict.images) std::cout << " " << proj_to_string(v);
    std::cout << "\ndistinct values: " << verdict.distinct_count << "\n";
    if (verdict.has_pairing) {
      std::cout << "balanced two-value split: {";
      std::cout << verdict.groups[0][0] + 1 << "," << verdict.groups[0][1] + 1
                << "} | {" << verdict.groups[1][0] + 1 << ","
                << verdict.groups[1][1] + 1 << "}\n";
      std::cout << "epsilon = (";
      for (std::size_t i = 0; i < 4; ++i) {
        std::cout << (verdict.epsilons[i] > 0 ? "+1" : "-1")
                  << (i + 1 < 4 ? ", " : ")\n");
      }
    } else if (verdict.unbalanced) {
      std::cout << "two values but a 3|1 split: no zero-sum sign vector exists "
                   "(inconsistent with a degree-2 map)\n";
    } else {
      std::cout << "no two-value pairing\n";
    }
  }
  return verdict.unbalanced ? kExitFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degcrit: exact degeneracy checks for divisor configurations on surfaces"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  std::string check_path;
  CLI::App* cmd_check =
      app.add_subcommand("check", "Evaluate the criterion on an instance file or built-in name");
  cmd_check->add_option("file", check_path, "Instance file or built-in name")->required();

  CLI::App* cmd_examples =
      app.add_subcommand("examples", "Run every built-in instance against its expected verdict");

  std::uint64_t trials = 1000;
  std::uint64_t seed = kDefaultSeed;
  CLI::App* cmd_lemma31 =
      app.add_subcommand("lemma31", "Randomized weighted-sum lower-bound suite with brute-force oracle");
  cmd_lemma31->add_option("--trials", trials, "Number of random trials")->capture_default_str();
  cmd_lemma31->add_option("--seed", seed, "Random seed")->capture_default_str();

  std::string basis_path;
  CLI::App* cmd_basis =
      app.add_subcommand("basis", "Compute a common adapted basis for two filtration chains");
  cmd_basis->add_option("file", basis_path, "Filtration pair document")->required();

  std::int64_t desk_s = 0;
  std::int64_t desk_n = 0;
  CLI::App* cmd_desk =
      app.add_subcommand("deskmodel", "Exact function-space model on the product of two lines");
  cmd_desk->add_option("--s", desk_s, "Marked points per factor (>= 2)")->required();
  cmd_desk->add_option("--N", desk_n, "Pole-order multiplier (>= 1)")->required();

  std::uint64_t pell_count = 5;
  CLI::App* cmd_pell =
      app.add_subcommand("pell", "Simultaneous Pell-equation quadratic points");
  cmd_pell->add_option("--count", pell_count, "Number of points")->capture_default_str();

  std::int64_t max_exp = 2;
  CLI::App* cmd_ex13 =
      app.add_subcommand("ex13", "Quadratic points on X(X+1)Y=1 from a unit box");
  cmd_ex13->add_option("--max-exp", max_exp, "Exponent bound for the unit box")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  std::vector<std::string> addendum_values;
  CLI::App* cmd_addendum =
      app.add_subcommand("addendum", "Two-image analysis of four projective values");
  cmd_addendum->add_option("values", addendum_values, "Four rationals or \"inf\"")
      ->expected(4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (cmd_check->parsed()) return run_check(check_path, cfg);
    if (cmd_examples->parsed()) return run_examples(cfg);
    if (cmd_lemma31->parsed()) return run_lemma31(trials, seed, cfg);
    if (cmd_basis->parsed()) return run_basis(basis_path, cfg);
    if (cmd_desk->parsed()) return run_deskmodel(desk_s, desk_n, cfg);
    if (cmd_pell->parsed()) return run_pell(pell_count, cfg);
    if (cmd_ex13->parsed()) return run_ex13(max_exp, cfg);
    if (cmd_addendum->parsed()) return run_addendum(addendum_values, cfg);
  } catch (const degcrit::InconsistentDataError& e) {
    std::cerr << "inconsistent data: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const degcrit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitInput;
}
