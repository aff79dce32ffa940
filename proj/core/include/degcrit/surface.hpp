#pragma once

#include "degcrit/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace degcrit {

// A configuration of r >= 2 divisor classes on a surface: positive
// multiplicities p_i, the symmetric pairwise intersection matrix, and the two
// geometric hypotheses the caller asserts but the library cannot verify
// numerically (pairwise intersections transverse with no triple points, and
// ampleness of the weighted sum D = sum p_i D_i).
struct SurfaceInstance {
  std::vector<std::string> labels;          // size r, default "D1".."Dr"
  std::vector<Integer> p;                   // size r, all > 0
  std::vector<std::vector<Integer>> matrix; // r x r, symmetric
  bool assert_no_triple_points = false;
  bool assert_ample = false;
  std::vector<std::string> warnings;        // non-fatal oddities found on construction

  std::size_t size() const { return p.size(); }
};

// Validates and assembles an instance. Throws ShapeError (r < 2, size
// mismatches), AsymmetricMatrixError, NonPositiveMultiplicityError. Labels
// may be empty (defaults are filled in). Negative off-diagonal entries are
// legal for class data but geometrically suspicious for distinct irreducible
// divisors: they produce a warning, not an error.
SurfaceInstance make_surface_instance(std::vector<std::string> labels,
                                      std::vector<Integer> p,
                                      std::vector<std::vector<Integer>> matrix,
                                      bool assert_no_triple_points,
                                      bool assert_ample);

// Parses the JSON instance document format (see README). Throws SyntaxError
// for malformed documents or unknown keys, plus the construction errors
// above.
SurfaceInstance parse_instance(const std::string& json_text);

// The intersection numbers every later stage consumes:
//   d_dot[i]  = (D . D_i) = sum_j p_j (D_j . D_i)
//   d_sq      = D^2       = sum_{i,j} p_i p_j (D_i . D_j)
//   self_int[i] = D_i^2
struct DerivedIntersections {
  std::vector<Integer> d_dot;
  Integer d_sq;
  std::vector<Integer> self_int;
};

DerivedIntersections derive(const SurfaceInstance& inst);

// Signature screen: on a surface, any two divisor classes with D big and nef
// satisfy D^2 C^2 <= (D.C)^2. Violations prove the matrix cannot arise from
// the asserted geometry.
struct IndexScreenEntry {
  std::size_t index = 0;
  Integer lhs;  // D^2 * D_i^2
  Integer rhs;  // (D.D_i)^2
  bool ok = false;
};

struct IndexScreenReport {
  std::vector<IndexScreenEntry> entries;
  bool all_ok = false;
};

IndexScreenReport hodge_check(const SurfaceInstance& inst,
                              const DerivedIntersections& derived);

}  // namespace degcrit
