#pragma once

#include "degcrit/numeric.hpp"
#include "degcrit/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace degcrit {

// Built-in instances embedded in the library so demos and acceptance runs
// need no filesystem. Names are stable CLI-facing identifiers.
const std::vector<std::string>& builtin_names();
bool is_builtin(const std::string& name);

// The JSON document for a built-in (parseable by parse_instance); throws
// Error for unknown names.
std::string builtin_document(const std::string& name);
SurfaceInstance builtin_instance(const std::string& name);

// The expected verdict table for the `examples` run: per instance, whether
// the criterion margins are all positive, whether the uniform-product
// shortcut applies (and with which constant), and the common per-divisor
// margin (these configurations are symmetric enough that one value covers
// every divisor).
struct ExpectedVerdict {
  std::string name;
  bool margins_positive = false;
  bool uniform_applicable = false;
  std::optional<Integer> uniform_constant;
  Integer margin;  // per-divisor margin, identical across divisors
};

const std::vector<ExpectedVerdict>& expected_examples();

}  // namespace degcrit
