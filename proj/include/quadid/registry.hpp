#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "quadid/quad1d.hpp"

namespace quadid {

struct NamedIntegral {
  std::string name;
  std::string definition;
  std::string closed_form;  // expression text, parseable by quadid::expr
  double reference = 0.0;
  std::string anchor;
  std::size_t dim = 1;
  Tolerance default_tol;
  std::function<QuadResult(const Tolerance&)> evaluate;
};

/// Sorted by name.
const std::vector<NamedIntegral>& registry();

/// nullptr when the name is unknown.
const NamedIntegral* find_integral(std::string_view name);

}  // namespace quadid
