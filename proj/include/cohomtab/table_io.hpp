#pragma once

#include <string>
#include <string_view>

#include "cohomtab/table.hpp"

namespace cohomtab {

// Text format:
//   n=<int> window=<lo>:<hi>
//   <i> <d> <value>        one line per nonzero entry, rows then degrees ascending
//   upper <c0> <c1> ...     optional upper tail, constant coefficient first
//   lower <i> <c0> ...      optional lower tail, one line per row 0..n
// Blank lines and lines starting with '#' are ignored on input.
std::string format_text(const CohomologyTable& t, bool pretty = false);
CohomologyTable parse_text(std::string_view text);

// JSON mirror: {"n":..,"window":[lo,hi],"entries":[[i,d,"p/q"],..],
//               "tail":{"upper":[c0,c1,..],"lower":[[..],..]}}
// Polynomials are coefficient lists, constant term first, rationals as strings.
std::string format_json(const CohomologyTable& t, bool pretty = false);
CohomologyTable parse_json(std::string_view text);

// Dispatches on the first non-blank character ('{' means JSON).
CohomologyTable parse_table(std::string_view text);

}  // namespace cohomtab
