#pragma once

#include <string_view>
#include <vector>

namespace gendawson {

/// Points a, a+h, a+2h, ... up to b. b itself is included when (b-a)/h is an
/// integer to within 1e-12 relative; the last point is then exactly b.
/// Requires h > 0 and a <= b.
std::vector<double> make_grid(double a, double b, double h);

/// Parses "A:B:H" into make_grid(A, B, H).
std::vector<double> parse_grid(std::string_view spec);

}  // namespace gendawson
