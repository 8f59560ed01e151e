#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace octo {

// Raised when text input (octonion literals, matrix files) fails to parse.
struct format_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 17 significant digits; lowercase scientific notation outside [1e-4, 1e6).
// Round-trips doubles exactly.
std::string fmt_real(double x);

// Strict double parser: the whole field must be consumed, value must be finite.
double parse_real(std::string_view text);

std::vector<std::string> split(std::string_view text, char sep);

}  // namespace octo
