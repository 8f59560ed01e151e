#include "octo/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace octo {

std::string fmt_real(double x) {
  if (x == 0.0) return "0.0000000000000000";
  char sci[40];
  std::snprintf(sci, sizeof sci, "%.16e", x);
  const char* ep = std::strchr(sci, 'e');
  const int exp10 = std::atoi(ep + 1);
  const double ax = std::fabs(x);
  if (ax < 1e-4 || ax >= 1e6) return sci;
  char fixed[64];
  std::snprintf(fixed, sizeof fixed, "%.*f", 16 - exp10, x);
  return fixed;
}

double parse_real(std::string_view text) {
  const size_t b = text.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) throw format_error("empty number field");
  const size_t e = text.find_last_not_of(" \t\r\n");
  const std::string field(text.substr(b, e - b + 1));
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (end != field.c_str() + field.size())
    throw format_error("bad number: '" + field + "'");
  if (!std::isfinite(v)) throw format_error("non-finite number: '" + field + "'");
  return v;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    const size_t next = text.find(sep, pos);
    if (next == std::string_view::npos) {
      out.emplace_back(text.substr(pos));
      break;
    }
    out.emplace_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

}  // namespace octo
