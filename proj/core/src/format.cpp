#include "hejc/format.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace hejc {

std::string format_sci(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::scientific, 8);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

}  // namespace hejc
