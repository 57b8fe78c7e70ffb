#pragma once

#include <string>

namespace hejc {

/// Scientific notation with 9 significant digits ("%.8e"), locale independent.
/// Non-finite values print as "nan", "inf", "-inf".
std::string format_sci(double value);

}  // namespace hejc
