#pragma once

#include <string_view>

namespace hejc {

/// Laser detuning omega_l = omega_0 + K nu with K in {-1, 0, +1}.
enum class Sideband : int { red = -1, carrier = 0, blue = 1 };

inline int index_of(Sideband s) { return static_cast<int>(s); }

/// Throws std::invalid_argument for |K| > 1.
Sideband sideband_from_index(int K);

/// Accepts "red", "carrier", "blue" or "-1", "0", "1"/"+1".
Sideband parse_sideband(std::string_view text);

std::string_view to_string(Sideband s);

}  // namespace hejc
