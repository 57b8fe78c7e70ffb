#pragma once

namespace hejc {

/// Generalized Laguerre polynomial L_n^(alpha)(x), evaluated with the upward
/// three-term recurrence
///   (k+1) L_{k+1} = (2k + 1 + alpha - x) L_k - (k + alpha) L_{k-1}.
/// Throws std::invalid_argument for negative n or alpha.
double laguerre(int n, int alpha, double x);

}  // namespace hejc
