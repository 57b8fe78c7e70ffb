#include "hejc/laguerre.hpp"

#include <stdexcept>

namespace hejc {

double laguerre(int n, int alpha, double x) {
  if (n < 0 || alpha < 0) {
    throw std::invalid_argument("laguerre: degree and order must be non-negative");
  }
  double prev = 1.0;
  if (n == 0) return prev;
  double curr = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * curr - (k + alpha) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

}  // namespace hejc
