#pragma once

#include "vtypes/classifier.hpp"

namespace vtypes {

/// Largest possible number of very typical vertices in a graph of order n.
constexpr int max_very_typical(int n) {
  if (n <= 4) return 0;
  if (n <= 6) return n - 4;
  if (n <= 9) return n - 3;
  return n - 2;
}

/// Largest possible number of typical vertices in a graph of order n.
constexpr int max_typical(int n) {
  if (n <= 4) return 0;
  if (n <= 8) return n - 3;
  return n - 2;
}

/// Smallest order admitting a graph with every vertex type present.
inline constexpr int kMinPantypicalOrder = 9;
/// Size of the sparsest pantypical graph of that order.
inline constexpr int kMinPantypicalSize = 11;

}  // namespace vtypes
