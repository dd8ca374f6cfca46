#pragma once

// Random unimodular affine maps for property tests (fixed-seed callers).

#include <random>

#include "slp/core.hpp"

namespace slp::testing {

inline AffineMap random_unimodular_map(std::mt19937& rng, int dim, int shear_bound = 2,
                                       int translate_bound = 4) {
  std::uniform_int_distribution<int> pick_pair(0, dim - 1);
  std::uniform_int_distribution<int> shear(-shear_bound, shear_bound);
  std::uniform_int_distribution<int> coin(0, 1);
  Mat a = Mat::identity(dim);
  for (int step = 0; step < 6; ++step) {
    int i = pick_pair(rng), j = pick_pair(rng);
    if (i == j) {
      // Reflect one axis.
      Mat r = Mat::identity(dim);
      if (coin(rng)) r.at(i, i) = -1;
      a = r * a;
      continue;
    }
    Mat s = Mat::identity(dim);
    s.at(i, j) = shear(rng);
    a = s * a;
  }
  std::uniform_int_distribution<int> tr(-translate_bound, translate_bound);
  Vec t = Vec::zero(dim);
  for (int i = 0; i < dim; ++i) t[i] = tr(rng);
  return AffineMap(a, t);
}

}  // namespace slp::testing
