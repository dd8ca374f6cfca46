#pragma once

// Test-only oracle: decide lattice isomorphism by exhaustive search over
// vertex tuples, solving for an integer affine map with |det| = 1.
// Independent of the canonical-form implementation.

#include <optional>
#include <vector>

#include "slp/polytope.hpp"

namespace slp::testing {

inline bool isomorphic_brute_force(const Polytope& P, const Polytope& Q) {
  if (P.dim() != Q.dim()) return false;
  if (P.num_vertices() != Q.num_vertices()) return false;
  const int d = P.dim();
  const auto& pv = P.vertices();
  const auto& qv = Q.vertices();

  // Affinely independent frame v0..vd among P's vertices.
  std::vector<int> frame = {0};
  {
    std::vector<Vec> chosen;
    for (int i = 1; i < P.num_vertices() && static_cast<int>(chosen.size()) < d; ++i) {
      std::vector<Vec> trial = chosen;
      trial.push_back(pv[i] - pv[0]);
      std::vector<Vec> pts = {Vec::zero(d)};
      for (const auto& t : trial) pts.push_back(t);
      if (detail::affine_rank(pts) == static_cast<int>(trial.size())) {
        chosen = trial;
        frame.push_back(i);
      }
    }
    if (static_cast<int>(frame.size()) != d + 1) return false;
  }
  std::vector<Vec> vcols;
  for (int i = 1; i <= d; ++i) vcols.push_back(pv[frame[i]] - pv[frame[0]]);
  Mat V = Mat::from_columns(vcols);
  Int detV = V.det();
  Mat adjV = V.adjugate();

  const int n = Q.num_vertices();
  std::vector<int> pick(d + 1);
  std::function<bool(int)> rec = [&](int depth) -> bool {
    if (depth == d + 1) {
      std::vector<Vec> wcols;
      for (int i = 1; i <= d; ++i) wcols.push_back(qv[pick[i]] - qv[pick[0]]);
      Mat W = Mat::from_columns(wcols);
      Mat num = W * adjV;  // A * detV
      Mat A(d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          if (num.at(i, j) % detV != 0) return false;
          A.at(i, j) = num.at(i, j) / detV;
        }
      if (abs_int(A.det()) != 1) return false;
      std::vector<Vec> image;
      for (const auto& x : pv) image.push_back(A * (x - pv[frame[0]]) + qv[pick[0]]);
      std::sort(image.begin(), image.end());
      return image == qv;
    }
    for (int i = 0; i < n; ++i) {
      bool used = false;
      for (int k = 0; k < depth; ++k)
        if (pick[k] == i) used = true;
      if (used) continue;
      pick[depth] = i;
      if (rec(depth + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace slp::testing
