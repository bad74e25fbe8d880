#pragma once

// Complete smooth fans in the plane, given as cyclically ordered primitive
// rays. Smoothness is det(ray_i, ray_{i+1}) = 1 for every consecutive pair
// (wrapping), and completeness is winding number one, counted exactly by
// axis crossings; no floating point enters anywhere.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "bott/intmat.hpp"
#include "bott/quasitoric.hpp"
#include "bott/semifree.hpp"

namespace bott {

struct ray2 {
  entry_t x = 0;
  entry_t y = 0;

  friend bool operator==(const ray2&, const ray2&) = default;
  friend auto operator<=>(const ray2&, const ray2&) = default;
};

inline entry_t det2(const ray2& a, const ray2& b) { return a.x * b.y - a.y * b.x; }

inline bool is_primitive(const ray2& r) { return std::gcd(r.x, r.y) == 1; }

struct fan_2d {
  std::vector<ray2> rays;  // counterclockwise

  friend bool operator==(const fan_2d&, const fan_2d&) = default;
};

namespace detail {

// Whether the CCW arc from a to b (spanning less than a half turn) passes
// the positive x-axis; the arc is half-open, containing b but not a.
inline bool arc_crosses_positive_x(const ray2& a, const ray2& b) {
  const ray2 d{1, 0};
  if (b.y == 0 && b.x > 0) return true;
  return det2(a, d) > 0 && det2(d, b) > 0;
}

}  // namespace detail

/// All consecutive determinants 1, rays primitive and distinct, and total
/// turning exactly one revolution.
inline bool is_complete_smooth(const fan_2d& f) {
  const int m = static_cast<int>(f.rays.size());
  if (m < 3) return false;
  for (const ray2& r : f.rays)
    if (!is_primitive(r)) return false;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (f.rays[i] == f.rays[j]) return false;
  int crossings = 0;
  for (int i = 0; i < m; ++i) {
    const ray2& a = f.rays[i];
    const ray2& b = f.rays[(i + 1) % m];
    if (det2(a, b) != 1) return false;
    if (detail::arc_crosses_positive_x(a, b)) ++crossings;
  }
  return crossings == 1;
}

/// Semifree subcircle vectors of the fan. The first cone restricts the
/// candidates to the four sums +-ray1 +-ray2; each candidate must decompose
/// with coefficients +-1 in every cone.
inline std::vector<circle_vector> semifree_vectors(const fan_2d& f) {
  detail::check_arg(is_complete_smooth(f), "semifree_vectors: fan is not complete smooth");
  const int m = static_cast<int>(f.rays.size());

  auto weights_ok = [&](entry_t nx, entry_t ny) {
    for (int i = 0; i < m; ++i) {
      const ray2& a = f.rays[i];
      const ray2& b = f.rays[(i + 1) % m];
      // det(a,b) = 1, so Cramer gives integer cone coefficients directly.
      const entry_t k1 = nx * b.y - ny * b.x;
      const entry_t k2 = a.x * ny - a.y * nx;
      if ((k1 != 1 && k1 != -1) || (k2 != 1 && k2 != -1)) return false;
    }
    return true;
  };

  std::vector<circle_vector> out;
  for (entry_t s1 : {entry_t{-1}, entry_t{1}}) {
    for (entry_t s2 : {entry_t{-1}, entry_t{1}}) {
      const entry_t nx = s1 * f.rays[0].x + s2 * f.rays[1].x;
      const entry_t ny = s1 * f.rays[0].y + s2 * f.rays[1].y;
      if (weights_ok(nx, ny)) out.emplace_back(std::vector<entry_t>{nx, ny});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Streams every complete smooth fan with at most max_rays rays and all ray
/// coordinates in [-coord_bound, coord_bound], normalized to start with
/// (1,0), (0,1). Depth-first: a partial ray chain extends by the det-1
/// solutions that do not wrap past the starting ray, and closes whenever the
/// last cone against ray 1 is unimodular.
template <class F>
void enumerate_fans(int max_rays, entry_t coord_bound, F&& emit) {
  detail::check_arg(max_rays >= 3, "enumerate_fans: need at least 3 rays");
  detail::check_arg(coord_bound >= 1, "enumerate_fans: need a positive coordinate bound");

  std::vector<ray2> rays{{1, 0}, {0, 1}};
  auto descend = [&](auto&& self) -> void {
    const ray2 last = rays.back();
    if (rays.size() >= 3 && det2(last, rays.front()) == 1) {
      fan_2d f{rays};
      detail::check_internal(is_complete_smooth(f), "enumerate_fans: emitted a bad fan");
      emit(f);
    }
    if (static_cast<int>(rays.size()) == max_rays) return;

    std::vector<ray2> next;
    for (entry_t x = -coord_bound; x <= coord_bound; ++x) {
      for (entry_t y = -coord_bound; y <= coord_bound; ++y) {
        const ray2 cand{x, y};
        if (det2(last, cand) != 1) continue;
        if (detail::arc_crosses_positive_x(last, cand)) continue;  // wrapped past ray 1
        next.push_back(cand);
      }
    }
    for (const ray2& cand : next) {
      rays.push_back(cand);
      self(self);
      rays.pop_back();
    }
  };
  descend(descend);
}

inline std::vector<fan_2d> enumerate_fans(int max_rays, entry_t coord_bound) {
  std::vector<fan_2d> out;
  enumerate_fans(max_rays, coord_bound, [&](const fan_2d& f) { out.push_back(f); });
  return out;
}

/// Reduced submatrix of the quasitoric manifold of a 4-ray fan in normalized
/// form: columns are rays 3 and 4 (the facets opposite to the two standard
/// ones).
inline char_matrix_cube reduced_submatrix(const fan_2d& f) {
  detail::check_arg(f.rays.size() == 4, "reduced_submatrix: fan must have 4 rays");
  detail::check_arg(f.rays[0] == ray2{1, 0} && f.rays[1] == ray2{0, 1},
                    "reduced_submatrix: fan must start with the standard rays");
  int_matrix l(2);
  l.at(0, 0) = f.rays[2].x;
  l.at(1, 0) = f.rays[2].y;
  l.at(0, 1) = f.rays[3].x;
  l.at(1, 1) = f.rays[3].y;
  return char_matrix_cube(std::move(l));
}

}  // namespace bott
