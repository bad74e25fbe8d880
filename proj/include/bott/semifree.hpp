#pragma once

// Semifree circle-subgroup detection for quasitoric manifolds over cubes,
// plus the (E - A)/2 column factorizations that characterize which Bott
// towers admit such subgroups (unit steps) or are products in cohomology
// (integer steps).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "bott/intmat.hpp"
#include "bott/quasitoric.hpp"

namespace bott {

/// Primitive integer vector selecting a circle subgroup of the torus.
class circle_vector {
 public:
  explicit circle_vector(std::vector<entry_t> nu) : nu_(std::move(nu)) {
    entry_t g = 0;
    for (entry_t v : nu_) g = std::gcd(g, v);
    detail::check_arg(g == 1, "circle_vector: vector must be primitive");
  }

  int n() const { return static_cast<int>(nu_.size()); }
  entry_t operator[](int i) const { return nu_[i]; }
  const std::vector<entry_t>& values() const { return nu_; }

  circle_vector negated() const {
    std::vector<entry_t> v(nu_);
    for (auto& e : v) e = -e;
    return circle_vector(std::move(v));
  }

  friend bool operator==(const circle_vector&, const circle_vector&) = default;
  friend auto operator<=>(const circle_vector& a, const circle_vector& b) {
    return a.nu_ <=> b.nu_;
  }

 private:
  std::vector<entry_t> nu_;
};

/// Tangential weights of the subcircle at a fixed point: the unique integer
/// coefficients expressing nu in the basis of facet columns at the vertex.
inline std::vector<entry_t> weights_at_vertex(const char_matrix_cube& c,
                                              const circle_vector& nu,
                                              const cube_vertex& v) {
  detail::check_arg(nu.n() == c.n(), "weights_at_vertex: dimension mismatch");
  const int_matrix cols = vertex_column_matrix(c, v);
  const entry_t d = det(cols);
  detail::check_arg(d == 1 || d == -1,
                    "weights_at_vertex: vertex columns are not unimodular (invalid matrix)");
  return solve_unimodular(cols, nu.values());
}

/// The subcircle acts semifreely with isolated fixed points iff every weight
/// at every vertex is +-1.
inline bool is_semifree(const char_matrix_cube& c, const circle_vector& nu) {
  const int n = c.n();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (entry_t k : weights_at_vertex(c, nu, cube_vertex(n, mask)))
      if (k != 1 && k != -1) return false;
  }
  return true;
}

/// All semifree subcircle vectors. The initial vertex forces every component
/// to be +-1, so the search space is the 2^n sign vectors; nu and -nu are
/// both listed (they span the same subgroup).
inline std::vector<circle_vector> enumerate_semifree_vectors(const char_matrix_cube& c) {
  const int n = c.n();
  std::vector<circle_vector> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<entry_t> v(n);
    for (int i = 0; i < n; ++i) v[i] = ((mask >> i) & 1u) ? 1 : -1;
    circle_vector nu(std::move(v));
    if (is_semifree(c, nu)) out.push_back(std::move(nu));
  }
  return out;
}

/// One nontrivial column step: column `column` of the product equals
/// e_column + scale * column `source`, with source < column and scale != 0.
struct factor_step {
  int column = 0;
  int source = 0;
  entry_t scale = 0;

  friend bool operator==(const factor_step&, const factor_step&) = default;
};

/// Factorization of a unipotent upper triangular matrix into elementary
/// column factors, one per column, identity steps omitted.
struct factorization {
  int n = 0;
  std::vector<factor_step> steps;  // strictly increasing column indices

  friend bool operator==(const factorization&, const factorization&) = default;
};

/// Replays a factorization into the matrix it claims to factor.
inline int_matrix replay(const factorization& f) {
  int_matrix m = int_matrix::identity(f.n);
  for (const auto& s : f.steps) {
    detail::check_arg(s.source < s.column && s.column < f.n && s.source >= 0 && s.scale != 0,
                      "replay: malformed step");
    for (int r = 0; r < f.n; ++r) m.at(r, s.column) += s.scale * m.at(r, s.source);
  }
  return m;
}

enum class factor_scale { unit, signed_unit, integer };

namespace detail {

inline bool scale_allowed(factor_scale kind, entry_t c) {
  switch (kind) {
    case factor_scale::unit:
      return c == 1;
    case factor_scale::signed_unit:
      return c == 1 || c == -1;
    case factor_scale::integer:
      return c != 0;
  }
  return false;
}

}  // namespace detail

/// Greedy column factorization. Column k of the factored matrix must equal
/// e_k plus an admissible multiple of a unique earlier column (uniqueness
/// from linear independence), so no backtracking is needed. Returns absence
/// when some column has no admissible step. Input must be unipotent upper
/// triangular.
inline std::optional<factorization> factorize(const int_matrix& d, factor_scale kind) {
  detail::check_arg(is_unipotent_upper_triangular(d),
                    "factorize: input must be unipotent upper triangular");
  const int n = d.n();
  factorization f{n, {}};
  for (int k = 0; k < n; ++k) {
    std::vector<entry_t> w = d.column(k);
    w[k] -= 1;
    if (std::all_of(w.begin(), w.end(), [](entry_t e) { return e == 0; })) continue;

    bool matched = false;
    for (int i = 0; i < k && !matched; ++i) {
      const entry_t c = w[i];
      if (c == 0) continue;
      bool equal = true;
      for (int r = 0; r < n; ++r) {
        if (w[r] != c * d.at(r, i)) {
          equal = false;
          break;
        }
      }
      if (!equal) continue;
      // The multiple of column i is the only candidate through row i, so a
      // failed admissibility check here decides the whole column.
      if (!detail::scale_allowed(kind, c)) return std::nullopt;
      f.steps.push_back({k, i, c});
      matched = true;
    }
    if (!matched) return std::nullopt;
  }
  detail::check_internal(replay(f) == d, "factorize: replay mismatch");
  return f;
}

/// Steps with scale exactly 1 (the semifree criterion as stated).
inline std::optional<factorization> factorize_unit(const int_matrix& d) {
  return factorize(d, factor_scale::unit);
}

/// Steps with scale +-1 (sign-relaxed variant; see the census notes).
inline std::optional<factorization> factorize_signed_unit(const int_matrix& d) {
  return factorize(d, factor_scale::signed_unit);
}

/// Steps with any nonzero integer scale (the cohomology-product criterion).
inline std::optional<factorization> factorize_integer(const int_matrix& d) {
  return factorize(d, factor_scale::integer);
}

/// (E - A)/2 when every entry of E - A is even, absence otherwise.
inline std::optional<int_matrix> half_e_minus_a(const bott_matrix& a) {
  const int n = a.n();
  int_matrix d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const entry_t e = (i == j ? 1 : 0) - a.matrix().at(i, j);
      if (e % 2 != 0) return std::nullopt;
      d.at(i, j) = e / 2;
    }
  }
  return d;
}

/// A Bott tower admits a semifree subcircle with isolated fixed points iff
/// E - A is even and (E - A)/2 factors with unit steps.
inline bool semifree_by_factorization(const bott_matrix& a) {
  const auto d = half_e_minus_a(a);
  return d && factorize_unit(*d).has_value();
}

}  // namespace bott
