#pragma once

// Characteristic matrices of quasitoric manifolds over the n-cube, kept in
// refined form (E | L) and represented by the reduced submatrix L alone.
// Facets are indexed 1..2n with F_i and F_{n+i} opposite; the column of F_i
// is the i-th standard basis vector and the column of F_{n+i} is the i-th
// column of L. A vertex of the cube picks one facet from each opposite pair.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bott/intmat.hpp"

namespace bott {

/// Reduced submatrix of a characteristic matrix over a cube. The wrapper
/// does not enforce validity; use is_valid_characteristic, invalid matrices
/// are data for the census.
struct char_matrix_cube {
  int_matrix lambda_star;

  char_matrix_cube() = default;
  explicit char_matrix_cube(int_matrix m) : lambda_star(std::move(m)) {}

  int n() const { return lambda_star.n(); }

  friend bool operator==(const char_matrix_cube&, const char_matrix_cube&) = default;
};

/// Vertex of the n-cube as a bit vector: bit i clear selects facet F_{i+1},
/// bit i set selects the opposite facet F_{n+i+1}.
struct cube_vertex {
  int n = 0;
  std::uint32_t mask = 0;

  cube_vertex(int n_, std::uint32_t mask_) : n(n_), mask(mask_) {
    detail::check_arg(n >= 1 && n <= 31 && mask < (1u << n), "cube_vertex: bad mask");
  }

  bool opposite_side(int i) const { return (mask >> i) & 1u; }
};

/// Upper triangular integer matrix with all diagonal entries -1, the height-n
/// Bott tower datum; entry (i, j), i < j, is the j-th twist over stage i.
class bott_matrix {
 public:
  bott_matrix() = default;

  explicit bott_matrix(int_matrix m) : a_(std::move(m)) {
    for (int i = 0; i < a_.n(); ++i) {
      detail::check_arg(a_.at(i, i) == -1, "bott_matrix: diagonal must be -1");
      for (int j = 0; j < i; ++j)
        detail::check_arg(a_.at(i, j) == 0, "bott_matrix: must be upper triangular");
    }
  }

  static bott_matrix minus_identity(int n) {
    return bott_matrix(int_matrix::identity(n).negated());
  }

  /// Hirzebruch surface datum: height 2, single twist m.
  static bott_matrix hirzebruch(entry_t m) {
    int_matrix a = int_matrix::identity(2).negated();
    a.at(0, 1) = m;
    return bott_matrix(std::move(a));
  }

  int n() const { return a_.n(); }
  const int_matrix& matrix() const { return a_; }
  entry_t twist(int i, int j) const { return a_.at(i, j); }

  friend bool operator==(const bott_matrix&, const bott_matrix&) = default;

 private:
  int_matrix a_;
};

/// Non-singularity over the cube: every principal minor of L (all 2^n index
/// subsets) is +-1, equivalently the facet columns at every vertex form a
/// lattice basis.
inline bool is_valid_characteristic(const int_matrix& l) {
  const std::uint32_t full = (1u << l.n()) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const entry_t m = principal_minor(l, mask);
    if (m != 1 && m != -1) return false;
  }
  return true;
}

inline bool is_valid_characteristic(const char_matrix_cube& c) {
  return is_valid_characteristic(c.lambda_star);
}

/// The n facet columns selected by a vertex: e_i on the near side, the i-th
/// column of the reduced submatrix on the far side.
inline std::vector<std::vector<entry_t>> vertex_columns(const char_matrix_cube& c,
                                                        const cube_vertex& v) {
  detail::check_arg(v.n == c.n(), "vertex_columns: dimension mismatch");
  std::vector<std::vector<entry_t>> cols;
  cols.reserve(c.n());
  for (int i = 0; i < c.n(); ++i) {
    if (v.opposite_side(i)) {
      cols.push_back(c.lambda_star.column(i));
    } else {
      std::vector<entry_t> e(c.n(), 0);
      e[i] = 1;
      cols.push_back(std::move(e));
    }
  }
  return cols;
}

/// Same columns assembled into a matrix (column j = j-th selected column).
inline int_matrix vertex_column_matrix(const char_matrix_cube& c, const cube_vertex& v) {
  const auto cols = vertex_columns(c, v);
  int_matrix m(c.n());
  for (int j = 0; j < c.n(); ++j)
    for (int i = 0; i < c.n(); ++i) m.at(i, j) = cols[j][i];
  return m;
}

/// Fixed-point sign at a vertex: the principal minor of -L on the far-side
/// index set (the inward normals of the cube make the general sign formula
/// collapse to exactly this minor).
inline int sign_of_fixed_point(const char_matrix_cube& c, const cube_vertex& v) {
  detail::check_arg(v.n == c.n(), "sign_of_fixed_point: dimension mismatch");
  const entry_t m = principal_minor(c.lambda_star.negated(), v.mask);
  detail::check_internal(m == 1 || m == -1, "sign_of_fixed_point: minor not a unit");
  return static_cast<int>(m);
}

/// Bott tower recognition: every principal minor of -L equals 1.
inline bool is_bott_tower(const char_matrix_cube& c) {
  const int_matrix neg = c.lambda_star.negated();
  const std::uint32_t full = (1u << c.n()) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask)
    if (principal_minor(neg, mask) != 1) return false;
  return true;
}

/// The omniorientation-free shape criterion: some permutation conjugation
/// makes the matrix upper triangular. Diagonal signs are an omniorientation
/// choice, not part of the zero pattern, so this is weaker than
/// is_bott_tower exactly on sign-flipped representatives.
inline std::optional<permutation> conjugate_to_upper_triangular(const int_matrix& l) {
  std::optional<permutation> out;
  for_each_permutation(l.n(), [&](const std::vector<int>& im) {
    permutation s{im};
    const int_matrix m = conjugate(l, s);
    for (int i = 0; i < m.n(); ++i)
      for (int j = 0; j < i; ++j)
        if (m.at(i, j) != 0) return true;
    out = std::move(s);
    return false;
  });
  return out;
}

struct bott_recognition {
  bott_matrix a;
  permutation sigma;  // conjugate(lambda_star, sigma) == a.matrix() transposed
};

namespace detail {

inline bool is_lower_triangular_minus_one_diag(const int_matrix& m) {
  for (int i = 0; i < m.n(); ++i) {
    if (m.at(i, i) != -1) return false;
    for (int j = i + 1; j < m.n(); ++j)
      if (m.at(i, j) != 0) return false;
  }
  return true;
}

}  // namespace detail

/// Extracts the Bott tower datum from a recognized matrix: the smallest
/// permutation conjugating L to the transpose of an upper triangular matrix
/// with -1 diagonal. Requires is_bott_tower.
inline bott_recognition bott_matrix_from(const char_matrix_cube& c) {
  detail::check_arg(is_bott_tower(c), "bott_matrix_from: not a Bott tower");
  std::optional<bott_recognition> out;
  for_each_permutation(c.n(), [&](const std::vector<int>& im) {
    permutation s{im};
    int_matrix m = conjugate(c.lambda_star, s);
    if (detail::is_lower_triangular_minus_one_diag(m)) {
      out = bott_recognition{bott_matrix(m.transposed()), std::move(s)};
      return false;
    }
    return true;
  });
  detail::check_internal(out.has_value(), "bott_matrix_from: recognizer found no witness");
  detail::check_internal(conjugate(c.lambda_star, out->sigma) == out->a.matrix().transposed(),
                         "bott_matrix_from: witness replay failed");
  return *out;
}

/// Witness that some omniorientation change (realized as row/column sign
/// flips of L) turns the manifold into a Bott tower. Bit i of a flip mask
/// negates row/column i before the permutation conjugation is applied.
struct omniorientation_witness {
  bott_matrix a;
  std::uint32_t row_flips = 0;
  std::uint32_t col_flips = 0;
  permutation sigma;
};

inline int_matrix flip_signs(const int_matrix& m, std::uint32_t row_mask,
                             std::uint32_t col_mask) {
  int_matrix r = m;
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) {
      entry_t e = m.at(i, j);
      if ((row_mask >> i) & 1u) e = -e;
      if ((col_mask >> j) & 1u) e = -e;
      r.at(i, j) = e;
    }
  return r;
}

/// Exhaustive search over 2^n row flips x 2^n column flips x n! conjugations
/// for a Bott form; absence is a value. Flip masks and permutation are tried
/// in increasing order, so an unflipped witness is preferred.
inline std::optional<omniorientation_witness> bott_up_to_omniorientation(
    const char_matrix_cube& c) {
  const int n = c.n();
  detail::check_arg(n <= 8, "bott_up_to_omniorientation: rank too large for search");
  for (std::uint32_t rf = 0; rf < (1u << n); ++rf) {
    for (std::uint32_t cf = 0; cf < (1u << n); ++cf) {
      const int_matrix flipped = flip_signs(c.lambda_star, rf, cf);
      std::optional<omniorientation_witness> out;
      for_each_permutation(n, [&](const std::vector<int>& im) {
        permutation s{im};
        int_matrix m = conjugate(flipped, s);
        if (detail::is_lower_triangular_minus_one_diag(m)) {
          out = omniorientation_witness{bott_matrix(m.transposed()), rf, cf, std::move(s)};
          return false;
        }
        return true;
      });
      if (out) return out;
    }
  }
  return std::nullopt;
}

/// Characteristic matrix of the characteristic submanifold over a facet
/// (F_{i+1} for side 0, F_{n+i+1} for side 1), an (n-1)-cube quasitoric.
/// The lattice is projected along the facet's own column onto the complement
/// spanned by the standard vectors away from the smallest unit pivot, the
/// surviving 2(n-1) columns are re-expressed, and the result is re-refined.
/// Rank-1 results are normalized to [-1].
inline char_matrix_cube restrict_to_facet(const char_matrix_cube& c, int i, int side) {
  const int n = c.n();
  detail::check_arg(n >= 2, "restrict_to_facet: rank must be at least 2");
  detail::check_arg(i >= 0 && i < n, "restrict_to_facet: facet index out of range");
  detail::check_arg(side == 0 || side == 1, "restrict_to_facet: side must be 0 or 1");

  std::vector<entry_t> lam(n, 0);
  if (side == 0) {
    lam[i] = 1;
  } else {
    lam = c.lambda_star.column(i);
  }

  // Smallest-index unit pivot; exists because the diagonal minors are units.
  int pivot = -1;
  for (int p = 0; p < n; ++p) {
    if (lam[p] == 1 || lam[p] == -1) {
      pivot = p;
      break;
    }
  }
  detail::check_internal(pivot >= 0, "restrict_to_facet: facet column has no unit entry");
  const entry_t eps = lam[pivot];

  // pi(v) = (v_j - eps * v_pivot * lam_j) over coordinates j != pivot.
  auto project = [&](const std::vector<entry_t>& v) {
    std::vector<entry_t> w;
    w.reserve(n - 1);
    for (int j = 0; j < n; ++j) {
      if (j == pivot) continue;
      w.push_back(v[j] - eps * v[pivot] * lam[j]);
    }
    return w;
  };

  int_matrix first(n - 1), second(n - 1);
  int col = 0;
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    std::vector<entry_t> e(n, 0);
    e[j] = 1;
    const auto pe = project(e);
    const auto pl = project(c.lambda_star.column(j));
    for (int r = 0; r < n - 1; ++r) {
      first.at(r, col) = pe[r];
      second.at(r, col) = pl[r];
    }
    ++col;
  }

  const entry_t d = det(first);
  detail::check_internal(d == 1 || d == -1, "restrict_to_facet: projection degenerated");
  int_matrix reduced = unimodular_inverse(first) * second;

  if (reduced.n() == 1 && reduced.at(0, 0) == 1) reduced.at(0, 0) = -1;
  return char_matrix_cube(std::move(reduced));
}

/// Streams all valid reduced submatrices of the given rank with entries in
/// [lo, hi], in lexicographic row-major order. Diagonal entries are pruned
/// to +-1 before the full minor test runs.
template <class F>
void enumerate_char_matrices(int n, entry_t lo, entry_t hi, F&& emit) {
  detail::check_arg(n >= 1 && n <= 6, "enumerate_char_matrices: rank out of range");
  detail::check_arg(lo <= hi, "enumerate_char_matrices: empty entry range");
  int_matrix m(n);
  const int cells = n * n;
  auto fill = [&](auto&& self, int cell) -> void {
    if (cell == cells) {
      if (is_valid_characteristic(m)) emit(char_matrix_cube(m));
      return;
    }
    const int i = cell / n, j = cell % n;
    if (i == j) {
      for (entry_t v : {entry_t{-1}, entry_t{1}}) {
        if (v < lo || v > hi) continue;
        m.at(i, j) = v;
        self(self, cell + 1);
      }
    } else {
      for (entry_t v = lo; v <= hi; ++v) {
        m.at(i, j) = v;
        self(self, cell + 1);
      }
    }
    m.at(i, j) = 0;
  };
  fill(fill, 0);
}

template <class F>
void enumerate_char_matrices(int n, entry_t bound, F&& emit) {
  enumerate_char_matrices(n, -bound, bound, std::forward<F>(emit));
}

inline std::vector<char_matrix_cube> enumerate_char_matrices(int n, entry_t bound) {
  std::vector<char_matrix_cube> out;
  enumerate_char_matrices(n, bound, [&](const char_matrix_cube& c) { out.push_back(c); });
  return out;
}

}  // namespace bott
