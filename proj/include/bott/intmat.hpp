#pragma once

// Exact integer matrix kernel: determinants, principal minors, permutation
// conjugation, and the principal-minor normal form used by the Bott tower
// recognizers. Everything here is desk scale (rank <= 8, small entries), so
// plain 64-bit arithmetic is exact throughout; no floating point anywhere.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bott {

using entry_t = std::int64_t;

/// A verified internal invariant failed. Always a bug, never bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

namespace detail {

inline void check_arg(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

inline void check_internal(bool ok, const char* msg) {
  if (!ok) throw internal_error(msg);
}

}  // namespace detail

/// Dense square matrix over the integers, row-major.
class int_matrix {
 public:
  int_matrix() = default;

  explicit int_matrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {
    detail::check_arg(n >= 1, "int_matrix: size must be positive");
  }

  explicit int_matrix(const std::vector<std::vector<entry_t>>& rows)
      : int_matrix(static_cast<int>(rows.size())) {
    for (int i = 0; i < n_; ++i) {
      detail::check_arg(static_cast<int>(rows[i].size()) == n_,
                        "int_matrix: rows must form a square matrix");
      for (int j = 0; j < n_; ++j) at(i, j) = rows[i][j];
    }
  }

  static int_matrix identity(int n) {
    int_matrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int n() const { return n_; }

  entry_t& at(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  entry_t at(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  std::vector<entry_t> column(int j) const {
    std::vector<entry_t> c(n_);
    for (int i = 0; i < n_; ++i) c[i] = at(i, j);
    return c;
  }

  std::vector<std::vector<entry_t>> rows() const {
    std::vector<std::vector<entry_t>> r(n_);
    for (int i = 0; i < n_; ++i) {
      r[i].assign(data_.begin() + static_cast<std::size_t>(i) * n_,
                  data_.begin() + static_cast<std::size_t>(i + 1) * n_);
    }
    return r;
  }

  int_matrix transposed() const {
    int_matrix t(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  int_matrix negated() const {
    int_matrix m = *this;
    for (auto& e : m.data_) e = -e;
    return m;
  }

  void swap_rows(int i, int j) {
    for (int k = 0; k < n_; ++k) std::swap(at(i, k), at(j, k));
  }

  /// Submatrix on the given (0-based, strictly increasing) row/column indices.
  int_matrix submatrix(const std::vector<int>& idx) const {
    const int k = static_cast<int>(idx.size());
    int_matrix s(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) s.at(i, j) = at(idx[i], idx[j]);
    return s;
  }

  friend bool operator==(const int_matrix&, const int_matrix&) = default;

 private:
  int n_ = 0;
  std::vector<entry_t> data_;
};

inline int_matrix operator*(const int_matrix& a, const int_matrix& b) {
  detail::check_arg(a.n() == b.n(), "matrix product: size mismatch");
  int_matrix c(a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int k = 0; k < a.n(); ++k) {
      const entry_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < a.n(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

namespace detail {

inline entry_t det_cofactor(const int_matrix& m) {
  const int n = m.n();
  if (n == 1) return m.at(0, 0);
  if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  entry_t acc = 0;
  std::vector<int> rest;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    int_matrix sub(n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        sub.at(r - 1, cc++) = m.at(r, c);
      }
    }
    const entry_t term = m.at(0, j) * det_cofactor(sub);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

// Fraction-free (Bareiss) elimination; every division is exact over the
// integers, and intermediates are minors of the input.
inline entry_t det_bareiss(int_matrix m) {
  const int n = m.n();
  entry_t sign = 1;
  entry_t prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

}  // namespace detail

/// Exact determinant. Cofactor expansion below rank 5, Bareiss above.
inline entry_t det(const int_matrix& a) {
  return a.n() <= 4 ? detail::det_cofactor(a) : detail::det_bareiss(a);
}

/// Principal minor on the index subset encoded as a bit mask (bit i = index i).
inline entry_t principal_minor(const int_matrix& a, std::uint32_t mask) {
  detail::check_arg(mask < (1u << a.n()), "principal_minor: index out of range");
  if (mask == 0) return 1;  // empty minor convention
  std::vector<int> idx;
  for (int i = 0; i < a.n(); ++i)
    if (mask & (1u << i)) idx.push_back(i);
  return det(a.submatrix(idx));
}

/// Principal minor on an explicit set of 0-based indices.
inline entry_t principal_minor(const int_matrix& a, std::vector<int> subset) {
  std::uint32_t mask = 0;
  for (int i : subset) {
    detail::check_arg(i >= 0 && i < a.n(), "principal_minor: index out of range");
    mask |= 1u << i;
  }
  return principal_minor(a, mask);
}

/// Bijection of {0..n-1}; images[i] is the image of i.
class permutation {
 public:
  permutation() = default;

  explicit permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<int> seen(images_.size(), 0);
    for (int v : images_) {
      detail::check_arg(v >= 0 && v < static_cast<int>(images_.size()) && !seen[v]++,
                        "permutation: images must be a bijection");
    }
  }

  static permutation identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return permutation(std::move(im));
  }

  static permutation reversal(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = n - 1 - i;
    return permutation(std::move(im));
  }

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  permutation inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < n(); ++i) im[images_[i]] = i;
    return permutation(std::move(im));
  }

  bool is_identity() const {
    for (int i = 0; i < n(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  friend bool operator==(const permutation&, const permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Visit all permutations of {0..n-1} in lexicographic order of their image
/// vectors. The visitor returns false to stop early.
template <class F>
void for_each_permutation(int n, F&& visit) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  do {
    if (!visit(im)) return;
  } while (std::next_permutation(im.begin(), im.end()));
}

/// P(sigma)^{-1} A P(sigma): simultaneous row/column permutation, entrywise
/// result(i, j) = A(sigma(i), sigma(j)).
inline int_matrix conjugate(const int_matrix& a, const permutation& sigma) {
  detail::check_arg(a.n() == sigma.n(), "conjugate: size mismatch");
  int_matrix r(a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) r.at(i, j) = a.at(sigma(i), sigma(j));
  return r;
}

inline bool is_unipotent_upper_triangular(const int_matrix& m) {
  for (int i = 0; i < m.n(); ++i) {
    if (m.at(i, i) != 1) return false;
    for (int j = 0; j < i; ++j)
      if (m.at(i, j) != 0) return false;
  }
  return true;
}

/// Shape test for the cyclic normal form: unit diagonal, nonzero entries at
/// (i, i+1) for i < n-1 and at (n-1, 0), zero elsewhere. Defined for n >= 2.
inline bool is_cyclic_form(const int_matrix& m) {
  const int n = m.n();
  if (n < 2) return false;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool slot = (j == i + 1) || (i == n - 1 && j == 0);
      if (i == j) {
        if (m.at(i, j) != 1) return false;
      } else if (slot) {
        if (m.at(i, j) == 0) return false;
      } else if (m.at(i, j) != 0) {
        return false;
      }
    }
  }
  return true;
}

/// Builds the cyclic-form matrix with the given off-diagonal sequence b,
/// b[i] at (i, i+1) and b[n-1] at (n-1, 0).
inline int_matrix cyclic_form_matrix(const std::vector<entry_t>& b) {
  const int n = static_cast<int>(b.size());
  detail::check_arg(n >= 2, "cyclic_form_matrix: need n >= 2");
  int_matrix m = int_matrix::identity(n);
  for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = b[i];
  m.at(n - 1, 0) = b[n - 1];
  return m;
}

enum class minor_form_kind { upper_triangular, cyclic, not_applicable };

struct minor_form {
  minor_form_kind kind = minor_form_kind::not_applicable;
  std::optional<permutation> sigma;  // witnessing conjugation, when applicable
  std::vector<entry_t> b;            // cyclic off-diagonal sequence, cyclic only
};

/// True when every proper (nonempty, not full) principal minor equals 1.
inline bool proper_principal_minors_all_one(const int_matrix& a) {
  const std::uint32_t full = (1u << a.n()) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask)
    if (principal_minor(a, mask) != 1) return false;
  return true;
}

/// Classifies a matrix whose proper principal minors are all 1: conjugate by
/// a permutation either to a unipotent upper triangular matrix (det 1) or to
/// the cyclic form with nonzero off-diagonal entries (det != 1). Matrices
/// failing the minor hypothesis report not_applicable (a value, not an
/// error; census code filters on it). The witness permutation is the
/// lexicographically smallest one, and is verified by replay before being
/// returned. Rank-1 matrices with det != 1 report cyclic with b = (a11).
inline minor_form minor_normal_form(const int_matrix& a) {
  if (!proper_principal_minors_all_one(a)) return {};

  const int n = a.n();
  const entry_t d = det(a);
  minor_form out;
  if (d == 1) {
    for_each_permutation(n, [&](const std::vector<int>& im) {
      permutation s{im};
      if (is_unipotent_upper_triangular(conjugate(a, s))) {
        out.kind = minor_form_kind::upper_triangular;
        out.sigma = std::move(s);
        return false;
      }
      return true;
    });
    detail::check_internal(out.sigma.has_value(),
                           "minor_normal_form: no triangularizing permutation (det 1)");
    return out;
  }

  if (n == 1) {
    out.kind = minor_form_kind::cyclic;
    out.sigma = permutation::identity(1);
    out.b = {a.at(0, 0)};
    return out;
  }

  for_each_permutation(n, [&](const std::vector<int>& im) {
    permutation s{im};
    const int_matrix m = conjugate(a, s);
    if (is_cyclic_form(m)) {
      out.kind = minor_form_kind::cyclic;
      out.sigma = std::move(s);
      out.b.resize(n);
      for (int i = 0; i + 1 < n; ++i) out.b[i] = m.at(i, i + 1);
      out.b[n - 1] = m.at(n - 1, 0);
      return false;
    }
    return true;
  });
  detail::check_internal(out.sigma.has_value(),
                         "minor_normal_form: no cyclic witness (det != 1)");
  return out;
}

/// Adjugate via cofactors; a * adjugate(a) = det(a) * E.
inline int_matrix adjugate(const int_matrix& a) {
  const int n = a.n();
  int_matrix adj(n);
  if (n == 1) {
    adj.at(0, 0) = 1;
    return adj;
  }
  std::vector<int> rows, cols;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int_matrix sub(n - 1);
      int rr = 0;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        int cc = 0;
        for (int c = 0; c < n; ++c) {
          if (c == j) continue;
          sub.at(rr, cc++) = a.at(r, c);
        }
        ++rr;
      }
      const entry_t cof = ((i + j) % 2 == 0 ? 1 : -1) * det(sub);
      adj.at(j, i) = cof;  // transposed cofactor
    }
  }
  return adj;
}

/// Exact inverse of a matrix with determinant +-1.
inline int_matrix unimodular_inverse(const int_matrix& a) {
  const entry_t d = det(a);
  detail::check_internal(d == 1 || d == -1, "unimodular_inverse: |det| != 1");
  int_matrix inv = adjugate(a);
  if (d == -1) inv = inv.negated();
  return inv;
}

/// Solves a * x = rhs exactly for unimodular a.
inline std::vector<entry_t> solve_unimodular(const int_matrix& a,
                                             const std::vector<entry_t>& rhs) {
  detail::check_arg(static_cast<int>(rhs.size()) == a.n(),
                    "solve_unimodular: size mismatch");
  const int_matrix inv = unimodular_inverse(a);
  std::vector<entry_t> x(a.n(), 0);
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) x[i] += inv.at(i, j) * rhs[j];
  return x;
}

}  // namespace bott
