#pragma once

// Graded cohomology rings of Bott towers and cube quasitorics on the
// square-free monomial basis, over the integers or mod 2 through a shared
// coefficient parameter. Elements live on the 2^n square-free monomials
// u_I; generator squares are eliminated eagerly through the stored rules.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "bott/intmat.hpp"
#include "bott/quasitoric.hpp"
#include "bott/semifree.hpp"

namespace bott {

/// Field with two elements.
struct mod2 {
  std::uint8_t v = 0;

  constexpr mod2() = default;
  constexpr explicit mod2(entry_t x) : v(static_cast<std::uint8_t>(x & 1)) {}

  friend constexpr mod2 operator+(mod2 a, mod2 b) { return mod2(a.v ^ b.v); }
  friend constexpr mod2 operator-(mod2 a, mod2 b) { return mod2(a.v ^ b.v); }
  friend constexpr mod2 operator*(mod2 a, mod2 b) { return mod2(a.v & b.v); }
  constexpr mod2 operator-() const { return *this; }
  friend constexpr bool operator==(mod2, mod2) = default;
};

inline entry_t coefficient_to_int(entry_t c) { return c; }
inline entry_t coefficient_to_int(mod2 c) { return c.v; }

namespace detail {

// Exactness guard: no in-range ring product gets anywhere near this, while
// divergent rewriting doubles coefficients and crosses it long before an
// int64 could wrap.
inline bool coefficient_out_of_range(entry_t c) {
  constexpr entry_t limit = entry_t{1} << 40;
  return c > limit || c < -limit;
}

inline bool coefficient_out_of_range(mod2) { return false; }

}  // namespace detail

/// Linear combination of square-free monomials u_I, keyed by the subset mask.
template <class Coeff>
class ring_element {
 public:
  ring_element() = default;

  static ring_element monomial(std::uint32_t mask, Coeff c = Coeff(1)) {
    ring_element e;
    e.add(mask, c);
    return e;
  }

  void add(std::uint32_t mask, Coeff c) {
    if (c == Coeff{}) return;
    auto [it, inserted] = terms_.try_emplace(mask, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second == Coeff{}) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::uint32_t, Coeff>& terms() const { return terms_; }

  ring_element operator+(const ring_element& o) const {
    ring_element r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, c);
    return r;
  }

  ring_element scaled(Coeff s) const {
    ring_element r;
    for (const auto& [m, c] : terms_) r.add(m, s * c);
    return r;
  }

  friend bool operator==(const ring_element&, const ring_element&) = default;

 private:
  std::map<std::uint32_t, Coeff> terms_;
};

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

/// Finite-rank graded ring on n degree-two generators with one rewriting
/// rule per generator square. Products are normalized onto the square-free
/// basis by eagerly replacing squares; for the triangular rule shapes
/// produced by Bott matrices this provably terminates, and a step budget
/// guards presentations outside that class. max_degree below n models the
/// quotient killing all longer monomials (used by test harnesses).
template <class Coeff>
class graded_ring {
 public:
  graded_ring() = default;

  graded_ring(int n, std::vector<ring_element<Coeff>> square_rules, int max_degree = -1)
      : n_(n),
        rules_(std::move(square_rules)),
        max_degree_(max_degree < 0 ? n : max_degree) {
    detail::check_arg(n >= 1 && n <= 16, "graded_ring: generator count out of range");
    detail::check_arg(static_cast<int>(rules_.size()) == n,
                      "graded_ring: need one square rule per generator");
    for (const auto& rule : rules_)
      for (const auto& [mask, c] : rule.terms())
        detail::check_arg(std::popcount(mask) == 2 && mask < (1u << n),
                          "graded_ring: square rules must be square-free of degree 4");
  }

  /// Ring of a Bott tower: u_k^2 = sum_{i<k} a_{ik} u_i u_k.
  static graded_ring from_bott(const bott_matrix& a) {
    const int n = a.n();
    std::vector<ring_element<Coeff>> rules(n);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < k; ++i)
        rules[k].add((1u << i) | (1u << k), Coeff(a.twist(i, k)));
    return graded_ring(n, std::move(rules));
  }

  /// Ring of a cube quasitoric with reduced submatrix L: the Stanley-Reisner
  /// relation of the k-th opposite facet pair eliminates the k-th near-side
  /// class and leaves u_k^2 = -L_kk * sum_{j != k} L_kj u_j u_k.
  static graded_ring from_char_matrix(const char_matrix_cube& c) {
    const int n = c.n();
    std::vector<ring_element<Coeff>> rules(n);
    for (int k = 0; k < n; ++k) {
      const entry_t dk = c.lambda_star.at(k, k);
      detail::check_arg(dk == 1 || dk == -1,
                        "graded_ring: diagonal of the reduced submatrix must be a unit");
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        rules[k].add((1u << j) | (1u << k), Coeff(-dk * c.lambda_star.at(k, j)));
      }
    }
    return graded_ring(n, std::move(rules));
  }

  int generator_count() const { return n_; }
  int max_degree() const { return max_degree_; }
  const ring_element<Coeff>& square_rule(int k) const { return rules_[k]; }

  ring_element<Coeff> generator(int k) const {
    return ring_element<Coeff>::monomial(1u << k);
  }

  /// Additive rank of the degree-2q component (count of basis monomials,
  /// clipped by the truncation degree).
  std::int64_t graded_rank(int q) const {
    return q <= max_degree_ ? binomial(n_, q) : 0;
  }

  ring_element<Coeff> multiply(const ring_element<Coeff>& a,
                               const ring_element<Coeff>& b) const {
    ring_element<Coeff> out;
    long budget = 1'000'000;
    std::array<std::uint8_t, 16> counts{};
    for (const auto& [ma, ca] : a.terms()) {
      for (const auto& [mb, cb] : b.terms()) {
        counts.fill(0);
        for (int i = 0; i < n_; ++i)
          counts[i] = static_cast<std::uint8_t>(((ma >> i) & 1u) + ((mb >> i) & 1u));
        reduce(counts, ca * cb, out, budget);
      }
    }
    return out;
  }

  ring_element<Coeff> product(const std::vector<ring_element<Coeff>>& factors) const {
    ring_element<Coeff> acc = ring_element<Coeff>::monomial(0);
    for (const auto& f : factors) acc = multiply(acc, f);
    return acc;
  }

  /// u_1 u_2 ... u_n, the top class when the ring is untruncated.
  ring_element<Coeff> top_product() const {
    std::vector<ring_element<Coeff>> gens;
    for (int k = 0; k < n_; ++k) gens.push_back(generator(k));
    return product(gens);
  }

  friend bool operator==(const graded_ring&, const graded_ring&) = default;

 private:
  void reduce(std::array<std::uint8_t, 16>& counts, Coeff coeff,
              ring_element<Coeff>& out, long& budget) const {
    if (coeff == Coeff{}) return;
    if (detail::coefficient_out_of_range(coeff))
      throw std::runtime_error(
          "graded_ring::multiply: coefficient left the exact range; "
          "presentation does not normalize");
    int sq = -1;
    for (int i = n_ - 1; i >= 0; --i) {
      if (counts[i] >= 2) {
        sq = i;
        break;
      }
    }
    if (sq < 0) {
      std::uint32_t mask = 0;
      int size = 0;
      for (int i = 0; i < n_; ++i) {
        if (counts[i]) {
          mask |= 1u << i;
          ++size;
        }
      }
      if (size <= max_degree_) out.add(mask, coeff);
      return;
    }
    if (--budget <= 0)
      throw std::runtime_error(
          "graded_ring::multiply: rewriting budget exhausted; "
          "presentation does not normalize");
    counts[sq] -= 2;
    for (const auto& [mask, c] : rules_[sq].terms()) {
      auto next = counts;
      for (int i = 0; i < n_; ++i) next[i] += static_cast<std::uint8_t>((mask >> i) & 1u);
      reduce(next, coeff * c, out, budget);
    }
    counts[sq] += 2;
  }

  int n_ = 0;
  std::vector<ring_element<Coeff>> rules_;
  int max_degree_ = 0;
};

using ring_z = graded_ring<entry_t>;
using ring_z2 = graded_ring<mod2>;
using element_z = ring_element<entry_t>;
using element_z2 = ring_element<mod2>;

/// Bott-quadratic test for a mod-2 ring: some ordering of the generators
/// puts every square rule in the shape x_k^2 = sum of x_i x_k with i earlier
/// than k, and the product of all generators is nonzero. The ordering search
/// matches the matrix statement, where triangularity is only reached after a
/// permutation conjugation.
inline bool is_bq_algebra(const ring_z2& r) {
  const int n = r.generator_count();
  bool shaped = false;
  for_each_permutation(n, [&](const std::vector<int>& order) {
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p) pos[order[p]] = p;
    for (int k = 0; k < n; ++k) {
      for (const auto& [mask, c] : r.square_rule(k).terms()) {
        if (!((mask >> k) & 1u)) return true;  // term misses its own generator
        const int other = std::countr_zero(mask ^ (1u << k));
        if (pos[other] >= pos[k]) return true;
      }
    }
    shaped = true;
    return false;
  });
  return shaped && !r.top_product().is_zero();
}

/// Basis of square-zero degree-two classes found by bounded brute force;
/// column k of `coefficients` expresses the k-th class in the generators.
struct square_zero_basis {
  int_matrix coefficients;
  entry_t bound = 0;
};

namespace detail {

// Row rank by fraction-free elimination.
inline int integer_rank(std::vector<std::vector<entry_t>> rows, int cols) {
  int rank = 0;
  int col = 0;
  while (rank < static_cast<int>(rows.size()) && col < cols) {
    int p = rank;
    while (p < static_cast<int>(rows.size()) && rows[p][col] == 0) ++p;
    if (p == static_cast<int>(rows.size())) {
      ++col;
      continue;
    }
    std::swap(rows[rank], rows[p]);
    for (int i = rank + 1; i < static_cast<int>(rows.size()); ++i) {
      const entry_t f = rows[i][col], g = rows[rank][col];
      if (f == 0) continue;
      for (int j = col; j < cols; ++j) rows[i][j] = rows[i][j] * g - rows[rank][j] * f;
    }
    ++rank;
    ++col;
  }
  return rank;
}

}  // namespace detail

/// Searches degree-two elements with coefficients in [-bound, bound] for n
/// square-zero classes forming a unimodular change of basis. Absence at a
/// given bound is not a proof of non-existence; the bound is recorded in the
/// result for reporting. Candidates are deduplicated to primitive vectors
/// with positive leading coefficient.
inline std::optional<square_zero_basis> find_square_zero_basis(const ring_z& r,
                                                               entry_t bound) {
  detail::check_arg(bound >= 1, "find_square_zero_basis: bound must be >= 1");
  const int n = r.generator_count();

  std::vector<std::vector<entry_t>> candidates;
  std::vector<entry_t> vec(n, -bound);
  for (;;) {
    entry_t g = 0;
    for (entry_t v : vec) g = std::gcd(g, v);
    if (g == 1) {
      int lead = 0;
      while (vec[lead] == 0) ++lead;
      if (vec[lead] > 0) {
        element_z x;
        for (int i = 0; i < n; ++i) x.add(1u << i, vec[i]);
        if (r.multiply(x, x).is_zero()) candidates.push_back(vec);
      }
    }
    int i = n - 1;
    while (i >= 0 && vec[i] == bound) vec[i--] = -bound;
    if (i < 0) break;
    ++vec[i];
  }

  std::vector<int> chosen;
  auto extend = [&](auto&& self, int start) -> bool {
    if (static_cast<int>(chosen.size()) == n) {
      int_matrix m(n);
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) m.at(i, k) = candidates[chosen[k]][i];
      const entry_t d = det(m);
      return d == 1 || d == -1;
    }
    for (int idx = start; idx < static_cast<int>(candidates.size()); ++idx) {
      chosen.push_back(idx);
      std::vector<std::vector<entry_t>> rows;
      for (int c : chosen) rows.push_back(candidates[c]);
      if (detail::integer_rank(std::move(rows), n) == static_cast<int>(chosen.size()) &&
          self(self, idx + 1))
        return true;
      chosen.pop_back();
    }
    return false;
  };

  if (!extend(extend, 0)) return std::nullopt;

  int_matrix m(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) m.at(i, k) = candidates[chosen[k]][i];
  return square_zero_basis{std::move(m), bound};
}

/// Outcome of the product-of-spheres ring test. The decision is the integer
/// factorization of (E - A)/2; the basis read off the factored matrix is
/// independently verified to square to zero with nonzero top product.
struct product_iso {
  bool isomorphic = false;
  std::optional<factorization> steps;
  std::optional<int_matrix> basis;  // column k = coefficients of x_k
};

inline product_iso iso_to_product_test(const bott_matrix& a) {
  const auto d = half_e_minus_a(a);
  if (!d) return {};
  auto steps = factorize_integer(*d);
  if (!steps) return {};

  const ring_z ring = ring_z::from_bott(a);
  const int n = a.n();
  std::vector<element_z> basis;
  for (int k = 0; k < n; ++k) {
    element_z x;
    for (int j = 0; j < n; ++j) x.add(1u << j, d->at(j, k));
    detail::check_internal(ring.multiply(x, x).is_zero(),
                           "iso_to_product_test: witness class has nonzero square");
    basis.push_back(std::move(x));
  }
  detail::check_internal(!ring.product(basis).is_zero(),
                         "iso_to_product_test: witness top product vanished");
  return {true, std::move(steps), *d};
}

struct face_counts {
  std::int64_t f0 = 0;  // facets
  std::int64_t f1 = 0;  // codimension-2 faces
};

/// Face counts forced on the quotient polytope when the mod-2 ring is
/// Bott-quadratic of rank n: f0 = 2n, f1 = 2n(n-1).
inline face_counts expected_face_counts(int n) {
  detail::check_arg(n >= 2, "expected_face_counts: need n >= 2");
  return {2ll * n, 2ll * n * (n - 1)};
}

struct low_betti {
  std::int64_t b2 = 0;
  std::int64_t b4 = 0;
};

inline low_betti betti_from_face_counts(std::int64_t f0, std::int64_t f1, int n) {
  detail::check_arg(n >= 2, "betti_from_face_counts: need n >= 2");
  return {f0 - n, f1 - (n - 1) * f0 + binomial(n, n - 2)};
}

}  // namespace bott
