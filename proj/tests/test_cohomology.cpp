#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "bott/cohomology.hpp"

using namespace bott;

namespace {

struct rng {
  std::mt19937 gen;
  explicit rng(std::uint32_t seed) : gen(seed) {}
  entry_t range(entry_t lo, entry_t hi) {
    return lo + static_cast<entry_t>(gen() % static_cast<std::uint32_t>(hi - lo + 1));
  }
};

bott_matrix random_bott(rng& r, int n, entry_t lo, entry_t hi) {
  int_matrix a = int_matrix::identity(n).negated();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a.at(i, j) = r.range(lo, hi);
  return bott_matrix(std::move(a));
}

element_z random_element(rng& r, int n) {
  element_z e;
  for (int t = 0; t < 3; ++t)
    e.add(static_cast<std::uint32_t>(r.range(0, (1 << n) - 1)), r.range(-3, 3));
  return e;
}

}  // namespace

TEST_CASE("tower ring square rules", "[cohomology]") {
  for (entry_t m : {entry_t{-4}, entry_t{0}, entry_t{3}}) {
    const ring_z r = ring_z::from_bott(bott_matrix::hirzebruch(m));
    CHECK(r.square_rule(0).is_zero());
    element_z want;
    want.add(0b11, m);
    CHECK(r.square_rule(1) == want);
  }
  const ring_z free3 = ring_z::from_bott(bott_matrix::minus_identity(3));
  for (int k = 0; k < 3; ++k) CHECK(free3.square_rule(k).is_zero());
  for (int q = 0; q <= 3; ++q) CHECK(free3.graded_rank(q) == binomial(3, q));
}

TEST_CASE("ring from a reduced submatrix matches the tower ring", "[cohomology]") {
  rng r(14u);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(r.range(0, 4));
    const bott_matrix a = random_bott(r, n, -4, 4);
    const ring_z from_a = ring_z::from_bott(a);
    const ring_z from_l = ring_z::from_char_matrix(char_matrix_cube(a.matrix().transposed()));
    CHECK(from_a == from_l);
  }

  const ring_z2 twisted =
      ring_z2::from_char_matrix(char_matrix_cube(int_matrix({{-1, -2}, {-1, -1}})));
  CHECK(twisted.square_rule(0).is_zero());  // coefficient -2 vanishes mod 2
  element_z2 want;
  want.add(0b11, mod2(1));
  CHECK(twisted.square_rule(1) == want);
  // Normal forms exist mod 2: (u1 u2) * u2 = u1 u2^2 = u1 * u1 u2 = 0.
  const auto prod = twisted.multiply(element_z2::monomial(0b11), element_z2::monomial(0b10));
  CHECK(prod.is_zero());
}

TEST_CASE("multiplication normal forms", "[cohomology]") {
  const ring_z hirz = ring_z::from_bott(bott_matrix::hirzebruch(5));
  CHECK(hirz.multiply(element_z::monomial(0b01), element_z::monomial(0b10)) ==
        element_z::monomial(0b11));
  element_z m_u12;
  m_u12.add(0b11, 5);
  CHECK(hirz.multiply(element_z::monomial(0b10), element_z::monomial(0b10)) == m_u12);

  const ring_z free2 = ring_z::from_bott(bott_matrix::minus_identity(2));
  element_z u1_plus_u2;
  u1_plus_u2.add(0b01, 1);
  u1_plus_u2.add(0b10, 1);
  element_z twice;
  twice.add(0b11, 2);
  CHECK(free2.multiply(u1_plus_u2, u1_plus_u2) == twice);
}

TEST_CASE("multiplication is commutative and associative", "[cohomology]") {
  rng r(15u);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(r.range(0, 2));
    const ring_z ring = ring_z::from_bott(random_bott(r, n, -3, 3));
    const element_z a = random_element(r, n);
    const element_z b = random_element(r, n);
    const element_z c = random_element(r, n);
    CHECK(ring.multiply(a, b) == ring.multiply(b, a));
    CHECK(ring.multiply(ring.multiply(a, b), c) == ring.multiply(a, ring.multiply(b, c)));
  }
}

TEST_CASE("rewriting diverges outside the triangular class", "[cohomology]") {
  // u1^2 = -2 u1 u2 and u2^2 = -u1 u2 feed each other forever over Z.
  const ring_z r = ring_z::from_char_matrix(char_matrix_cube(int_matrix({{-1, -2}, {-1, -1}})));
  CHECK_THROWS_AS(r.multiply(element_z::monomial(0b11), element_z::monomial(0b01)),
                  std::runtime_error);
}

TEST_CASE("BQ recognition", "[cohomology]") {
  rng r(16u);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(r.range(0, 4));
    const ring_z2 ring = ring_z2::from_bott(random_bott(r, n, -4, 4));
    CHECK(is_bq_algebra(ring));
  }

  // Valid non-Bott matrices still give BQ algebras mod 2.
  CHECK(is_bq_algebra(
      ring_z2::from_char_matrix(char_matrix_cube(int_matrix({{-1, -2}, {-1, -1}})))));
  // An upper triangular reduced submatrix needs the reordering search.
  CHECK(is_bq_algebra(
      ring_z2::from_char_matrix(char_matrix_cube(int_matrix({{-1, -1}, {0, -1}})))));

  // x2^2 = x1 x3: the mixed term misses its own generator in every order.
  std::vector<element_z2> bad_rules(3);
  bad_rules[1].add(0b101, mod2(1));
  CHECK_FALSE(is_bq_algebra(ring_z2(3, bad_rules)));

  // Truncation kills the top product.
  std::vector<element_z2> ok_rules(3);
  ok_rules[1].add(0b011, mod2(1));
  CHECK(is_bq_algebra(ring_z2(3, ok_rules)));
  CHECK_FALSE(is_bq_algebra(ring_z2(3, ok_rules, 2)));
}

TEST_CASE("every valid cube matrix gives a BQ algebra mod 2", "[cohomology]") {
  enumerate_char_matrices(2, entry_t{2}, [](const char_matrix_cube& cm) {
    CHECK(is_bq_algebra(ring_z2::from_char_matrix(cm)));
  });
  enumerate_char_matrices(3, entry_t{1}, [](const char_matrix_cube& cm) {
    CHECK(is_bq_algebra(ring_z2::from_char_matrix(cm)));
  });
}

TEST_CASE("square-zero basis search", "[cohomology]") {
  {
    const auto basis =
        find_square_zero_basis(ring_z::from_bott(bott_matrix::minus_identity(3)), 1);
    REQUIRE(basis.has_value());
    const entry_t d = det(basis->coefficients);
    CHECK((d == 1 || d == -1));
  }
  {
    const ring_z ring = ring_z::from_bott(bott_matrix::hirzebruch(-4));
    const auto basis = find_square_zero_basis(ring, 2);
    REQUIRE(basis.has_value());
    for (int k = 0; k < 2; ++k) {
      element_z x;
      for (int j = 0; j < 2; ++j) x.add(1u << j, basis->coefficients.at(j, k));
      CHECK(ring.multiply(x, x).is_zero());
    }
  }
  CHECK_FALSE(find_square_zero_basis(ring_z::from_bott(bott_matrix::hirzebruch(1)), 8)
                  .has_value());
}

TEST_CASE("product ring recognition", "[cohomology]") {
  for (entry_t m = -10; m <= 10; ++m)
    CHECK(iso_to_product_test(bott_matrix::hirzebruch(m)).isomorphic == (m % 2 == 0));
  CHECK(iso_to_product_test(bott_matrix::minus_identity(4)).isomorphic);
  CHECK_FALSE(
      iso_to_product_test(bott_matrix(int_matrix({{-1, 0, -2}, {0, -1, -2}, {0, 0, -1}})))
          .isomorphic);
}

TEST_CASE("product recognition implies a bounded square-zero basis", "[cohomology]") {
  rng r(17u);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(r.range(0, 1));
    int_matrix a = int_matrix::identity(n).negated();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) a.at(i, j) = 2 * r.range(-2, 2);
    const bott_matrix bm(a);
    const product_iso iso = iso_to_product_test(bm);
    if (!iso.isomorphic) continue;
    entry_t bound = 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        bound = std::max(bound, iso.basis->at(i, j) < 0 ? -iso.basis->at(i, j)
                                                        : iso.basis->at(i, j));
    const ring_z ring = ring_z::from_bott(bm);
    const auto basis = find_square_zero_basis(ring, bound);
    REQUIRE(basis.has_value());

    // All pairwise products of distinct basis classes stay nonzero.
    std::vector<element_z> xs;
    for (int k = 0; k < n; ++k) {
      element_z x;
      for (int j = 0; j < n; ++j) x.add(1u << j, basis->coefficients.at(j, k));
      xs.push_back(std::move(x));
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) CHECK_FALSE(ring.multiply(xs[i], xs[j]).is_zero());
  }
}

TEST_CASE("face counts and low Betti numbers", "[cohomology]") {
  CHECK(expected_face_counts(2).f0 == 4);
  CHECK(expected_face_counts(2).f1 == 4);
  CHECK(expected_face_counts(3).f0 == 6);
  CHECK(expected_face_counts(3).f1 == 12);
  for (int n = 2; n <= 6; ++n) {
    const auto fc = expected_face_counts(n);
    const auto b = betti_from_face_counts(fc.f0, fc.f1, n);
    CHECK(b.b2 == n);
    CHECK(b.b4 == binomial(n, 2));
  }
  CHECK_THROWS_AS(expected_face_counts(1), std::invalid_argument);
}

TEST_CASE("cyclic reduced submatrices admit no rational square-zero class", "[cohomology]") {
  // With the off-diagonal sequence multiplying to (-1)^n * 2, the system
  // a_k^2 b_k = 2 a_k a_{k+1} (cyclic) has no nonzero integer solution.
  auto check_system = [](const std::vector<entry_t>& b) {
    const int n = static_cast<int>(b.size());
    std::vector<entry_t> a(n, -8);
    for (;;) {
      bool nonzero = false;
      for (entry_t v : a) nonzero = nonzero || v != 0;
      if (nonzero) {
        bool solves = true;
        for (int k = 0; k < n && solves; ++k)
          if (a[k] * a[k] * b[k] != 2 * a[k] * a[(k + 1) % n]) solves = false;
        CHECK_FALSE(solves);
      }
      int i = n - 1;
      while (i >= 0 && a[i] == 8) a[i--] = -8;
      if (i < 0) break;
      ++a[i];
    }
  };
  check_system({1, 2});
  check_system({2, 1});
  check_system({-1, -2});
  check_system({-2, -1});
  check_system({-1, -1, -2});
  check_system({-1, -2, -1});
  check_system({-2, -1, -1});
  check_system({1, 1, -2});
  check_system({-1, 1, 2});
}

TEST_CASE("graded ranks are binomial", "[cohomology]") {
  rng r(18u);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(r.range(0, 5));
    const ring_z ring = ring_z::from_bott(random_bott(r, n, -4, 4));
    for (int q = 0; q <= n; ++q) CHECK(ring.graded_rank(q) == binomial(n, q));
    CHECK_FALSE(ring.top_product().is_zero());
  }
}
