#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "bott/semifree.hpp"

using namespace bott;

namespace {

struct rng {
  std::mt19937 gen;
  explicit rng(std::uint32_t seed) : gen(seed) {}
  entry_t range(entry_t lo, entry_t hi) {
    return lo + static_cast<entry_t>(gen() % static_cast<std::uint32_t>(hi - lo + 1));
  }
};

bott_matrix bott_from_twist_mask(int n, std::uint32_t pick, entry_t value) {
  int_matrix a = int_matrix::identity(n).negated();
  int s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a.at(i, j) = ((pick >> s++) & 1u) ? value : 0;
  return bott_matrix(std::move(a));
}

}  // namespace

TEST_CASE("circle vectors must be primitive", "[semifree]") {
  CHECK_NOTHROW(circle_vector({1, 1}));
  CHECK_NOTHROW(circle_vector({2, -1}));
  CHECK_THROWS_AS(circle_vector({2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(circle_vector({0, 0}), std::invalid_argument);
}

TEST_CASE("weights at vertices", "[semifree]") {
  const char_matrix_cube c(int_matrix({{-1, 0}, {-2, -1}}));
  CHECK(weights_at_vertex(c, circle_vector({1, 1}), cube_vertex(2, 0b00)) ==
        std::vector<entry_t>{1, 1});
  CHECK(weights_at_vertex(c, circle_vector({1, 1}), cube_vertex(2, 0b11)) ==
        std::vector<entry_t>{-1, 1});

  const char_matrix_cube minus(int_matrix::identity(3).negated());
  CHECK(weights_at_vertex(minus, circle_vector({2, -1, 3}), cube_vertex(3, 0b111)) ==
        std::vector<entry_t>{-2, 1, -3});
}

TEST_CASE("semifree criterion", "[semifree]") {
  CHECK(is_semifree(char_matrix_cube(int_matrix::identity(2).negated()),
                    circle_vector({1, 1})));
  CHECK(is_semifree(char_matrix_cube(int_matrix({{-1, 0}, {-2, -1}})), circle_vector({1, 1})));
  CHECK_FALSE(
      is_semifree(char_matrix_cube(int_matrix({{-1, 0}, {-4, -1}})), circle_vector({1, 1})));
}

TEST_CASE("enumerating semifree vectors", "[semifree]") {
  {
    const auto vecs =
        enumerate_semifree_vectors(char_matrix_cube(int_matrix::identity(2).negated()));
    CHECK(vecs.size() == 4);
  }
  {
    const auto vecs =
        enumerate_semifree_vectors(char_matrix_cube(int_matrix({{-1, 0}, {-2, -1}})));
    REQUIRE(vecs.size() == 2);
    CHECK(std::find(vecs.begin(), vecs.end(), circle_vector({1, 1})) != vecs.end());
    CHECK(std::find(vecs.begin(), vecs.end(), circle_vector({-1, -1})) != vecs.end());
  }
  {
    const int_matrix a({{-1, 0, -2}, {0, -1, -2}, {0, 0, -1}});
    CHECK(enumerate_semifree_vectors(char_matrix_cube(a.transposed())).empty());
  }
}

TEST_CASE("semifree lists are closed under negation", "[semifree]") {
  enumerate_char_matrices(2, entry_t{2}, [&](const char_matrix_cube& cm) {
    const auto vecs = enumerate_semifree_vectors(cm);
    for (const auto& nu : vecs)
      CHECK(std::find(vecs.begin(), vecs.end(), nu.negated()) != vecs.end());
  });
}

TEST_CASE("unit factorization", "[semifree]") {
  {
    const int_matrix d({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}});
    const auto f = factorize_unit(d);
    REQUIRE(f.has_value());
    CHECK(f->steps == std::vector<factor_step>{{1, 0, 1}, {2, 0, 1}});
    CHECK(replay(*f) == d);
  }
  CHECK_FALSE(factorize_unit(int_matrix({{1, 0, 1}, {0, 1, 1}, {0, 0, 1}})).has_value());
  {
    const auto f = factorize_unit(int_matrix::identity(3));
    REQUIRE(f.has_value());
    CHECK(f->steps.empty());
  }
  CHECK_THROWS_AS(factorize_unit(int_matrix({{1, 0}, {1, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(factorize_unit(int_matrix({{2, 0}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("integer and signed factorizations", "[semifree]") {
  {
    const auto f = factorize_integer(int_matrix({{1, 2}, {0, 1}}));
    REQUIRE(f.has_value());
    CHECK(f->steps == std::vector<factor_step>{{1, 0, 2}});
  }
  CHECK_FALSE(factorize_integer(int_matrix({{1, 0, 1}, {0, 1, 1}, {0, 0, 1}})).has_value());
  CHECK(factorize_integer(int_matrix::identity(4)).has_value());

  const int_matrix with_minus({{1, -1}, {0, 1}});
  CHECK_FALSE(factorize_unit(with_minus).has_value());
  CHECK(factorize_signed_unit(with_minus).has_value());
  CHECK(factorize_integer(with_minus).has_value());
}

TEST_CASE("unit factorization implies integer factorization", "[semifree]") {
  rng r(13u);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(r.range(0, 3));
    int_matrix d = int_matrix::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) d.at(i, j) = r.range(0, 1);
    if (factorize_unit(d).has_value()) CHECK(factorize_integer(d).has_value());
    if (factorize_signed_unit(d).has_value()) CHECK(factorize_integer(d).has_value());
  }
}

TEST_CASE("semifree towers by factorization", "[semifree]") {
  CHECK(semifree_by_factorization(bott_matrix(int_matrix({{-1, -2, -2}, {0, -1, 0}, {0, 0, -1}}))));
  CHECK_FALSE(
      semifree_by_factorization(bott_matrix(int_matrix({{-1, 0, -2}, {0, -1, -2}, {0, 0, -1}}))));
  CHECK(semifree_by_factorization(bott_matrix::minus_identity(3)));

  // An odd entry makes E - A odd, which short-circuits before division.
  const bott_matrix odd(int_matrix({{-1, -1}, {0, -1}}));
  CHECK_FALSE(half_e_minus_a(odd).has_value());
  CHECK_FALSE(semifree_by_factorization(odd));
}

TEST_CASE("factorization criterion agrees with the weight oracle", "[semifree]") {
  for (int n = 1; n <= 3; ++n) {
    const int slots = n * (n - 1) / 2;
    for (std::uint32_t pick = 0; pick < (1u << slots); ++pick) {
      const bott_matrix a = bott_from_twist_mask(n, pick, -2);
      const bool by_fact = semifree_by_factorization(a);
      const bool by_weights =
          !enumerate_semifree_vectors(char_matrix_cube(a.matrix().transposed())).empty();
      CHECK(by_fact == by_weights);
    }
  }
}

TEST_CASE("a semifree subcircle forces the Bott tower shape", "[semifree]") {
  enumerate_char_matrices(2, entry_t{2}, [](const char_matrix_cube& cm) {
    if (enumerate_semifree_vectors(cm).empty()) return;
    CHECK(conjugate_to_upper_triangular(cm.lambda_star).has_value());
    bool minus_diag = true;
    for (int i = 0; i < cm.n(); ++i)
      if (cm.lambda_star.at(i, i) != -1) minus_diag = false;
    if (minus_diag) CHECK(is_bott_tower(cm));
  });
}

TEST_CASE("positive even twists: the convention gap the census records", "[semifree]") {
  // a12 = +2 has a semifree subcircle by the weight oracle, passes the
  // sign-relaxed factorization, but fails the strict one.
  const bott_matrix a(int_matrix({{-1, 2}, {0, -1}}));
  const auto d = half_e_minus_a(a);
  REQUIRE(d.has_value());
  CHECK(*d == int_matrix({{1, -1}, {0, 1}}));
  CHECK_FALSE(factorize_unit(*d).has_value());
  CHECK(factorize_signed_unit(*d).has_value());
  CHECK_FALSE(enumerate_semifree_vectors(char_matrix_cube(a.matrix().transposed())).empty());
}
